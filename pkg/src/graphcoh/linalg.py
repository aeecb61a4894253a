"""Exact integer matrices and Smith normal form.

Everything here runs over Python's arbitrary-precision integers; the
differential blocks of a cube complex are very sparse, so the Smith
reduction first grinds away at +-1 pivots with a Markowitz-style fill
heuristic and only hands the (usually tiny) remainder to the classical
dense algorithm with minimal-absolute-value pivot selection.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple, Sequence, Union


class SparseIntMatrix:
    """Immutable-by-convention sparse matrix: dict keyed by (row, col)."""

    __slots__ = ("num_rows", "num_cols", "entries")

    def __init__(self, num_rows: int, num_cols: int, entries: dict[tuple[int, int], int] | None = None):
        if num_rows < 0 or num_cols < 0:
            raise ValueError("negative matrix dimension")
        self.num_rows = num_rows
        self.num_cols = num_cols
        self.entries: dict[tuple[int, int], int] = entries or {}

    @classmethod
    def from_triplets(cls, num_rows: int, num_cols: int,
                      triplets: Iterable[tuple[int, int, int]]) -> "SparseIntMatrix":
        acc: dict[tuple[int, int], int] = {}
        for r, c, v in triplets:
            if not (0 <= r < num_rows and 0 <= c < num_cols):
                raise ValueError(f"entry ({r},{c}) outside {num_rows}x{num_cols}")
            if v:
                key = (r, c)
                new = acc.get(key, 0) + v
                if new:
                    acc[key] = new
                elif key in acc:
                    del acc[key]
        return cls(num_rows, num_cols, acc)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "SparseIntMatrix":
        nr = len(rows)
        nc = len(rows[0]) if nr else 0
        acc = {}
        for r, row in enumerate(rows):
            if len(row) != nc:
                raise ValueError("ragged rows")
            for c, v in enumerate(row):
                if v:
                    acc[(r, c)] = int(v)
        return cls(nr, nc, acc)

    @classmethod
    def zero(cls, num_rows: int, num_cols: int) -> "SparseIntMatrix":
        return cls(num_rows, num_cols, {})

    @classmethod
    def identity(cls, n: int) -> "SparseIntMatrix":
        return cls(n, n, {(i, i): 1 for i in range(n)})

    @property
    def shape(self) -> tuple[int, int]:
        return (self.num_rows, self.num_cols)

    @property
    def nnz(self) -> int:
        return len(self.entries)

    def is_zero(self) -> bool:
        return not self.entries

    def get(self, r: int, c: int) -> int:
        return self.entries.get((r, c), 0)

    def triplets(self) -> list[tuple[int, int, int]]:
        return sorted((r, c, v) for (r, c), v in self.entries.items())

    def to_dense(self) -> list[list[int]]:
        dense = [[0] * self.num_cols for _ in range(self.num_rows)]
        for (r, c), v in self.entries.items():
            dense[r][c] = v
        return dense

    def transpose(self) -> "SparseIntMatrix":
        return SparseIntMatrix(self.num_cols, self.num_rows,
                               {(c, r): v for (r, c), v in self.entries.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseIntMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        return hash((self.shape, tuple(sorted(self.entries.items()))))

    def __matmul__(self, other: "SparseIntMatrix") -> "SparseIntMatrix":
        if self.num_cols != other.num_rows:
            raise ValueError(f"shape mismatch: {self.shape} @ {other.shape}")
        by_col: dict[int, list[tuple[int, int]]] = {}
        for (r, k), v in self.entries.items():
            by_col.setdefault(k, []).append((r, v))
        acc: dict[tuple[int, int], int] = {}
        for (k, c), w in other.entries.items():
            for r, v in by_col.get(k, ()):
                key = (r, c)
                new = acc.get(key, 0) + v * w
                if new:
                    acc[key] = new
                elif key in acc:
                    del acc[key]
        return SparseIntMatrix(self.num_rows, other.num_cols, acc)

    def __repr__(self):
        return f"SparseIntMatrix({self.num_rows}x{self.num_cols}, nnz={self.nnz})"


class SNFResult(NamedTuple):
    """Invariant factors d1 | d2 | ... of an integer matrix.

    Only nonzero diagonal entries are listed, so rank == len(factors).
    """

    factors: tuple[int, ...]
    rank: int


MatrixLike = Union[SparseIntMatrix, Sequence[Sequence[int]]]


def smith_normal_form(matrix: MatrixLike) -> SNFResult:
    if isinstance(matrix, SparseIntMatrix):
        items = matrix.entries.items()
    else:
        items = SparseIntMatrix.from_rows(matrix).entries.items()

    rows: dict[int, dict[int, int]] = {}
    col_rows: dict[int, set[int]] = {}
    units: set[tuple[int, int]] = set()
    for (r, c), v in items:
        rows.setdefault(r, {})[c] = v
        col_rows.setdefault(c, set()).add(r)
        if v == 1 or v == -1:
            units.add((r, c))

    ones = _eliminate_unit_pivots(rows, col_rows, units)

    if rows:
        row_ids = sorted(rows)
        col_ids = sorted({c for row in rows.values() for c in row})
        col_pos = {c: i for i, c in enumerate(col_ids)}
        dense = [[0] * len(col_ids) for _ in row_ids]
        for i, r in enumerate(row_ids):
            for c, v in rows[r].items():
                dense[i][col_pos[c]] = v
        tail = _dense_smith(dense)
    else:
        tail = []

    factors = (1,) * ones + tuple(tail)
    return SNFResult(factors, len(factors))


def _eliminate_unit_pivots(rows: dict[int, dict[int, int]],
                           col_rows: dict[int, set[int]],
                           units: set[tuple[int, int]]) -> int:
    """Pivot on +-1 entries until none are left; returns the pivot count.

    Each pivot contributes invariant factor 1 and strictly shrinks the
    matrix, leaving the remaining invariant factors untouched.
    """
    count = 0
    while units:
        # Markowitz cost (nnz_row - 1) * (nnz_col - 1); scan is cheap at
        # the block sizes produced by degree slicing.
        best = None
        best_cost = None
        for r, c in units:
            cost = (len(rows[r]) - 1) * (len(col_rows[c]) - 1)
            if best_cost is None or cost < best_cost:
                best, best_cost = (r, c), cost
                if cost == 0:
                    break
        r, c = best  # type: ignore[misc]
        pivot_row = rows.pop(r)
        pv = pivot_row.pop(c)
        for c2 in pivot_row:
            col_rows[c2].discard(r)
            units.discard((r, c2))
        targets = col_rows.pop(c)
        targets.discard(r)
        units.discard((r, c))
        for r2 in targets:
            row2 = rows[r2]
            q = row2.pop(c) * pv  # pv in {1,-1} so this is exact division
            units.discard((r2, c))
            for c2, v in pivot_row.items():
                new = row2.get(c2, 0) - q * v
                if new:
                    row2[c2] = new
                    col_rows[c2].add(r2)
                    if new == 1 or new == -1:
                        units.add((r2, c2))
                    else:
                        units.discard((r2, c2))
                else:
                    if c2 in row2:
                        del row2[c2]
                        col_rows[c2].discard(r2)
                        units.discard((r2, c2))
            if not row2:
                del rows[r2]
        count += 1
    return count


def _dense_smith(a: list[list[int]]) -> list[int]:
    """Classical Smith reduction with minimal-absolute-value pivots."""
    m = len(a)
    n = len(a[0]) if m else 0
    factors: list[int] = []
    t = 0
    while True:
        # find minimal-absolute-value nonzero entry in the corner
        pr = pc = -1
        pv = 0
        for r in range(t, m):
            row = a[r]
            for c in range(t, n):
                v = row[c]
                if v and (pv == 0 or abs(v) < abs(pv)):
                    pr, pc, pv = r, c, v
                    if abs(v) == 1:
                        break
            if abs(pv) == 1:
                break
        if pv == 0:
            break
        a[t], a[pr] = a[pr], a[t]
        if pc != t:
            for row in a:
                row[t], row[pc] = row[pc], row[t]

        while True:
            if not _dense_clear_col(a, m, t):
                continue
            if not _dense_clear_row(a, n, t):
                continue
            # row and column t are clear; enforce divisibility
            p = a[t][t]
            offender = None
            for r in range(t + 1, m):
                row = a[r]
                for c in range(t + 1, n):
                    if row[c] % p:
                        offender = r
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            # fold the offending row into row t; the next clearing pass
            # shrinks the pivot to a proper divisor
            arow = a[t]
            orow = a[offender]
            for c in range(t, n):
                arow[c] += orow[c]
        factors.append(abs(a[t][t]))
        t += 1
        if t >= m or t >= n:
            break
    return factors


def _dense_clear_col(a: list[list[int]], m: int, t: int) -> bool:
    """Clear column t below the pivot; False means the pivot changed."""
    p = a[t][t]
    for r in range(t + 1, m):
        v = a[r][t]
        if not v:
            continue
        q = v // p
        if q:
            row, prow = a[r], a[t]
            for c in range(t, len(row)):
                row[c] -= q * prow[c]
        if a[r][t]:
            # remainder is a strictly smaller pivot candidate
            a[t], a[r] = a[r], a[t]
            return False
    return True


def _dense_clear_row(a: list[list[int]], n: int, t: int) -> bool:
    """Clear row t right of the pivot; False means the pivot changed."""
    p = a[t][t]
    row = a[t]
    for c in range(t + 1, n):
        v = row[c]
        if not v:
            continue
        q = v // p
        if q:
            for r2 in range(t, len(a)):
                a[r2][c] -= q * a[r2][t]
        if row[c]:
            for r2 in range(t, len(a)):
                a[r2][t], a[r2][c] = a[r2][c], a[r2][t]
            return False
    return True


def matrix_rank(matrix: MatrixLike) -> int:
    return smith_normal_form(matrix).rank
