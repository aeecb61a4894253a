"""Integer cohomology of bigraded complexes, and abelian-group arithmetic.

Cohomology is read off blockwise: within one internal degree j the
complex is a finite free chain complex, so the free rank at level i is
dim - rank(d^i) - rank(d^{i-1}) and the torsion is the set of invariant
factors of d^{i-1} that exceed 1.  Groups are stored per internal
degree as (free rank, invariant-factor chain), which makes isomorphism
testing structural equality.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from .cochain import BigradedComplex
from .linalg import SNFResult, smith_normal_form
from .polynomial import IntPolynomial

__all__ = [
    "GroupInvariant",
    "cohomology",
    "graded_euler",
    "group_tensor",
    "group_tor",
    "kunneth_predict",
    "smith_normal_form",
    "SNFResult",
]


def _factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def invariant_factor_chain(orders: Iterable[int]) -> tuple[int, ...]:
    """Canonical invariant factors d1 | d2 | ... of a product of cyclic groups."""
    by_prime: dict[int, list[int]] = {}
    for n in orders:
        n = abs(int(n))
        if n in (0, 1):
            if n == 0:
                raise ValueError("cyclic order 0 is a free summand, not torsion")
            continue
        for p, e in _factorize(n).items():
            by_prime.setdefault(p, []).append(e)
    if not by_prime:
        return ()
    for exps in by_prime.values():
        exps.sort(reverse=True)
    length = max(len(exps) for exps in by_prime.values())
    chain = []
    for slot in range(length):
        d = 1
        for p, exps in by_prime.items():
            if slot < len(exps):
                d *= p ** exps[slot]
        chain.append(d)
    chain.reverse()  # ascending, d1 | d2 | ... holds by construction
    return tuple(chain)


class GroupInvariant:
    """Isomorphism type of a degree-graded finitely generated abelian group.

    Stored per internal degree j as a free rank plus an ascending
    invariant-factor chain; degrees with trivial content are omitted.
    """

    __slots__ = ("_parts",)

    def __init__(self, parts: Mapping[int, tuple[int, Sequence[int]]] | None = None):
        canon: dict[int, tuple[int, tuple[int, ...]]] = {}
        for j, (rank, torsion) in (parts or {}).items():
            tors = tuple(int(t) for t in torsion)
            if any(t < 2 for t in tors):
                raise ValueError("invariant factors must be >= 2")
            for a, b in zip(tors, tors[1:]):
                if b % a:
                    raise ValueError(f"broken divisibility chain {tors}")
            if rank < 0:
                raise ValueError("negative free rank")
            if rank or tors:
                canon[int(j)] = (int(rank), tors)
        self._parts = canon

    @classmethod
    def trivial(cls) -> "GroupInvariant":
        return cls()

    @classmethod
    def free(cls, ranks: Mapping[int, int]) -> "GroupInvariant":
        return cls({j: (r, ()) for j, r in ranks.items() if r})

    @classmethod
    def from_cyclic(cls, j: int, rank: int, orders: Iterable[int]) -> "GroupInvariant":
        return cls({j: (rank, invariant_factor_chain(orders))})

    def is_trivial(self) -> bool:
        return not self._parts

    def degrees(self) -> tuple[int, ...]:
        return tuple(sorted(self._parts))

    def rank(self, j: int) -> int:
        return self._parts.get(j, (0, ()))[0]

    def torsion(self, j: int) -> tuple[int, ...]:
        return self._parts.get(j, (0, ()))[1]

    def total_rank(self) -> int:
        return sum(r for r, _ in self._parts.values())

    def parts(self) -> list[tuple[int, int, tuple[int, ...]]]:
        return [(j, r, t) for j, (r, t) in sorted(self._parts.items())]

    def q_dim(self) -> IntPolynomial:
        """Generating polynomial of the free ranks; torsion contributes nothing."""
        if not self._parts:
            return IntPolynomial.zero()
        coeffs = [0] * (max(self._parts) + 1)
        for j, (r, _) in self._parts.items():
            coeffs[j] = r
        return IntPolynomial(coeffs)

    def shift(self, offset: int) -> "GroupInvariant":
        return GroupInvariant({j + offset: part for j, part in self._parts.items()})

    def direct_sum(self, *others: "GroupInvariant") -> "GroupInvariant":
        ranks: dict[int, int] = {}
        orders: dict[int, list[int]] = {}
        for grp in (self, *others):
            for j, (r, t) in grp._parts.items():
                ranks[j] = ranks.get(j, 0) + r
                orders.setdefault(j, []).extend(t)
        return GroupInvariant({
            j: (ranks.get(j, 0), invariant_factor_chain(orders.get(j, ())))
            for j in set(ranks) | set(orders)
        })

    def __eq__(self, other):
        if not isinstance(other, GroupInvariant):
            return NotImplemented
        return self._parts == other._parts

    def __hash__(self):
        return hash(tuple(sorted(self._parts.items())))

    def render(self) -> str:
        """Rendering grammar: Z^r{j} and Z_m{j} terms joined by ' + '."""
        if not self._parts:
            return "0"
        terms = []
        for j, (r, tors) in sorted(self._parts.items()):
            if r == 1:
                terms.append(f"Z{{{j}}}")
            elif r:
                terms.append(f"Z^{r}{{{j}}}")
            terms.extend(f"Z_{d}{{{j}}}" for d in tors)
        return " + ".join(terms)

    def to_json_list(self) -> list[dict]:
        return [{"j": j, "rank": r, "torsion": list(t)} for j, r, t in self.parts()]

    def __repr__(self):
        return f"GroupInvariant({self.render()})"


class ComplexAuditError(RuntimeError):
    pass


def cohomology(cx: BigradedComplex) -> list[GroupInvariant]:
    """Cohomology groups H^0..H^n of a bigraded complex, blockwise by degree.

    Raises ComplexAuditError if the differential does not square to zero.
    """
    bad = cx.d_squared_violation()
    if bad is not None:
        raise ComplexAuditError(f"d^2 != 0 at (i={bad[0]}, j={bad[1]})")
    snfs: dict[tuple[int, int], SNFResult] = {}

    def snf_at(i: int, j: int) -> SNFResult:
        key = (i, j)
        got = snfs.get(key)
        if got is None:
            mat = cx.diffs.get(key)
            got = smith_normal_form(mat) if mat is not None else SNFResult((), 0)
            snfs[key] = got
        return got

    out = []
    for i in range(cx.n + 1):
        parts: dict[int, tuple[int, tuple[int, ...]]] = {}
        for j in cx.internal_degrees():
            dim = cx.dim(i, j)
            if dim == 0:
                continue
            rank_out = snf_at(i, j).rank if i < cx.n else 0
            prev = snf_at(i - 1, j) if i > 0 else SNFResult((), 0)
            free = dim - rank_out - prev.rank
            if free < 0:
                raise ComplexAuditError(f"negative rank at (i={i}, j={j})")
            torsion = tuple(d for d in prev.factors if d > 1)
            if free or torsion:
                parts[j] = (free, torsion)
        out.append(GroupInvariant(parts))
    return out


def graded_euler(source: BigradedComplex | Sequence[GroupInvariant]) -> IntPolynomial:
    """Alternating sum over i of the q-dimensions of the cohomology groups."""
    groups = cohomology(source) if isinstance(source, BigradedComplex) else source
    total = IntPolynomial.zero()
    for i, grp in enumerate(groups):
        total = total - grp.q_dim() if i & 1 else total + grp.q_dim()
    return total


def group_tensor(g1: GroupInvariant, g2: GroupInvariant) -> GroupInvariant:
    """Graded tensor product; internal degrees add.

    Z^r (x) Z^s = Z^{rs}, Z^r (x) Z_d = Z_d^r, Z_d (x) Z_e = Z_gcd(d,e).
    """
    from math import gcd

    ranks: dict[int, int] = {}
    orders: dict[int, list[int]] = {}
    for j1, r1, t1 in g1.parts():
        for j2, r2, t2 in g2.parts():
            j = j1 + j2
            ranks[j] = ranks.get(j, 0) + r1 * r2
            bucket = orders.setdefault(j, [])
            bucket.extend(d for d in t2 for _ in range(r1))
            bucket.extend(d for d in t1 for _ in range(r2))
            bucket.extend(gcd(d, e) for d in t1 for e in t2)
    return GroupInvariant({
        j: (ranks.get(j, 0), invariant_factor_chain(orders.get(j, ())))
        for j in set(ranks) | set(orders)
    })


def group_tor(g1: GroupInvariant, g2: GroupInvariant) -> GroupInvariant:
    """Graded torsion product: Tor(Z_d, Z_e) = Z_gcd, Tor(free, -) = 0."""
    from math import gcd

    orders: dict[int, list[int]] = {}
    for j1, _, t1 in g1.parts():
        if not t1:
            continue
        for j2, _, t2 in g2.parts():
            if not t2:
                continue
            orders.setdefault(j1 + j2, []).extend(gcd(d, e) for d in t1 for e in t2)
    return GroupInvariant({
        j: (0, invariant_factor_chain(os)) for j, os in orders.items()
    })


def kunneth_predict(h1: Sequence[GroupInvariant], h2: Sequence[GroupInvariant]) -> list[GroupInvariant]:
    """Predicted cohomology of a disjoint union from the factors' cohomology.

    Level i collects the tensor products over p + q = i plus the torsion
    products over p + q = i + 1.
    """
    top = len(h1) + len(h2) - 2
    out = []
    for i in range(max(top + 1, 1)):
        summands = []
        for p in range(i + 1):
            q = i - p
            if p < len(h1) and q < len(h2):
                summands.append(group_tensor(h1[p], h2[q]))
        for p in range(i + 2):
            q = i + 1 - p
            if p < len(h1) and q < len(h2):
                summands.append(group_tor(h1[p], h2[q]))
        out.append(GroupInvariant.trivial().direct_sum(*summands))
    return out


def groups_equal(a: Sequence[GroupInvariant], b: Sequence[GroupInvariant]) -> bool:
    """Compare two cohomology sequences, ignoring trailing trivial groups."""
    la, lb = list(a), list(b)
    while la and la[-1].is_trivial():
        la.pop()
    while lb and lb[-1].is_trivial():
        lb.pop()
    return la == lb
