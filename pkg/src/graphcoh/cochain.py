"""Cube cochain complexes of graphs with algebra coefficients.

Each subset s of the edge set contributes one tensor power of the
algebra, one factor per connected component of the spanning subgraph;
adding an edge to s gives a per-edge map (multiplication of two tensor
factors, or the identity / twist on a same-component edge), and the
signed sum of the per-edge maps is the differential.  Everything is
sliced by internal degree up front: the differential is degree
preserving, so the complex is block diagonal over (cohomological
degree i, internal degree j).
"""

from __future__ import annotations

from itertools import combinations, product
from typing import NamedTuple, Sequence

from .algebra import Endomorphism, GradedAlgebra
from .errors import InputError, ResourceCapError
from .graph import ComponentPartition, EdgeSubset, Graph
from .linalg import SparseIntMatrix
from .polynomial import IntPolynomial


class EnhancedState(NamedTuple):
    """One basis tensor: an edge subset plus a basis label per component.

    labels[c] is the algebra basis index assigned to component c in the
    canonical (minimal-vertex) component order.
    """

    mask: int
    labels: tuple[int, ...]


def edge_sign(xi: Sequence) -> int:
    """Sign of a cube edge labeled over {0, 1, '*'} with exactly one '*'.

    Counts the 1s before the '*': odd count gives -1.
    """
    stars = [pos for pos, x in enumerate(xi) if x == "*"]
    if len(stars) != 1:
        raise InputError(f"cube edge label needs exactly one '*', got {len(stars)}")
    ones = sum(1 for x in xi[: stars[0]] if x == 1)
    return -1 if ones & 1 else 1


def _mask_sign(mask: int, e: int) -> int:
    return -1 if (mask & ((1 << e) - 1)).bit_count() & 1 else 1


class AlgebraDimError(InputError):
    def __init__(self, algebra_dim: int, twist_dim: int):
        super().__init__(f"twist is {twist_dim}x{twist_dim} but the algebra has dim {algebra_dim}")


def _apply_edge(g: Graph, A: GradedAlgebra, twist: Endomorphism | None,
                part1: ComponentPartition, part2: ComponentPartition,
                reps1: list[int], e: int,
                labels: tuple[int, ...]) -> list[tuple[tuple[int, ...], int]]:
    """Image of one basis tensor under the per-edge map, as (labels, coeff)."""
    u, v = g.edges[e]
    cu, cv = part1.component_of[u], part1.component_of[v]
    if cu == cv:
        # same-component edge: identity, or the twist on every factor
        if twist is None:
            return [(labels, 1)]
        out: list[tuple[tuple[int, ...], int]] = []
        factor_terms = []
        for l in labels:
            col = [(k, twist.matrix[k][l]) for k in range(A.dim) if twist.matrix[k][l]]
            if not col:
                return []
            factor_terms.append(col)
        for choice in product(*factor_terms):
            coeff = 1
            for _, c in choice:
                coeff *= c
            out.append((tuple(k for k, _ in choice), coeff))
        return out
    # merge: multiply the two touched factors, keep the rest
    new_id = [part2.component_of[reps1[c]] for c in range(part1.k)]
    merged = new_id[cu]
    base = [0] * part2.k
    for c in range(part1.k):
        if c != cu and c != cv:
            base[new_id[c]] = labels[c]
    out = []
    for k, coeff in A.product_terms(labels[cu], labels[cv]):
        t2 = base[:]
        t2[merged] = k
        out.append((tuple(t2), coeff))
    return out


def _component_reps(part: ComponentPartition) -> list[int]:
    reps = [-1] * part.k
    for v, c in enumerate(part.component_of):
        if reps[c] < 0:
            reps[c] = v
    return reps


class BigradedComplex:
    """Integer cochain complex of a graph, sliced by internal degree."""

    def __init__(self, graph: Graph, algebra: GradedAlgebra, twist: Endomorphism | None,
                 bases: dict[tuple[int, int], list[EnhancedState]],
                 diffs: dict[tuple[int, int], SparseIntMatrix]):
        self.graph = graph
        self.algebra = algebra
        self.twist = twist
        self.bases = bases
        self.diffs = diffs
        self.n = graph.num_edges

    def internal_degrees(self) -> list[int]:
        return sorted({j for _, j in self.bases})

    def dim(self, i: int, j: int) -> int:
        return len(self.bases.get((i, j), ()))

    def basis(self, i: int, j: int) -> list[EnhancedState]:
        return self.bases.get((i, j), [])

    def matrix(self, i: int, j: int) -> SparseIntMatrix:
        got = self.diffs.get((i, j))
        if got is not None:
            return got
        return SparseIntMatrix.zero(self.dim(i + 1, j), self.dim(i, j))

    def total_dim(self, i: int) -> int:
        return sum(len(b) for (ii, _), b in self.bases.items() if ii == i)

    def chain_q_dims(self) -> list[IntPolynomial]:
        """q-dimension polynomial of each chain level C^0..C^n."""
        out = []
        for i in range(self.n + 1):
            counts: dict[int, int] = {}
            for (ii, j), b in self.bases.items():
                if ii == i:
                    counts[j] = len(b)
            if counts:
                coeffs = [0] * (max(counts) + 1)
                for j, c in counts.items():
                    coeffs[j] = c
                out.append(IntPolynomial(coeffs))
            else:
                out.append(IntPolynomial.zero())
        return out

    def chain_euler(self) -> IntPolynomial:
        total = IntPolynomial.zero()
        for i, p in enumerate(self.chain_q_dims()):
            total = total - p if i & 1 else total + p
        return total

    def d_squared_violation(self) -> tuple[int, int] | None:
        """First (i, j) with d(i+1,j) . d(i,j) != 0, or None."""
        for i in range(self.n):
            for j in self.internal_degrees():
                if self.dim(i, j) == 0:
                    continue
                prod_ = self.matrix(i + 1, j) @ self.matrix(i, j)
                if not prod_.is_zero():
                    return (i, j)
        return None

    def to_json_dict(self) -> dict:
        """Diagnostic dump: dimensions plus sparse matrix triplets."""
        return {
            "num_edges": self.n,
            "twisted": self.twist is not None,
            "dims": [
                {"i": i, "j": j, "dim": len(b)}
                for (i, j), b in sorted(self.bases.items())
            ],
            "matrices": [
                {"i": i, "j": j, "rows": mat.num_rows, "cols": mat.num_cols,
                 "triplets": mat.triplets()}
                for (i, j), mat in sorted(self.diffs.items())
            ],
        }


def _level_masks(n: int) -> list[list[int]]:
    """Edge-subset masks grouped by popcount, ascending mask within a level."""
    levels: list[list[int]] = [[] for _ in range(n + 1)]
    for i in range(n + 1):
        masks = [sum(1 << e for e in combo) for combo in combinations(range(n), i)]
        levels[i] = sorted(masks)
    return levels


def build_complex(g: Graph, A: GradedAlgebra, twist: Endomorphism | None = None,
                  max_block_dim: int | None = None,
                  with_differentials: bool = True) -> BigradedComplex:
    """Assemble the bigraded complex of a graph over an algebra.

    twist=None gives the plain construction; an endomorphism makes every
    same-component per-edge map act by it on all tensor factors.
    max_block_dim refuses the build if some (i, j) block would exceed it.
    """
    if twist is not None and twist.dim != A.dim:
        raise AlgebraDimError(A.dim, twist.dim)
    n = g.num_edges
    degrees = A.degrees
    m = A.dim
    levels = _level_masks(n)
    parts: dict[int, ComponentPartition] = {}
    reps: dict[int, list[int]] = {}
    for level in levels:
        for mask in level:
            p = g.components_of_mask(mask)
            parts[mask] = p
            reps[mask] = _component_reps(p)

    bases: dict[tuple[int, int], list[EnhancedState]] = {}
    index: dict[tuple[int, int], dict[EnhancedState, int]] = {}
    for i, level in enumerate(levels):
        for mask in level:
            k = parts[mask].k
            for labels in product(range(m), repeat=k):
                j = sum(degrees[l] for l in labels)
                state = EnhancedState(mask, labels)
                lst = bases.setdefault((i, j), [])
                index.setdefault((i, j), {})[state] = len(lst)
                lst.append(state)

    if max_block_dim is not None:
        worst = max(((len(b), key) for key, b in bases.items()), default=(0, None))
        if worst[0] > max_block_dim:
            i, j = worst[1]
            raise ResourceCapError(
                f"block (i={i}, j={j}) has dimension {worst[0]}, "
                f"exceeding the cap of {max_block_dim}"
            )

    diffs: dict[tuple[int, int], SparseIntMatrix] = {}
    if with_differentials and n:
        triplets: dict[tuple[int, int], list[tuple[int, int, int]]] = {}
        for i in range(n):
            for mask in levels[i]:
                part1 = parts[mask]
                reps1 = reps[mask]
                for e in range(n):
                    if mask >> e & 1:
                        continue
                    sign = _mask_sign(mask, e)
                    mask2 = mask | (1 << e)
                    part2 = parts[mask2]
                    for labels in product(range(m), repeat=part1.k):
                        j = sum(degrees[l] for l in labels)
                        col = index[(i, j)][EnhancedState(mask, labels)]
                        images = _apply_edge(g, A, twist, part1, part2, reps1, e, labels)
                        if not images:
                            continue
                        row_index = index[(i + 1, j)]
                        acc = triplets.setdefault((i, j), [])
                        for labels2, coeff in images:
                            row = row_index[EnhancedState(mask2, labels2)]
                            acc.append((row, col, sign * coeff))
        for (i, j), trips in triplets.items():
            diffs[(i, j)] = SparseIntMatrix.from_triplets(
                len(bases.get((i + 1, j), ())), len(bases[(i, j)]), trips
            )
    return BigradedComplex(g, A, twist, bases, diffs)


def state_basis(g: Graph, A: GradedAlgebra, s: EdgeSubset) -> list[EnhancedState]:
    """Canonical enhanced-state basis of the chain group of one subset."""
    if s.size != g.num_edges:
        raise InputError(f"subset length {s.size} != edge count {g.num_edges}")
    part = g.spanning_components(s)
    return [EnhancedState(s.mask, labels) for labels in product(range(A.dim), repeat=part.k)]


def per_edge_map(g: Graph, A: GradedAlgebra, s1: EdgeSubset, e: int,
                 twist: Endomorphism | None = None) -> SparseIntMatrix:
    """Matrix of the single cube-edge map from subset s1 to s1 + {e}.

    Rows and columns are indexed by the canonical enhanced-state bases of
    the two subsets (see state_basis); no sign is applied here.
    """
    if e in s1:
        raise InputError(f"edge {e} already belongs to the subset")
    if not 0 <= e < g.num_edges:
        raise InputError(f"edge index {e} out of range")
    part1 = g.spanning_components(s1)
    s2 = s1.with_edge(e)
    part2 = g.spanning_components(s2)
    reps1 = _component_reps(part1)
    src = state_basis(g, A, s1)
    dst_index = {st: i for i, st in enumerate(state_basis(g, A, s2))}
    trips = []
    for col, state in enumerate(src):
        for labels2, coeff in _apply_edge(g, A, twist, part1, part2, reps1, e, state.labels):
            trips.append((dst_index[EnhancedState(s2.mask, labels2)], col, coeff))
    return SparseIntMatrix.from_triplets(len(dst_index), len(src), trips)
