"""Chromatic polynomials, by two independent algorithms.

chromatic_delete_contract recurses on P(G) = P(G-e) - P(G/e) with
multi-edge collapse, loop short-circuit and memoization; the state-sum
version enumerates all edge subsets.  Either can serve as an oracle for
the other, and composing with a graded dimension gives the predicted
graded Euler characteristic of the cochain complex.
"""

from __future__ import annotations

from .errors import ResourceCapError
from .graph import Graph
from .polynomial import IntPolynomial

DEFAULT_EDGE_CAP = 20


def _normalized_edges(edges) -> tuple[tuple[int, int], ...]:
    return tuple((u, v) if u <= v else (v, u) for u, v in edges)


def chromatic_delete_contract(g: Graph) -> IntPolynomial:
    """P_G in lambda via deletion-contraction, memoized on canonical keys."""
    memo: dict[tuple[int, tuple[tuple[int, int], ...]], IntPolynomial] = {}

    def go(nv: int, edges: tuple[tuple[int, int], ...]) -> IntPolynomial:
        if any(u == v for u, v in edges):
            return IntPolynomial.zero()
        simple = tuple(sorted(set(edges)))
        if not simple:
            return IntPolynomial.monomial(nv)
        key = (nv, simple)
        got = memo.get(key)
        if got is not None:
            return got
        u, v = simple[-1]
        deleted = simple[:-1]
        # contract (u, v) into u; v disappears, higher vertices shift down
        contracted = []
        for a, b in deleted:
            a2 = a if a < v else (u if a == v else a - 1)
            b2 = b if b < v else (u if b == v else b - 1)
            contracted.append((a2, b2) if a2 <= b2 else (b2, a2))
        result = go(nv, deleted) - go(nv - 1, tuple(contracted))
        memo[key] = result
        return result

    return go(g.num_vertices, _normalized_edges(g.edges))


def chromatic_state_sum(g: Graph, max_edges: int = DEFAULT_EDGE_CAP) -> IntPolynomial:
    """P_G in lambda as the signed sum of lambda^k(s) over all edge subsets."""
    n = g.num_edges
    if n > max_edges:
        raise ResourceCapError(f"state sum over {n} edges exceeds the cap of {max_edges}")
    coeffs = [0] * (g.num_vertices + 1)
    for mask in range(1 << n):
        k = g.components_of_mask(mask).k
        coeffs[k] += -1 if mask.bit_count() & 1 else 1
    return IntPolynomial(coeffs)


def evaluate_at_qdim(p: IntPolynomial, qdim: IntPolynomial | int) -> IntPolynomial:
    """Compose the lambda-polynomial with a graded dimension in q."""
    if isinstance(qdim, int):
        qdim = IntPolynomial.constant(qdim)
    return p(qdim)
