"""Executable structural checks: each theorem about the construction
becomes a pass/fail property over a concrete (graph, algebra) instance.

Every check is report-valued and pure; failures carry a witness string
small enough to read.  Randomized checks take an explicit seed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product

from .algebra import (Endomorphism, GradedAlgebra, unit_complement,
                      verify_algebra, verify_endomorphism)
from .chromatic import chromatic_state_sum, evaluate_at_qdim
from .cochain import (BigradedComplex, EnhancedState, _apply_edge, _component_reps,
                      build_complex)
from .graph import Graph, null_graph
from .homology import GroupInvariant, cohomology, graded_euler, groups_equal, kunneth_predict
from .linalg import SparseIntMatrix, smith_normal_form


@dataclass(frozen=True)
class CheckReport:
    name: str
    instance: str
    passed: bool
    witness: str | None = None

    def line(self) -> str:
        tag = "PASS" if self.passed else "FAIL"
        extra = f" [{self.witness}]" if (not self.passed and self.witness) else ""
        return f"{tag} {self.name} {self.instance}{extra}"

    def to_json_dict(self) -> dict:
        return {"check": self.name, "instance": self.instance,
                "pass": self.passed, "witness": self.witness}


def _instance(g: Graph, A: GradedAlgebra, twist: Endomorphism | None = None,
              label: str | None = None) -> str:
    base = label or f"graph(v={g.num_vertices},e={g.num_edges})"
    s = f"{base} over {A.name}"
    if twist is not None:
        s += f" twist={twist.name}"
    return s


def _ok(name: str, instance: str) -> CheckReport:
    return CheckReport(name, instance, True)


def _fail(name: str, instance: str, witness: str) -> CheckReport:
    return CheckReport(name, instance, False, witness)


def check_d_squared(g: Graph, A: GradedAlgebra, twist: Endomorphism | None = None,
                    label: str | None = None) -> CheckReport:
    """The signed sum of per-edge maps squares to zero, blockwise."""
    inst = _instance(g, A, twist, label)
    cx = build_complex(g, A, twist)
    bad = cx.d_squared_violation()
    if bad is None:
        return _ok("d_squared", inst)
    i, j = bad
    prod_ = cx.matrix(i + 1, j) @ cx.matrix(i, j)
    return _fail("d_squared", inst, f"d^2 != 0 at (i={i}, j={j}): nnz={prod_.nnz}")


def check_cube_faces(g: Graph, A: GradedAlgebra, twist: Endomorphism | None = None,
                     label: str | None = None) -> CheckReport:
    """Per-edge maps commute around every cube face, before signs."""
    inst = _instance(g, A, twist, label)
    n = g.num_edges
    parts = {}
    reps = {}
    for mask in range(1 << n):
        parts[mask] = g.components_of_mask(mask)
        reps[mask] = _component_reps(parts[mask])

    def composed(mask, labels, e_first, e_second):
        mid_mask = mask | (1 << e_first)
        acc: dict[tuple[int, ...], int] = {}
        first = _apply_edge(g, A, twist, parts[mask], parts[mid_mask],
                            reps[mask], e_first, labels)
        for mid_labels, c1 in first:
            second = _apply_edge(g, A, twist, parts[mid_mask],
                                 parts[mid_mask | (1 << e_second)],
                                 reps[mid_mask], e_second, mid_labels)
            for out_labels, c2 in second:
                new = acc.get(out_labels, 0) + c1 * c2
                if new:
                    acc[out_labels] = new
                elif out_labels in acc:
                    del acc[out_labels]
        return acc

    m = A.dim
    for mask in range(1 << n):
        free = [e for e in range(n) if not mask >> e & 1]
        if len(free) < 2:
            continue
        k = parts[mask].k
        for a_idx in range(len(free)):
            for b_idx in range(a_idx + 1, len(free)):
                e1, e2 = free[a_idx], free[b_idx]
                for labels in product(range(m), repeat=k):
                    if composed(mask, labels, e1, e2) != composed(mask, labels, e2, e1):
                        return _fail("cube_faces", inst,
                                     f"face (s={mask:#x}, e={e1}, e'={e2}) does not commute "
                                     f"on state {labels}")
    return _ok("cube_faces", inst)


def check_edge_order(g: Graph, A: GradedAlgebra, trials: int = 5, seed: int = 0,
                     label: str | None = None) -> CheckReport:
    """Cohomology is unchanged under random edge reorderings."""
    inst = _instance(g, A, label=label)
    base = cohomology(build_complex(g, A))
    rng = random.Random(seed)
    n = g.num_edges
    for t in range(trials):
        perm = list(range(n))
        rng.shuffle(perm)
        other = cohomology(build_complex(g.permute_edges(perm), A))
        if not groups_equal(base, other):
            return _fail("edge_order", inst, f"trial {t}, perm {perm}: groups differ")
    return _ok("edge_order", inst)


def check_euler(g: Graph, A: GradedAlgebra, twist: Endomorphism | None = None,
                label: str | None = None) -> CheckReport:
    """Graded Euler characteristic equals the chromatic polynomial at q dim.

    Checks the identity at both chain level and cohomology level, and the
    deletion-contraction identity of the chain-level characteristic for
    every edge.
    """
    inst = _instance(g, A, twist, label)
    cx = build_complex(g, A, twist)
    from_chains = cx.chain_euler()
    from_groups = graded_euler(cohomology(cx))
    target = evaluate_at_qdim(chromatic_state_sum(g), A.q_dim())
    if from_groups != target:
        return _fail("euler", inst,
                     f"cohomology euler {from_groups} != P_G(q dim) = {target}")
    if from_chains != target:
        return _fail("euler", inst,
                     f"chain euler {from_chains} != P_G(q dim) = {target}")
    for e in range(g.num_edges):
        deleted = build_complex(g.delete_edge(e), A, with_differentials=False).chain_euler()
        contracted_g = g.contract_edge(e).graph
        contracted = build_complex(contracted_g, A, with_differentials=False).chain_euler()
        if from_chains != deleted - contracted:
            return _fail("euler", inst,
                         f"deletion-contraction fails at edge {e}: "
                         f"{from_chains} != {deleted} - {contracted}")
    return _ok("euler", inst)


def _inclusion_matrix(cx_from: BigradedComplex, cx_to: BigradedComplex,
                      i_from: int, i_to: int, j: int, top_bit: int) -> SparseIntMatrix:
    """Matrix of the state map (mask, labels) -> (mask | top_bit, labels)."""
    src = cx_from.basis(i_from, j)
    dst_index = {st: r for r, st in enumerate(cx_to.basis(i_to, j))}
    trips = []
    for c, st in enumerate(src):
        trips.append((dst_index[EnhancedState(st.mask | top_bit, st.labels)], c, 1))
    return SparseIntMatrix.from_triplets(len(dst_index), len(src), trips)


def _projection_matrix(cx_from: BigradedComplex, cx_to: BigradedComplex,
                       i: int, j: int, top_bit: int) -> SparseIntMatrix:
    """Matrix of the state map killing subsets that contain the last edge."""
    src = cx_from.basis(i, j)
    dst_index = {st: r for r, st in enumerate(cx_to.basis(i, j))}
    trips = []
    for c, st in enumerate(src):
        if not st.mask & top_bit:
            trips.append((dst_index[st], c, 1))
    return SparseIntMatrix.from_triplets(len(dst_index), len(src), trips)


def check_ses(g: Graph, A: GradedAlgebra, e: int, label: str | None = None) -> CheckReport:
    """Degreewise short exactness of contraction -> full -> deletion.

    With the chosen edge reordered last, the re-expansion map from the
    contraction and the projection onto the deletion are chain maps, the
    first is a split injection, the second is surjective, and the image
    of one is exactly the kernel of the other in every bidegree.
    """
    inst = _instance(g, A, label=label) + f" e={e}"
    n = g.num_edges
    if not 0 <= e < n:
        return _fail("ses", inst, f"edge index {e} out of range")
    # reorder so the distinguished edge is last
    perm = [i if i < e else i - 1 for i in range(n)]
    perm[e] = n - 1
    gg = g.permute_edges(perm)
    top_bit = 1 << (n - 1)
    g_del = gg.delete_edge(n - 1)
    g_con = gg.contract_edge(n - 1).graph

    cx = build_complex(gg, A)
    cx_del = build_complex(g_del, A)
    cx_con = build_complex(g_con, A)

    keys = set(cx.bases) | {(i + 1, j) for i, j in cx_con.bases} | set(cx_del.bases)
    for i, j in sorted(keys):
        dim_mid = cx.dim(i, j)
        alpha = _inclusion_matrix(cx_con, cx, i - 1, i, j, top_bit)
        beta = _projection_matrix(cx, cx_del, i, j, top_bit)
        snf_a = smith_normal_form(alpha)
        snf_b = smith_normal_form(beta)
        if snf_a.rank != alpha.num_cols or any(d != 1 for d in snf_a.factors):
            return _fail("ses", inst, f"alpha not a split injection at (i={i}, j={j})")
        if snf_b.rank != beta.num_rows or any(d != 1 for d in snf_b.factors):
            return _fail("ses", inst, f"beta not surjective at (i={i}, j={j})")
        if not (beta @ alpha).is_zero():
            return _fail("ses", inst, f"beta . alpha != 0 at (i={i}, j={j})")
        if snf_a.rank + snf_b.rank != dim_mid:
            return _fail("ses", inst,
                         f"rank alpha + rank beta = {snf_a.rank}+{snf_b.rank} != "
                         f"dim {dim_mid} at (i={i}, j={j})")
        # chain-map squares
        alpha_next = _inclusion_matrix(cx_con, cx, i, i + 1, j, top_bit)
        if cx.matrix(i, j) @ alpha != alpha_next @ cx_con.matrix(i - 1, j):
            return _fail("ses", inst, f"alpha is not a chain map at (i={i}, j={j})")
        beta_next = _projection_matrix(cx, cx_del, i + 1, j, top_bit)
        if cx_del.matrix(i, j) @ beta != beta_next @ cx.matrix(i, j):
            return _fail("ses", inst, f"beta is not a chain map at (i={i}, j={j})")
    return _ok("ses", inst)


def check_loops_and_multiedges(g: Graph, A: GradedAlgebra,
                               label: str | None = None) -> CheckReport:
    """Loops kill everything; collapsing parallel edges changes nothing."""
    inst = _instance(g, A, label=label)
    groups = cohomology(build_complex(g, A))
    if g.has_loop():
        for i, grp in enumerate(groups):
            if not grp.is_trivial():
                return _fail("loops_multiedges", inst,
                             f"graph has a loop but H^{i} = {grp.render()}")
    collapsed = g.collapse_multi_edges()
    if collapsed.num_edges != g.num_edges:
        other = cohomology(build_complex(collapsed, A))
        if not groups_equal(groups, other):
            for i in range(max(len(groups), len(other))):
                a = groups[i] if i < len(groups) else GroupInvariant.trivial()
                b = other[i] if i < len(other) else GroupInvariant.trivial()
                if a != b:
                    return _fail("loops_multiedges", inst,
                                 f"H^{i}: {a.render()} != collapsed {b.render()}")
    return _ok("loops_multiedges", inst)


def _pendant_endpoint(g: Graph, e: int) -> int | None:
    """Degree-1 endpoint of edge e, or None if e is not pendant."""
    deg = [0] * g.num_vertices
    for u, v in g.edges:
        deg[u] += 1
        deg[v] += 1
    u, v = g.edges[e]
    if u != v:
        if deg[u] == 1:
            return u
        if deg[v] == 1:
            return v
    return None


def check_pendant(g: Graph, A: GradedAlgebra, e: int, label: str | None = None) -> CheckReport:
    """Contracting a pendant edge tensors the cohomology by the complement.

    H^{i,j}(G) must match the direct sum over the homogeneous complement
    basis b of H^{i, j - deg b}(G/e).
    """
    inst = _instance(g, A, label=label) + f" e={e}"
    if not A.is_unital:
        return _fail("pendant", inst, "algebra has no unit")
    if _pendant_endpoint(g, e) is None:
        return _fail("pendant", inst, f"edge {e} is not a pendant edge")
    comp_degrees = unit_complement(A).complement_degrees
    contracted = g.contract_edge(e).graph
    full = cohomology(build_complex(g, A))
    small = cohomology(build_complex(contracted, A))
    predicted = [
        GroupInvariant.trivial().direct_sum(*(grp.shift(d) for d in comp_degrees))
        for grp in small
    ]
    if not groups_equal(full, predicted):
        for i in range(max(len(full), len(predicted))):
            a = full[i] if i < len(full) else GroupInvariant.trivial()
            b = predicted[i] if i < len(predicted) else GroupInvariant.trivial()
            if a != b:
                return _fail("pendant", inst,
                             f"H^{i}: computed {a.render()} != predicted {b.render()}")
    return _ok("pendant", inst)


def check_kunneth(g1: Graph, g2: Graph, A: GradedAlgebra,
                  label: str | None = None) -> CheckReport:
    """Cohomology of a disjoint union matches the tensor/torsion formula."""
    inst = label or (f"graph(v={g1.num_vertices},e={g1.num_edges}) "
                     f"|_| graph(v={g2.num_vertices},e={g2.num_edges})")
    inst = f"{inst} over {A.name}"
    h1 = cohomology(build_complex(g1, A))
    h2 = cohomology(build_complex(g2, A))
    predicted = kunneth_predict(h1, h2)
    direct = cohomology(build_complex(g1.disjoint_union(g2), A))
    if not groups_equal(direct, predicted):
        for i in range(max(len(direct), len(predicted))):
            a = direct[i] if i < len(direct) else GroupInvariant.trivial()
            b = predicted[i] if i < len(predicted) else GroupInvariant.trivial()
            if a != b:
                return _fail("kunneth", inst,
                             f"H^{i}: direct {a.render()} != predicted {b.render()}")
    return _ok("kunneth", inst)


def check_algebra_valid(A: GradedAlgebra, label: str | None = None) -> CheckReport:
    report = verify_algebra(A)
    inst = label or A.name
    if report.ok:
        return _ok("algebra_valid", inst)
    return _fail("algebra_valid", inst, str(report))


def check_twist_valid(A: GradedAlgebra, twist: Endomorphism,
                      label: str | None = None) -> CheckReport:
    report = verify_endomorphism(A, twist)
    inst = f"{label or A.name} twist={twist.name}"
    if report.ok:
        return _ok("twist_valid", inst)
    return _fail("twist_valid", inst, str(report))


CHECK_NAMES = ("d_squared", "cube_faces", "edge_order", "euler", "ses",
               "loops_multiedges", "pendant", "kunneth")

# checks that remain valid for an arbitrary twist (the rest are
# statements about the untwisted differential)
TWISTED_SAFE = {"d_squared", "cube_faces", "euler"}


def run_checks(g: Graph, A: GradedAlgebra, twist: Endomorphism | None = None,
               names: tuple[str, ...] | None = None, seed: int = 0,
               trials: int = 5, label: str | None = None) -> list[CheckReport]:
    """Run the selected checks (default: all applicable) on one instance."""
    reports: list[CheckReport] = []
    reports.append(check_algebra_valid(A, label=label))
    if twist is not None:
        reports.append(check_twist_valid(A, twist, label=label))
    if not all(r.passed for r in reports):
        return sorted(reports, key=lambda r: (r.name, r.instance))

    twisted = twist is not None and not twist.is_identity()
    wanted = names or CHECK_NAMES
    for name in wanted:
        if twisted and name not in TWISTED_SAFE:
            continue
        if name == "d_squared":
            reports.append(check_d_squared(g, A, twist, label=label))
        elif name == "cube_faces":
            reports.append(check_cube_faces(g, A, twist, label=label))
        elif name == "edge_order":
            reports.append(check_edge_order(g, A, trials=trials, seed=seed, label=label))
        elif name == "euler":
            reports.append(check_euler(g, A, twist, label=label))
        elif name == "ses":
            reports.extend(check_ses(g, A, e, label=label) for e in range(g.num_edges))
        elif name == "loops_multiedges":
            reports.append(check_loops_and_multiedges(g, A, label=label))
        elif name == "pendant":
            if A.is_unital:
                reports.extend(
                    check_pendant(g, A, e, label=label)
                    for e in range(g.num_edges)
                    if _pendant_endpoint(g, e) is not None
                )
        elif name == "kunneth":
            reports.append(check_kunneth(g, null_graph(1), A,
                                         label=(label or "graph") + " |_| N1"))
        else:
            raise ValueError(f"unknown check {name!r}")
    return sorted(reports, key=lambda r: (r.name, r.instance))
