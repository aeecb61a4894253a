import pytest
from hypothesis import given, strategies as st

import corpus
from graphcoh import EdgeSubset, Graph, GraphParseError, InputError, parse_graph
from graphcoh.graph import format_graph


def triangle():
    return Graph(3, ((0, 1), (1, 2), (0, 2)))


# ---------------------------------------------------------------------------
# construction and subsets

def test_endpoint_validation():
    with pytest.raises(InputError):
        Graph(2, ((0, 2),))
    with pytest.raises(InputError):
        Graph(-1, ())


def test_edge_subset_basics():
    s = EdgeSubset.from_indices([0, 2], 3)
    assert len(s) == 3
    assert s.num_edges == 2
    assert 0 in s and 1 not in s and 2 in s
    assert s.indices() == (0, 2)
    assert s.with_edge(1) == EdgeSubset.full(3)
    with pytest.raises(InputError):
        EdgeSubset(8, 3)
    with pytest.raises(InputError):
        EdgeSubset.from_indices([3], 3)


# ---------------------------------------------------------------------------
# spanning components

def test_components_of_triangle_subsets():
    g = triangle()
    assert g.spanning_components(EdgeSubset.empty(3)).k == 3
    assert g.spanning_components(EdgeSubset.full(3)).k == 1
    part = g.spanning_components(EdgeSubset.from_indices([0], 3))
    assert part.k == 2
    assert part.component_of == (0, 0, 1)


def test_components_length_mismatch():
    with pytest.raises(InputError):
        triangle().spanning_components(EdgeSubset.empty(2))


def test_component_ids_canonical_by_minimal_vertex():
    g = Graph(4, ((2, 3), (0, 1)))
    part = g.spanning_components(EdgeSubset.full(2))
    assert part.component_of == (0, 0, 1, 1)


def test_components_against_bfs_oracle():
    for g in corpus.random_graphs(count=20, seed=5):
        n = g.num_edges
        for mask in range(1 << n):
            part = g.components_of_mask(mask)
            indices = [i for i in range(n) if mask >> i & 1]
            assert part.k == corpus.bfs_component_count(g, indices)


def test_component_count_lower_bounds():
    for g in corpus.random_graphs(count=15, seed=9):
        base = g.components().k
        n = g.num_edges
        for mask in range(1 << n):
            k = g.components_of_mask(mask).k
            assert k >= g.num_vertices - mask.bit_count()
            assert k >= base


# ---------------------------------------------------------------------------
# deletion, contraction, permutation

def test_delete_edge():
    g = triangle()
    assert g.delete_edge(2).edges == ((0, 1), (1, 2))
    assert Graph(1, ((0, 0),)).delete_edge(0) == Graph(1, ())
    assert Graph(2, ((0, 1), (0, 1))).delete_edge(0).edges == ((0, 1),)
    with pytest.raises(InputError):
        g.delete_edge(3)


def test_contract_triangle_edge_gives_double_edge():
    result = triangle().contract_edge(0)
    assert not result.was_loop
    assert result.graph == Graph(2, ((0, 1), (0, 1)))
    assert result.vertex_map == (0, 0, 1)


def test_contract_path_edge():
    g = Graph(3, ((0, 1), (1, 2)))
    result = g.contract_edge(0)
    assert result.graph == Graph(2, ((0, 1),))


def test_contract_creates_loop_and_parallel_edges():
    g = Graph(3, ((0, 1), (0, 1), (1, 2), (0, 2)))
    result = g.contract_edge(0)
    assert result.graph.num_vertices == 2
    assert result.graph.edges == ((0, 0), (0, 1), (0, 1))


def test_contract_loop_is_deletion_with_flag():
    g = Graph(2, ((0, 0), (0, 1)))
    result = g.contract_edge(0)
    assert result.was_loop
    assert result.graph == Graph(2, ((0, 1),))
    assert result.vertex_map == (0, 1)


def test_contract_nonloop_preserves_connectivity():
    for g in corpus.random_graphs(count=15, seed=11):
        k = g.components().k
        for e, (u, v) in enumerate(g.edges):
            if u != v:
                assert g.contract_edge(e).graph.components().k == k


def test_permute_edges():
    g = triangle()
    assert g.permute_edges([0, 1, 2]) == g
    swapped = g.permute_edges([1, 0, 2])
    assert swapped.edges == ((1, 2), (0, 1), (0, 2))
    reverse = g.permute_edges([2, 1, 0])
    assert reverse.edges == ((0, 2), (1, 2), (0, 1))
    with pytest.raises(InputError):
        g.permute_edges([0, 0, 1])


@given(st.integers(0, 2))
def test_delete_then_reinsert_is_permutation(i):
    g = triangle()
    deleted = g.delete_edge(i)
    rebuilt = Graph(3, deleted.edges + (g.edges[i],))
    perm = [j for j in range(3) if j != i] + [i]
    inverse = [0] * 3
    for pos, j in enumerate(perm):
        inverse[j] = pos
    assert rebuilt.permute_edges(perm) == g or rebuilt == g.permute_edges(inverse)


# ---------------------------------------------------------------------------
# text format

def test_parse_and_format_round_trip():
    text = "# a triangle\nv 3\ne 0 1\ne 1 2\ne 0 2\n"
    g = parse_graph(text)
    assert g == triangle()
    assert parse_graph(format_graph(g)) == g


def test_parse_errors_carry_line_numbers():
    with pytest.raises(GraphParseError) as exc:
        parse_graph("v 2\ne 0 5\n")
    assert exc.value.line_no == 2
    with pytest.raises(GraphParseError) as exc:
        parse_graph("e 0 1\n")
    assert exc.value.line_no == 1
    with pytest.raises(GraphParseError) as exc:
        parse_graph("v 2\nv 3\n")
    assert exc.value.line_no == 2
    with pytest.raises(GraphParseError) as exc:
        parse_graph("v 2\nedge 0 1\n")
    assert exc.value.line_no == 2
    with pytest.raises(GraphParseError):
        parse_graph("# nothing\n")


def test_disjoint_union_shifts_second_block():
    g = triangle().disjoint_union(Graph(2, ((0, 1),)))
    assert g.num_vertices == 5
    assert g.edges == ((0, 1), (1, 2), (0, 2), (3, 4))


def test_collapse_multi_edges_keeps_first_and_order():
    g = Graph(3, ((0, 1), (1, 0), (1, 2), (0, 1)))
    assert g.collapse_multi_edges().edges == ((0, 1), (1, 2))
