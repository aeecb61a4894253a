"""Finite multigraphs with an explicit edge ordering.

Loops and repeated edges are allowed.  The position of an edge in the
edge sequence is significant: it fixes the orientation of the cube of
edge subsets, so every operation here preserves edge order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from .errors import InputError


class GraphParseError(InputError):
    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class ComponentPartition(NamedTuple):
    """Connected components of a spanning subgraph.

    component_of[v] is the component id of vertex v; ids run 0..k-1 and
    are assigned in increasing order of each component's minimal vertex.
    """

    component_of: tuple[int, ...]
    k: int


class ContractionResult(NamedTuple):
    graph: "Graph"
    vertex_map: tuple[int, ...]
    was_loop: bool


@dataclass(frozen=True)
class EdgeSubset:
    """Subset of the edge set, as a bitmask over edge indices 0..size-1."""

    mask: int
    size: int

    def __post_init__(self):
        if self.size < 0:
            raise InputError("negative subset length")
        if not 0 <= self.mask < (1 << self.size):
            raise InputError(f"mask {self.mask:#x} out of range for {self.size} edges")

    @classmethod
    def empty(cls, size: int) -> "EdgeSubset":
        return cls(0, size)

    @classmethod
    def full(cls, size: int) -> "EdgeSubset":
        return cls((1 << size) - 1, size)

    @classmethod
    def from_indices(cls, indices: Iterable[int], size: int) -> "EdgeSubset":
        mask = 0
        for i in indices:
            if not 0 <= i < size:
                raise InputError(f"edge index {i} out of range")
            mask |= 1 << i
        return cls(mask, size)

    def __len__(self) -> int:
        return self.size

    def __contains__(self, i: int) -> bool:
        return 0 <= i < self.size and bool(self.mask >> i & 1)

    def indices(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.size) if self.mask >> i & 1)

    @property
    def num_edges(self) -> int:
        return self.mask.bit_count()

    def with_edge(self, i: int) -> "EdgeSubset":
        if not 0 <= i < self.size:
            raise InputError(f"edge index {i} out of range")
        return EdgeSubset(self.mask | (1 << i), self.size)


def _canonical_components(num_vertices: int, edges: Iterable[tuple[int, int]]) -> ComponentPartition:
    # Union-find; attaching the larger root under the smaller one makes
    # every root the minimal vertex of its component, so ids come out
    # canonically ordered for free.
    parent = list(range(num_vertices))

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            if ru > rv:
                ru, rv = rv, ru
            parent[rv] = ru

    ids: dict[int, int] = {}
    component_of = []
    for v in range(num_vertices):
        r = find(v)
        if r not in ids:
            ids[r] = len(ids)
        component_of.append(ids[r])
    return ComponentPartition(tuple(component_of), len(ids))


@dataclass(frozen=True)
class Graph:
    """Multigraph with 0-based vertex indices and an ordered edge sequence."""

    num_vertices: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.num_vertices < 0:
            raise InputError("negative vertex count")
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        object.__setattr__(self, "edges", edges)
        for idx, (u, v) in enumerate(edges):
            if not (0 <= u < self.num_vertices and 0 <= v < self.num_vertices):
                raise InputError(f"edge {idx} endpoint out of range: ({u}, {v})")

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def has_loop(self) -> bool:
        return any(u == v for u, v in self.edges)

    def spanning_components(self, s: EdgeSubset) -> ComponentPartition:
        """Components of the spanning subgraph using exactly the edges in s."""
        if s.size != len(self.edges):
            raise InputError(f"subset length {s.size} != edge count {len(self.edges)}")
        return self.components_of_mask(s.mask)

    def components_of_mask(self, mask: int) -> ComponentPartition:
        picked = (e for i, e in enumerate(self.edges) if mask >> i & 1)
        return _canonical_components(self.num_vertices, picked)

    def components(self) -> ComponentPartition:
        return _canonical_components(self.num_vertices, self.edges)

    def delete_edge(self, i: int) -> "Graph":
        if not 0 <= i < len(self.edges):
            raise InputError(f"edge index {i} out of range")
        return Graph(self.num_vertices, self.edges[:i] + self.edges[i + 1:])

    def contract_edge(self, i: int) -> ContractionResult:
        """Contract edge i, merging its endpoints into the smaller index.

        Loops and multi-edges created by the contraction are kept.
        Contracting a loop cannot merge anything; it returns the deletion
        with was_loop set so callers can tell the two cases apart.
        """
        if not 0 <= i < len(self.edges):
            raise InputError(f"edge index {i} out of range")
        u, v = self.edges[i]
        if u == v:
            identity = tuple(range(self.num_vertices))
            return ContractionResult(self.delete_edge(i), identity, True)
        if u > v:
            u, v = v, u
        # v disappears; vertices above v shift down by one.
        vmap = tuple(w if w < v else (u if w == v else w - 1) for w in range(self.num_vertices))
        new_edges = tuple(
            (vmap[a], vmap[b]) for j, (a, b) in enumerate(self.edges) if j != i
        )
        return ContractionResult(Graph(self.num_vertices - 1, new_edges), vmap, False)

    def permute_edges(self, perm: Sequence[int]) -> "Graph":
        """Return the same graph with edge i moved to position perm[i]."""
        n = len(self.edges)
        if len(perm) != n or sorted(perm) != list(range(n)):
            raise InputError("perm is not a permutation of the edge indices")
        new_edges: list[tuple[int, int] | None] = [None] * n
        for i, e in enumerate(self.edges):
            new_edges[perm[i]] = e
        return Graph(self.num_vertices, tuple(new_edges))  # type: ignore[arg-type]

    def disjoint_union(self, other: "Graph") -> "Graph":
        shift = self.num_vertices
        edges = self.edges + tuple((u + shift, v + shift) for u, v in other.edges)
        return Graph(self.num_vertices + other.num_vertices, edges)

    def collapse_multi_edges(self) -> "Graph":
        """Keep the first edge of every parallel class, preserving order."""
        seen: set[tuple[int, int]] = set()
        kept = []
        for u, v in self.edges:
            key = (u, v) if u <= v else (v, u)
            if key not in seen:
                seen.add(key)
                kept.append((u, v))
        return Graph(self.num_vertices, tuple(kept))


def null_graph(n: int) -> Graph:
    return Graph(n, ())


def path_graph(num_edges: int) -> Graph:
    return Graph(num_edges + 1, tuple((i, i + 1) for i in range(num_edges)))


def cycle_graph(length: int) -> Graph:
    if length < 1:
        raise InputError("cycle length must be >= 1")
    edges = tuple((i, (i + 1) % length) for i in range(length))
    return Graph(length, edges)


def star_graph(num_leaves: int) -> Graph:
    return Graph(num_leaves + 1, tuple((0, i + 1) for i in range(num_leaves)))


def triangle() -> Graph:
    return Graph(3, ((0, 1), (1, 2), (0, 2)))


def parse_graph(text: str) -> Graph:
    """Parse the line-oriented graph format.

    First non-comment line is `v <n>`, then one `e <u> <v>` per edge in
    order.  `#` starts a comment; blank lines are ignored.
    """
    num_vertices: int | None = None
    edges: list[tuple[int, int]] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if fields[0] == "v":
            if num_vertices is not None:
                raise GraphParseError(line_no, "duplicate 'v' line")
            if len(fields) != 2:
                raise GraphParseError(line_no, "expected 'v <n>'")
            try:
                num_vertices = int(fields[1])
            except ValueError:
                raise GraphParseError(line_no, f"bad vertex count {fields[1]!r}") from None
            if num_vertices < 0:
                raise GraphParseError(line_no, "vertex count must be >= 0")
        elif fields[0] == "e":
            if num_vertices is None:
                raise GraphParseError(line_no, "'e' line before 'v' line")
            if len(fields) != 3:
                raise GraphParseError(line_no, "expected 'e <u> <v>'")
            try:
                u, v = int(fields[1]), int(fields[2])
            except ValueError:
                raise GraphParseError(line_no, "edge endpoints must be integers") from None
            if not (0 <= u < num_vertices and 0 <= v < num_vertices):
                raise GraphParseError(line_no, f"endpoint out of range: ({u}, {v})")
            edges.append((u, v))
        else:
            raise GraphParseError(line_no, f"unknown directive {fields[0]!r}")
    if num_vertices is None:
        raise GraphParseError(1, "missing 'v' line")
    return Graph(num_vertices, tuple(edges))


def load_graph(path) -> Graph:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read graph file {path}: {exc}") from None
    return parse_graph(text)


def format_graph(g: Graph) -> str:
    lines = [f"v {g.num_vertices}"]
    lines.extend(f"e {u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"
