"""Immutable graph, cut, and group-partition types.

Vertices are dense 0-based integers.  Edges are unweighted, undirected,
stored in insertion order and addressed by index, so edge groups are sets
of edge indices.  A cut is a vertex subset S; an edge crosses the cut when
exactly one endpoint lies in S, which makes every quantity in this package
invariant under complementing S.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable, Optional


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..vertex_count-1."""

    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.vertex_count < 0:
            raise ValueError("vertex_count must be non-negative")
        object.__setattr__(self, "edges", tuple(tuple(e) for e in self.edges))
        seen = set()
        for idx, (u, v) in enumerate(self.edges):
            if u == v:
                raise ValueError(f"edge {idx} is a self-loop at vertex {u}")
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise ValueError(f"edge {idx} = ({u}, {v}) has an endpoint out of range")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise ValueError(f"duplicate edge {key} at index {idx}")
            seen.add(key)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def neighbors(self) -> tuple[frozenset[int], ...]:
        adj: list[set[int]] = [set() for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(s) for s in adj)

    @cached_property
    def adjacency_masks(self) -> tuple[int, ...]:
        """Per-vertex neighbor sets as bitmasks (bit u set iff u adjacent)."""
        masks = [0] * self.vertex_count
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    def degree(self, v: int) -> int:
        return len(self.neighbors[v])

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(self.neighbors[v]) for v in range(self.vertex_count))


def max_degree(g: Graph) -> int:
    """Largest vertex degree; 0 for edgeless graphs."""
    if g.vertex_count == 0:
        return 0
    return max(g.degrees)


@dataclass(frozen=True)
class Cut:
    """One side S of a cut (S, V \\ S).  The complement induces the same cut."""

    members: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "members", frozenset(self.members))

    @staticmethod
    def of(vertices: Iterable[int]) -> "Cut":
        return Cut(frozenset(vertices))

    @staticmethod
    def from_mask(mask: int) -> "Cut":
        members = set()
        v = 0
        while mask:
            if mask & 1:
                members.add(v)
            mask >>= 1
            v += 1
        return Cut(frozenset(members))

    def mask(self) -> int:
        m = 0
        for v in self.members:
            m |= 1 << v
        return m

    def complement(self, vertex_count: int) -> "Cut":
        return Cut(frozenset(range(vertex_count)) - self.members)

    def validate_for(self, g: Graph) -> None:
        for v in self.members:
            if not (0 <= v < g.vertex_count):
                raise ValueError(f"cut member {v} is not a vertex of the graph")

    def __str__(self) -> str:
        return "{" + ",".join(str(v) for v in sorted(self.members)) + "}"


def edge_crosses(cut: Cut, edge: tuple[int, int]) -> int:
    """1 iff exactly one endpoint of the edge lies in the cut set."""
    u, v = edge
    return int((u in cut.members) != (v in cut.members))


def cut_value(g: Graph, cut: Cut) -> int:
    """Number of edges with exactly one endpoint in the cut set."""
    cut.validate_for(g)
    members = cut.members
    return sum(1 for u, v in g.edges if (u in members) != (v in members))


def is_bipartite(g: Graph) -> tuple[bool, Optional[Cut]]:
    """BFS two-coloring.  Returns (True, one color class) or (False, None)."""
    color: dict[int, int] = {}
    for start in range(g.vertex_count):
        if start in color:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            u = queue.pop()
            for w in g.neighbors[u]:
                if w not in color:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return False, None
    side = frozenset(v for v, c in color.items() if c == 0)
    return True, Cut(side)


class PartitionKind(Enum):
    EDGES = "edges"
    NODES = "nodes"


@dataclass(frozen=True)
class GroupPartition:
    """Disjoint, exhaustive split of the edge set or vertex set into non-empty groups."""

    kind: PartitionKind
    groups: tuple[frozenset[int], ...]
    ground_size: int

    def __post_init__(self):
        object.__setattr__(self, "groups", tuple(frozenset(gr) for gr in self.groups))
        if len(self.groups) < 1:
            raise ValueError("partition needs at least one group")
        union: set[int] = set()
        total = 0
        for i, gr in enumerate(self.groups):
            if not gr:
                raise ValueError(f"group {i} is empty")
            total += len(gr)
            union |= gr
        if total != len(union):
            raise ValueError("groups overlap")
        if union != set(range(self.ground_size)):
            raise ValueError(
                f"groups must cover exactly the ground set 0..{self.ground_size - 1}"
            )

    @property
    def group_count(self) -> int:
        return len(self.groups)


def edge_groups(g: Graph, groups: Iterable[Iterable[int]]) -> GroupPartition:
    return GroupPartition(PartitionKind.EDGES, tuple(frozenset(gr) for gr in groups), g.edge_count)


def node_groups(g: Graph, groups: Iterable[Iterable[int]]) -> GroupPartition:
    return GroupPartition(PartitionKind.NODES, tuple(frozenset(gr) for gr in groups), g.vertex_count)
