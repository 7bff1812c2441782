"""Exact rational group utilities for the three utility models.

Edge utilities count group edges crossing the cut.  Node utilities credit
each vertex with its crossing incident edges, scaled either by the global
maximum degree (so per-vertex utility sits in [0, 1]) or by the vertex's
own degree.  Everything returns ``fractions.Fraction``; no floats here.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from typing import Iterable

from .errors import DegreeZeroError, ModelMismatchError
from .graphs import Cut, Graph, GroupPartition, PartitionKind, max_degree

ZERO = Fraction(0)


class UtilityModel(Enum):
    EDGE = "edge"
    NODE_MAXDEG = "node-maxdeg"
    NODE_OWNDEG = "node-owndeg"

    @property
    def partition_kind(self) -> PartitionKind:
        return PartitionKind.EDGES if self is UtilityModel.EDGE else PartitionKind.NODES

    @property
    def is_node_model(self) -> bool:
        return self is not UtilityModel.EDGE

    @staticmethod
    def parse(name: str) -> "UtilityModel":
        for model in UtilityModel:
            if model.value == name:
                return model
        raise ValueError(f"unknown utility model {name!r}")


def require_compatible(g: Graph, model: UtilityModel, partition: GroupPartition | None = None) -> None:
    if partition is not None and partition.kind is not model.partition_kind:
        raise ModelMismatchError(
            f"model {model.value} requires a {model.partition_kind.value} partition, "
            f"got {partition.kind.value}"
        )
    if model is UtilityModel.NODE_MAXDEG and max_degree(g) == 0:
        raise DegreeZeroError("node utility with max-degree scaling needs at least one edge")
    if model is UtilityModel.NODE_OWNDEG and max_degree(g) == 0:
        raise DegreeZeroError("degree-normalized node utility needs at least one edge")


def crossing_degree(g: Graph, cut: Cut, v: int) -> int:
    """Number of edges at v whose other endpoint is on the opposite side."""
    inside = v in cut.members
    return sum(1 for u in g.neighbors[v] if (u in cut.members) != inside)


def group_utility(g: Graph, model: UtilityModel, cut: Cut, group: Iterable[int]) -> Fraction:
    """Total utility of one group under the cut, as an exact rational.

    Edge model: count of group edges crossing.  Node models: crossing
    degrees scaled by 1/max_degree or 1/deg(v); an isolated vertex
    contributes 0 under the own-degree model.
    """
    cut.validate_for(g)
    members = cut.members
    if model is UtilityModel.EDGE:
        count = 0
        for idx in group:
            u, v = g.edges[idx]
            if (u in members) != (v in members):
                count += 1
        return Fraction(count)
    if model is UtilityModel.NODE_MAXDEG:
        delta = max_degree(g)
        if delta == 0:
            raise DegreeZeroError("node utility with max-degree scaling needs at least one edge")
        total = sum(crossing_degree(g, cut, v) for v in group)
        return Fraction(total, delta)
    if model is UtilityModel.NODE_OWNDEG:
        if max_degree(g) == 0:
            raise DegreeZeroError("degree-normalized node utility needs at least one edge")
        total = ZERO
        for v in group:
            deg = g.degree(v)
            if deg == 0:
                continue
            total += Fraction(crossing_degree(g, cut, v), deg)
        return total
    raise ModelMismatchError(f"unsupported model {model}")


def group_proportion(g: Graph, model: UtilityModel, cut: Cut, group) -> Fraction:
    """Per-capita group utility: group_utility / |group|."""
    group = frozenset(group)
    return group_utility(g, model, cut, group) / len(group)


def min_group_proportion(
    g: Graph, model: UtilityModel, cut: Cut, partition: GroupPartition
) -> Fraction:
    """Worst per-capita utility across the partition's groups."""
    require_compatible(g, model, partition)
    return min(group_proportion(g, model, cut, gr) for gr in partition.groups)


def ground_set_size(g: Graph, model: UtilityModel) -> int:
    return g.edge_count if model is UtilityModel.EDGE else g.vertex_count


def ground_utility(g: Graph, model: UtilityModel, cut: Cut) -> Fraction:
    """Utility of the whole ground set (the sum over any partition's groups)."""
    if model is UtilityModel.EDGE:
        return group_utility(g, model, cut, range(g.edge_count))
    return group_utility(g, model, cut, range(g.vertex_count))
