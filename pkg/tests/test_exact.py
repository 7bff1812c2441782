"""Enumeration solvers against independent brute-force oracles."""

from fractions import Fraction

import pytest
from hypothesis import given, settings

from fairmaxcut.errors import TooLargeError
from fairmaxcut.exact import (
    Mode,
    build_payoff_matrix,
    enumerate_canonical_cuts,
    max_from_matrix,
    max_proportion,
    max_value,
    static_fair,
    static_from_matrix,
)
from fairmaxcut.families import (
    make_clique_with_tail,
    make_complete_bipartite,
    make_cycle,
    make_cycle_plus_biclique,
    make_diamond_instance,
    make_paw_instance,
    singleton_partition,
)
from fairmaxcut.graphs import Cut, Graph, PartitionKind, is_bipartite
from fairmaxcut.utility import UtilityModel, group_proportion, min_group_proportion

from .strategies import edge_instances, node_instances


def brute_force_max_cut(g: Graph) -> int:
    """Oracle: scan all 2^n subsets with a direct edge loop."""
    best = 0
    for mask in range(1 << g.vertex_count):
        value = sum(1 for u, v in g.edges if ((mask >> u) ^ (mask >> v)) & 1)
        best = max(best, value)
    return best


class TestEnumerateCanonicalCuts:
    def test_single_vertex(self):
        assert enumerate_canonical_cuts(Graph(1, ())) == [Cut.of(set())]

    def test_no_vertices(self):
        assert enumerate_canonical_cuts(Graph(0, ())) == [Cut.of(set())]

    def test_three_vertices_order(self):
        cuts = enumerate_canonical_cuts(Graph(3, ()))
        assert [sorted(c.members) for c in cuts] == [[], [1], [2], [1, 2]]

    def test_four_vertices_count_and_canonicality(self):
        cuts = enumerate_canonical_cuts(make_paw_instance().graph)
        assert len(cuts) == 8
        assert all(0 not in c.members for c in cuts)
        assert len({frozenset(c.members) for c in cuts}) == 8

    def test_limit_enforced(self):
        with pytest.raises(TooLargeError):
            enumerate_canonical_cuts(Graph(7, ()), limit=6)


class TestMaxValue:
    def test_complete_bipartite(self):
        g = make_complete_bipartite(3, 3)
        value, witness = max_value(g, UtilityModel.EDGE)
        assert value == 9
        assert sorted(witness.members) in ([3, 4, 5], [0, 1, 2])

    def test_paw(self):
        value, _ = max_value(make_paw_instance().graph, UtilityModel.EDGE)
        assert value == 3

    def test_c5_node_model(self):
        value, _ = max_value(make_cycle(5), UtilityModel.NODE_MAXDEG)
        assert value == 4  # 2 * MC / max degree = 2*4/2

    @given(edge_instances())
    @settings(max_examples=40)
    def test_matches_brute_force(self, inst):
        g, _ = inst
        value, witness = max_value(g, UtilityModel.EDGE)
        assert value == brute_force_max_cut(g)
        # the witness achieves the optimum
        from fairmaxcut.graphs import cut_value

        assert cut_value(g, witness) == value


class TestDegenerateGraphs:
    def test_edgeless_edge_model_zero(self):
        g = Graph(3, ())
        assert max_value(g, UtilityModel.EDGE)[0] == 0
        assert max_proportion(g, UtilityModel.EDGE)[0] == 0

    def test_empty_graph(self):
        g = Graph(0, ())
        assert max_value(g, UtilityModel.EDGE)[0] == 0
        assert max_proportion(g, UtilityModel.EDGE)[0] == 0

    def test_edgeless_node_model_refuses(self):
        from fairmaxcut.errors import DegreeZeroError

        with pytest.raises(DegreeZeroError):
            max_value(Graph(3, ()), UtilityModel.NODE_MAXDEG)


class TestMaxProportion:
    def test_clique_tail(self):
        inst = make_clique_with_tail(2, 10)
        assert max_proportion(inst.graph, inst.model)[0] == Fraction(5, 6)

    def test_bipartite_edge(self):
        assert max_proportion(make_complete_bipartite(2, 3), UtilityModel.EDGE)[0] == 1

    def test_cycle_plus_biclique_nodes(self):
        inst = make_cycle_plus_biclique(2, 3)
        assert max_proportion(inst.graph, inst.model)[0] == Fraction(7, 10)

    @given(edge_instances())
    @settings(max_examples=30)
    def test_value_ratio_and_shared_witness(self, inst):
        g, _ = inst
        value, wit_v = max_value(g, UtilityModel.EDGE)
        prop, wit_p = max_proportion(g, UtilityModel.EDGE)
        assert prop == value / g.edge_count
        assert wit_v == wit_p


class TestStaticFair:
    def test_nonbipartite_singleton_edges_zero(self):
        g = make_paw_instance().graph
        partition = singleton_partition(g, PartitionKind.EDGES)
        assert static_fair(g, UtilityModel.EDGE, partition).objective == 0

    def test_c5_singleton_nodes_half(self):
        g = make_cycle(5)
        partition = singleton_partition(g, PartitionKind.NODES)
        sol = static_fair(g, UtilityModel.NODE_MAXDEG, partition)
        assert sol.objective == Fraction(1, 2)

    def test_bipartite_always_one(self):
        g = make_complete_bipartite(2, 2)
        partition = singleton_partition(g, PartitionKind.EDGES)
        assert static_fair(g, UtilityModel.EDGE, partition).objective == 1

    def test_witness_achieves_objective(self):
        inst = make_diamond_instance()
        sol = static_fair(inst.graph, inst.model, inst.partition)
        assert sol.objective == Fraction(1, 2)
        got = min_group_proportion(inst.graph, inst.model, sol.witness_cut, inst.partition)
        assert got == sol.objective

    @given(edge_instances())
    @settings(max_examples=30)
    def test_brute_force_over_all_cuts(self, inst):
        g, partition = inst
        sol = static_fair(g, UtilityModel.EDGE, partition)
        best = max(
            min_group_proportion(g, UtilityModel.EDGE, Cut.from_mask(mask), partition)
            for mask in range(1 << g.vertex_count)
        )
        assert sol.objective == best

    @given(edge_instances())
    @settings(max_examples=30)
    def test_single_edge_dichotomy(self, inst):
        g, _ = inst
        partition = singleton_partition(g, PartitionKind.EDGES)
        sol = static_fair(g, UtilityModel.EDGE, partition)
        bipartite, _ = is_bipartite(g)
        assert sol.objective == (1 if bipartite else 0)

    @given(node_instances(max_vertices=5))
    @settings(max_examples=20)
    def test_value_mode_brute_force(self, inst):
        from fairmaxcut.utility import group_utility

        g, partition = inst
        sol = static_fair(g, UtilityModel.NODE_MAXDEG, partition, Mode.VALUE)
        best = max(
            min(
                group_utility(g, UtilityModel.NODE_MAXDEG, Cut.from_mask(mask), gr)
                for gr in partition.groups
            )
            for mask in range(1 << g.vertex_count)
        )
        assert sol.objective == best


class TestPayoffMatrix:
    def test_paw_matrix_shape_and_pinned_column(self):
        inst = make_paw_instance()
        matrix = build_payoff_matrix(inst.graph, inst.model, inst.partition)
        assert matrix.group_count == 4 and matrix.column_count == 8
        # the column for the cut complementary to {0} carries (1, 0, 1, 1)
        j = matrix.col_cuts.index(Cut.of({1, 2, 3}))
        assert matrix.column(j) == (1, 0, 1, 1)

    def test_diamond_rows_match_cut_table(self):
        inst = make_diamond_instance()
        matrix = build_payoff_matrix(inst.graph, inst.model, inst.partition)
        by_cut = {frozenset(c.members): matrix.column(j) for j, c in enumerate(matrix.col_cuts)}
        half = Fraction(1, 2)
        assert by_cut[frozenset({3})] == (half, 1)
        assert by_cut[frozenset({1, 2})] == (1, 0)  # complement of {0, 3}
        assert by_cut[frozenset({1})] == (half, 0)
        assert by_cut[frozenset()] == (0, 0)

    def test_single_group_row_is_ground_proportion(self):
        g = make_cycle(4)
        from fairmaxcut.graphs import edge_groups

        partition = edge_groups(g, [frozenset(range(4))])
        matrix = build_payoff_matrix(g, UtilityModel.EDGE, partition)
        assert matrix.group_count == 1
        from fairmaxcut.utility import ground_utility

        for j, cut in enumerate(matrix.col_cuts):
            assert matrix.entries[0][j] == ground_utility(g, UtilityModel.EDGE, cut) / 4

    @given(node_instances(max_vertices=5))
    @settings(max_examples=20)
    def test_columns_reproducible_from_stored_cuts(self, inst):
        g, partition = inst
        matrix = build_payoff_matrix(g, UtilityModel.NODE_MAXDEG, partition)
        for j, cut in enumerate(matrix.col_cuts):
            for i, gr in enumerate(partition.groups):
                assert matrix.entries[i][j] == group_proportion(
                    g, UtilityModel.NODE_MAXDEG, cut, gr
                )

    def test_value_mode_entries_bounded_by_group_size(self):
        inst = make_cycle_plus_biclique(2, 2)
        matrix = build_payoff_matrix(inst.graph, inst.model, inst.partition, Mode.VALUE)
        for i, size in enumerate(matrix.group_sizes):
            assert all(0 <= entry <= size for entry in matrix.entries[i])

    @given(edge_instances(max_vertices=5))
    @settings(max_examples=20)
    def test_matrix_readoffs_match_direct_solvers(self, inst):
        g, partition = inst
        for mode in (Mode.VALUE, Mode.PROPORTION):
            matrix = build_payoff_matrix(g, UtilityModel.EDGE, partition, mode)
            direct = static_fair(g, UtilityModel.EDGE, partition, mode)
            from_matrix = static_from_matrix(matrix)
            assert direct.objective == from_matrix.objective
            assert direct.witness_cut == from_matrix.witness_cut
            if mode is Mode.VALUE:
                assert max_from_matrix(matrix)[0] == max_value(g, UtilityModel.EDGE)[0]
            else:
                assert max_from_matrix(matrix)[0] == max_proportion(g, UtilityModel.EDGE)[0]
