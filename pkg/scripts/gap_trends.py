#!/usr/bin/env python3
"""Emit the fairness-gap trends along the two tightness families as plain
data columns (TSV on stdout) for external plotting.

    python scripts/gap_trends.py edges   # clique-with-tail and odd cycles
    python scripts/gap_trends.py nodes   # odd cycles and cycle-plus-biclique

Columns: family, parameter, MP, SF-MP, DF-MP, best_minus_dynamic,
dynamic_minus_static (all exact fractions).
"""

import argparse
import sys

sys.path.insert(0, "src")

from fairmaxcut.exact import max_proportion, static_fair
from fairmaxcut.families import (
    make_clique_with_tail,
    make_cycle,
    make_cycle_plus_biclique,
    singleton_partition,
)
from fairmaxcut.graphs import PartitionKind
from fairmaxcut.maximin import df_fair
from fairmaxcut.utility import UtilityModel


def emit(family, parameter, g, model, partition):
    mp, _ = max_proportion(g, model)
    sf = static_fair(g, model, partition).objective
    df = df_fair(g, model, partition).value
    print(f"{family}\t{parameter}\t{mp}\t{sf}\t{df}\t{mp - df}\t{df - sf}")


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("kind", choices=("edges", "nodes"))
    parser.add_argument("--max-cycle", type=int, default=11)
    parser.add_argument("--max-tail", type=int, default=16)
    parser.add_argument("--max-biclique", type=int, default=4)
    args = parser.parse_args()

    print("family\tparameter\tMP\tSF-MP\tDF-MP\tbest_minus_dynamic\tdynamic_minus_static")
    if args.kind == "edges":
        for n in range(6, args.max_tail + 1, 2):
            inst = make_clique_with_tail(2, n)
            emit("clique-tail-k2", n, inst.graph, inst.model, inst.partition)
        for length in range(5, args.max_cycle + 1, 2):
            g = make_cycle(length)
            emit("odd-cycle-edges", length, g, UtilityModel.EDGE,
                 singleton_partition(g, PartitionKind.EDGES))
    else:
        for length in range(5, args.max_cycle + 1, 2):
            g = make_cycle(length)
            emit("odd-cycle-nodes", length, g, UtilityModel.NODE_MAXDEG,
                 singleton_partition(g, PartitionKind.NODES))
        for r in range(2, args.max_biclique + 1):
            inst = make_cycle_plus_biclique(2, r)
            emit("cycle-biclique-k2", r, inst.graph, inst.model, inst.partition)
    return 0


if __name__ == "__main__":
    sys.exit(main())
