"""Exact solver for the maximin distribution problem over a payoff matrix:

    maximize   min_i  sum_S M[i, S] * p_S
    subject to p is a probability vector over the columns.

This is the value-of-a-zero-sum-game LP.  It is solved by primal simplex on
the standard form

    max z   s.t.   z - (M p)_i + s_i = 0   (one row per group)
                   sum_S p_S = 1
                   z, p, s >= 0

with exact rational pivots and Bland's rule, so the optimum, the optimal
distribution, and the dual group mixture are certified exactly.  Restricting
z to be non-negative loses nothing because all payoff entries are >= 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import (
    DEFAULT_ENUMERATION_LIMIT,
    Mode,
    PayoffMatrix,
    build_payoff_matrix,
)
from .graphs import Cut, Graph, GroupPartition

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class CutDistribution:
    """Finite-support probability distribution over cuts, exact rationals."""

    entries: tuple[tuple[Cut, Fraction], ...]

    def __post_init__(self):
        total = _ZERO
        seen = set()
        for cut, prob in self.entries:
            if prob < 0:
                raise ValueError(f"negative probability {prob} for cut {cut}")
            if cut in seen:
                raise ValueError(f"duplicate cut {cut} in distribution")
            seen.add(cut)
            total += prob
        if total != 1:
            raise ValueError(f"probabilities sum to {total}, not 1")

    @staticmethod
    def point_mass(cut: Cut) -> "CutDistribution":
        return CutDistribution(((cut, _ONE),))

    @staticmethod
    def from_pairs(pairs) -> "CutDistribution":
        """Merge duplicate cuts and drop zero-probability entries."""
        merged: dict[Cut, Fraction] = {}
        for cut, prob in pairs:
            merged[cut] = merged.get(cut, _ZERO) + prob
        return CutDistribution(tuple((c, p) for c, p in merged.items() if p > 0))

    @property
    def support(self) -> tuple[Cut, ...]:
        return tuple(cut for cut, _ in self.entries)

    def probability(self, cut: Cut) -> Fraction:
        for c, p in self.entries:
            if c == cut:
                return p
        return _ZERO


@dataclass(frozen=True)
class MaximinSolution:
    value: Fraction
    distribution: CutDistribution
    dual_weights: tuple[Fraction, ...]
    support: tuple[int, ...]


class _CertificateError(AssertionError):
    """Internal consistency failure: the pivoting produced an uncertified optimum."""


def solve_maximin(matrix: PayoffMatrix) -> MaximinSolution:
    """Exact optimum of the maximin LP with a strong-duality certificate.

    Duplicate payoff columns are collapsed before pivoting (a distribution
    on duplicates is interchangeable, so the value is unchanged); the
    returned support refers to original column indices.
    """
    gamma = matrix.group_count
    if gamma == 0 or matrix.column_count == 0:
        raise ValueError("payoff matrix must be non-empty")
    for row in matrix.entries:
        for entry in row:
            if entry < 0:
                raise ValueError("payoff entries must be non-negative")

    # collapse duplicate columns, keeping the first occurrence
    kept: list[int] = []
    seen: dict[tuple[Fraction, ...], int] = {}
    for j in range(matrix.column_count):
        col = matrix.column(j)
        if col not in seen:
            seen[col] = j
            kept.append(j)
    cols = [matrix.column(j) for j in kept]
    k = len(cols)

    value, probs, duals = _simplex_maximin(cols, gamma)

    pairs = [
        (matrix.col_cuts[kept[j]], probs[j]) for j in range(k) if probs[j] > 0
    ]
    distribution = CutDistribution.from_pairs(pairs)
    support = tuple(sorted(kept[j] for j in range(k) if probs[j] > 0))

    _check_certificate(matrix, value, distribution, duals)
    return MaximinSolution(
        value=value,
        distribution=distribution,
        dual_weights=duals,
        support=support,
    )


def _simplex_maximin(
    cols: list[tuple[Fraction, ...]], gamma: int
) -> tuple[Fraction, list[Fraction], tuple[Fraction, ...]]:
    """Primal simplex with Bland's rule on the standard-form tableau.

    Variables are indexed 0 = z, 1..k = columns, k+1..k+gamma = slacks.
    Returns (optimal value, column probabilities, dual row weights).
    """
    k = len(cols)
    n_vars = 1 + k + gamma
    rows = gamma + 1

    # start from the basis {slacks} + {best static column}: feasible because
    # all payoff entries are non-negative
    start = 0
    best_min: Fraction | None = None
    for j in range(k):
        col_min = min(cols[j])
        if best_min is None or col_min > best_min:
            best_min = col_min
            start = j

    # tableau rows: [coefficients | rhs]
    tab: list[list[Fraction]] = []
    for i in range(gamma):
        row = [_ZERO] * (n_vars + 1)
        row[0] = _ONE
        for j in range(k):
            row[1 + j] = -cols[j][i]
        row[1 + k + i] = _ONE
        tab.append(row)
    last = [_ZERO] * (n_vars + 1)
    for j in range(k):
        last[1 + j] = _ONE
    last[n_vars] = _ONE
    tab.append(last)

    basis = [1 + k + i for i in range(gamma)] + [1 + start]
    # price the starting column into the slack rows: row_i += M[i, start] * last
    for i in range(gamma):
        coef = cols[start][i]
        if coef != 0:
            row = tab[i]
            for j in range(n_vars + 1):
                if last[j] != 0:
                    row[j] += coef * last[j]

    # reduced-cost row for the objective c = e_z (basis costs are all zero)
    cost = [_ZERO] * (n_vars + 1)
    cost[0] = _ONE

    while True:
        enter = -1
        for j in range(n_vars):
            if cost[j] > 0:
                enter = j
                break
        if enter < 0:
            break
        leave = -1
        best_ratio: Fraction | None = None
        for r in range(rows):
            coef = tab[r][enter]
            if coef > 0:
                ratio = tab[r][n_vars] / coef
                if (
                    best_ratio is None
                    or ratio < best_ratio
                    or (ratio == best_ratio and basis[r] < basis[leave])
                ):
                    best_ratio = ratio
                    leave = r
        if leave < 0:
            raise _CertificateError("maximin LP is bounded by construction; unbounded pivot found")
        _pivot(tab, cost, leave, enter, n_vars)
        basis[leave] = enter

    # read off the solution
    values = [_ZERO] * n_vars
    for r, var in enumerate(basis):
        values[var] = tab[r][n_vars]
    value = values[0]
    probs = values[1 : 1 + k]

    # dual row weights: y_i = -reduced cost of slack i, normalized to sum 1
    y = [-cost[1 + k + i] for i in range(gamma)]
    total = sum(y)
    if total <= 0:
        raise _CertificateError("dual weights must have positive mass at optimality")
    duals = tuple(w / total for w in y)
    return value, probs, duals


def _pivot(tab: list[list[Fraction]], cost: list[Fraction], r: int, c: int, n_vars: int) -> None:
    pivot_row = tab[r]
    inv = pivot_row[c]
    for j in range(n_vars + 1):
        pivot_row[j] /= inv
    for row in tab:
        if row is pivot_row:
            continue
        coef = row[c]
        if coef != 0:
            for j in range(n_vars + 1):
                if pivot_row[j] != 0:
                    row[j] -= coef * pivot_row[j]
    coef = cost[c]
    if coef != 0:
        for j in range(n_vars + 1):
            if pivot_row[j] != 0:
                cost[j] -= coef * pivot_row[j]


def _check_certificate(
    matrix: PayoffMatrix,
    value: Fraction,
    distribution: CutDistribution,
    duals: tuple[Fraction, ...],
) -> None:
    """Recompute both sides of the minimax equality from scratch."""
    if sum(duals) != 1 or any(q < 0 for q in duals):
        raise _CertificateError("dual weights are not a probability vector")
    prob_by_cut = dict(distribution.entries)
    primal = None
    for i in range(matrix.group_count):
        expected = _ZERO
        for j, cut in enumerate(matrix.col_cuts):
            p = prob_by_cut.get(cut)
            if p:
                expected += matrix.entries[i][j] * p
        if primal is None or expected < primal:
            primal = expected
    dual = None
    for j in range(matrix.column_count):
        mixed = sum(duals[i] * matrix.entries[i][j] for i in range(matrix.group_count))
        if dual is None or mixed > dual:
            dual = mixed
    if primal != value or dual != value:
        raise _CertificateError(
            f"strong duality certificate failed: primal {primal}, dual {dual}, value {value}"
        )


def df_fair(
    g: Graph,
    model,
    partition: GroupPartition,
    mode: Mode = Mode.PROPORTION,
    limit: int = DEFAULT_ENUMERATION_LIMIT,
) -> MaximinSolution:
    """Best distribution over cuts for the worst-off group (dynamic fairness)."""
    matrix = build_payoff_matrix(g, model, partition, mode, limit)
    return solve_maximin(matrix)
