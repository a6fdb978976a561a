"""Exact feasibility of strict rational sign systems.

Whether some x satisfies sign(a_j . x) = s_j for all j is decided through
the weak system s_j * (a_j . x) >= 1: central forms are positively
homogeneous, so a strict solution can be scaled up until every product
reaches 1, and any weak solution is already strict.

The weak system is solved by a phase-I simplex over the rationals.  The
tableau stays integral (fraction-free pivoting: every entry is a minor of
the input matrix, divided exactly by the previous pivot) and Bland's rule
guarantees termination.  Returned witnesses are verified against the
strict system before being handed back.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

from .errors import InternalInconsistencyError

Point = tuple[Fraction, ...]


def dot(row: Sequence, x: Sequence) -> Fraction:
    return sum((c * v for c, v in zip(row, x)), start=Fraction(0))


def feasible_point(rows: Sequence[Sequence[int]], signs: Sequence[int]) -> Optional[Point]:
    """A rational x with sign(rows[j] . x) == signs[j] for every j, or None."""
    k = len(rows)
    if k == 0:
        raise ValueError("empty system; the caller decides trivial feasibility")
    ell = len(rows[0])
    # columns: u (ell) | v (ell) | surplus (k) | artificial (k) | rhs
    n_struct = 2 * ell + k
    n_cols = n_struct + k + 1
    rhs = n_cols - 1

    tableau = []
    for j in range(k):
        b = [signs[j] * c for c in rows[j]]
        row = [0] * n_cols
        row[:ell] = b
        row[ell:2 * ell] = [-c for c in b]
        row[2 * ell + j] = -1
        row[n_struct + j] = 1
        row[rhs] = 1
        tableau.append(row)
    # phase-I objective: minimize the artificial sum; stored as reduced costs
    obj = [0] * n_cols
    for c in range(n_struct):
        obj[c] = -sum(tableau[j][c] for j in range(k))
    obj[rhs] = -k
    tableau.append(obj)

    basis = [n_struct + j for j in range(k)]
    divisor = 1

    while True:
        enter = -1
        for c in range(n_cols - 1):
            if tableau[k][c] < 0:
                enter = c
                break
        if enter < 0:
            break
        leave = -1
        for i in range(k):
            coeff = tableau[i][enter]
            if coeff <= 0:
                continue
            if leave < 0:
                leave = i
                continue
            lhs = tableau[i][rhs] * tableau[leave][enter]
            rhs_cmp = tableau[leave][rhs] * coeff
            if lhs < rhs_cmp or (lhs == rhs_cmp and basis[i] < basis[leave]):
                leave = i
        if leave < 0:
            raise InternalInconsistencyError("phase-I objective unbounded")
        pivot = tableau[leave][enter]
        pivot_row = tableau[leave]
        for i in range(k + 1):
            if i == leave:
                continue
            row = tableau[i]
            factor = row[enter]
            tableau[i] = [
                (row[c] * pivot - factor * pivot_row[c]) // divisor
                for c in range(n_cols)
            ]
        divisor = pivot
        basis[leave] = enter

    if tableau[k][rhs] != 0:
        return None

    x = [Fraction(0)] * ell
    for i in range(k):
        var = basis[i]
        if var >= 2 * ell:
            continue
        value = Fraction(tableau[i][rhs], divisor)
        if var < ell:
            x[var] += value
        else:
            x[var - ell] -= value
    point = tuple(x)
    for row, s in zip(rows, signs):
        if s * dot(row, point) < 1:
            raise InternalInconsistencyError("simplex returned an invalid witness")
    return point
