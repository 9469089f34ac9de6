"""Boundary structure and polynomial columns for 3 x n grids.

There is no closed form here.  The largest feasible selection size is
floor((3n+1)/2), attained by checkerboard patterns, and for fixed k the
column n -> T(3,n;k) agrees with a degree-k polynomial p_k once n >= k.
The auxiliary last-column counts split the same way as the recurrences in
:mod:`gridfree.transfer`: bottom-only and centre-only columns follow degree
k-1 polynomials, double columns degree k-2.  All fits are exact Newton
interpolations over rationals, validated on spare nodes and against the
independent mask sweep.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .core import GridDims, Selection, VerificationReport, validate_selection
from .polynomial import Polynomial, interpolate
from .transfer import dp_cell, dp_table, t3_aux_table


def t3_max_k(n: int) -> int:
    """Largest k with T(3,n;k) > 0: floor((3n+1)/2)."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    return (3 * n + 1) // 2


def t3_min_n(k: int) -> int:
    """Smallest n with T(3,n;k) > 0: floor((2k+1)/3)."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    return (2 * k + 1) // 3


def checkerboard_selection(n: int) -> Selection:
    """A witness selection of the maximal size floor((3n+1)/2) on 3 x n.

    Even columns take rows {0, 2}, odd columns take row {1}.  For even n the
    mirrored pattern has the same size; this fixed choice starts with a
    two-square column.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    cells = set()
    for c in range(n):
        if c % 2 == 0:
            cells.add((0, c))
            cells.add((2, c))
        else:
            cells.add((1, c))
    return Selection(dims=GridDims(3, n), cells=frozenset(cells))


@dataclass(frozen=True)
class PolyFamily:
    """Exact polynomials for column k: full count p plus last-column splits.

    Degrees: p has degree k, b (bottom-only) and c (centre-only) degree k-1,
    d (double) degree k-2.
    """

    k: int
    p: Polynomial
    b: Polynomial
    c: Polynomial
    d: Polynomial


def _at(vec, k):
    return vec[k] if k < len(vec) else 0


def _fit_column(values_at, nodes, want_degree, spare, label):
    poly = interpolate([(n, values_at(n)) for n in nodes])
    if poly.degree != want_degree:
        raise ArithmeticError(
            f"{label}: fitted degree {poly.degree}, claimed {want_degree}"
        )
    if poly(spare) != values_at(spare):
        raise ArithmeticError(
            f"{label}: fit breaks at spare node n={spare}"
        )
    return poly


def fit_poly_family(k: int) -> PolyFamily:
    """Fit p_k, b_k, c_k, d_k from the recurrence table and validate them.

    Nodes start at n = k (where polynomial behaviour is guaranteed) and each
    fit is checked on one spare node past its interpolation range; p_k is
    additionally compared against the mask sweep on n = k..k+30.
    """
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    tbs, tcs, tds, rows = t3_aux_table(2 * k + 1)
    p = _fit_column(
        lambda n: _at(rows[n], k), range(k, 2 * k + 1), k, 2 * k + 1, f"p_{k}"
    )
    b = _fit_column(
        lambda n: _at(tbs[n], k), range(k, 2 * k), k - 1, 2 * k, f"b_{k}"
    )
    c = _fit_column(
        lambda n: _at(tcs[n], k), range(k, 2 * k), k - 1, 2 * k, f"c_{k}"
    )
    d = _fit_column(
        lambda n: _at(tds[n], k), range(k, 2 * k - 1), k - 2, 2 * k - 1, f"d_{k}"
    )
    table = dp_table(3, k + 30)
    for n in range(k, k + 31):
        if p(n) != table[n][k]:
            raise ArithmeticError(f"p_{k} disagrees with sweep at n={n}")
    return PolyFamily(k=k, p=p, b=b, c=c, d=d)


def poly3(k: int) -> Polynomial:
    """The degree-k polynomial agreeing with the k-th column for n >= k."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if k == 1:
        # T(3,n;1) = 3n for every n >= 0; too small for the family fit.
        return Polynomial([0, 3])
    return fit_poly_family(k).p


def coefficient_check(k_max: int) -> VerificationReport:
    """Top two coefficients of p_k: 3**k / k! and -13 * 3**(k-2) / (2*(k-2)!)."""
    if k_max < 2:
        raise ValueError(f"k_max must be >= 2, got {k_max}")
    failures = []
    for k in range(2, k_max + 1):
        p = fit_poly_family(k).p
        lead_want = Fraction(3 ** k, factorial(k))
        second_want = Fraction(-13 * 3 ** (k - 2), 2 * factorial(k - 2))
        if p.leading != lead_want:
            failures.append((f"leading k={k}", lead_want, p.leading))
        if p.coefficient(k - 1) != second_want:
            failures.append(
                (f"second k={k}", second_want, p.coefficient(k - 1))
            )
    return VerificationReport.from_failures(
        "coeffs3", f"2 <= k <= {k_max}", failures
    )


def first_difference_check(k_max: int) -> VerificationReport:
    """Coefficient-wise identity for the first differences of p_k:

    p_k(n) - p_k(n-1) = 2*p_{k-1}(n-1) + p_{k-1}(n-2) + p_{k-2}(n-2)
                        + c_{k-2}(n-1) - d_{k-1}(n-1)

    checked as exact polynomial equality for 4 <= k <= k_max.
    """
    if k_max < 4:
        raise ValueError(f"k_max must be >= 4, got {k_max}")
    families = {k: fit_poly_family(k) for k in range(2, k_max + 1)}
    failures = []
    for k in range(4, k_max + 1):
        p, p1, p2 = families[k].p, families[k - 1].p, families[k - 2].p
        lhs = p - p.shifted(-1)
        rhs = (
            2 * p1.shifted(-1)
            + p1.shifted(-2)
            + p2.shifted(-2)
            + families[k - 2].c.shifted(-1)
            - families[k - 1].d.shifted(-1)
        )
        if lhs != rhs:
            failures.append((f"k={k}", rhs.coeffs, lhs.coeffs))
    return VerificationReport.from_failures(
        "firstdiff", f"4 <= k <= {k_max}", failures
    )


def check_left_edge_agreement(k_max: int) -> VerificationReport:
    """EXPERIMENTAL: p_k(k-1) = T(3,k-1;k), one step left of the fit range.

    Polynomial behaviour is only guaranteed for n >= k; agreement at
    n = k-1 is observed but unproven, so a failure here would be a finding.
    """
    if k_max < 2:
        raise ValueError(f"k_max must be >= 2, got {k_max}")
    failures = []
    for k in range(2, k_max + 1):
        predicted = poly3(k)(k - 1)
        actual = dp_cell(3, k - 1, k)
        if predicted != actual:
            failures.append((f"k={k}", actual, predicted))
    return VerificationReport.from_failures(
        "remark3", f"2 <= k <= {k_max}", failures, experimental=True
    )


def verify_boundary(n_max: int) -> VerificationReport:
    """Nonzero region of the 3 x n table, in both directions, plus witnesses.

    Checks that row n is positive exactly up to floor((3n+1)/2), that column
    k first becomes positive at n = floor((2k+1)/3), and that the
    checkerboard witness validates at the maximal size.
    """
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    table = dp_table(3, n_max)
    failures = []
    for n in range(n_max + 1):
        row = table[n]
        bound = t3_max_k(n)
        if row.k_max != bound:
            failures.append((f"row-extent n={n}", bound, row.k_max))
        bad = [k for k in range(min(row.k_max, bound) + 1) if row[k] <= 0]
        if bad:
            failures.append((f"row-positivity n={n}", "> 0", f"zero at k={bad}"))
        if n >= 1:
            witness = checkerboard_selection(n)
            if not validate_selection(witness):
                failures.append((f"witness n={n}", "valid", "adjacent cells"))
            if witness.size != bound:
                failures.append((f"witness-size n={n}", bound, witness.size))
    for k in range(t3_max_k(n_max) + 1):
        first = t3_min_n(k)
        if first > n_max:
            continue
        if table[first][k] <= 0:
            failures.append((f"column-start k={k}", "> 0", table[first][k]))
        if first >= 1 and table[first - 1][k] != 0:
            failures.append((f"column-zero k={k}", 0, table[first - 1][k]))
    return VerificationReport.from_failures(
        "boundary", f"0 <= n <= {n_max}", failures
    )
