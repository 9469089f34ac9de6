"""Closed forms and identities for adjacency-free selections on 2 x n grids.

Writing T(n;k) for the number of k-selections, the central closed form counts
by the runs of consecutive selected columns: a k-selection projects to a 0/1
column vector with k ones, a vector with r runs of ones lifts to 2**r
selections, and there are C(k-1, r-1) * C(n-k+1, r) vectors with r runs, so

    T(n;k) = sum_{r=1..k} 2**r * C(k-1, r-1) * C(n-k+1, r).

The same sum evaluates as 2*(n-k+1) * 2F1(1-k, k-n; 2; 2), a terminating
hypergeometric series.  Everything here is cross-checked against the mask
sweep in :mod:`gridfree.transfer`, which shares no code with these formulas.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from .core import VerificationReport
from .polynomial import Polynomial, interpolate
from .transfer import dp_cell, dp_table


def t2_formula(n: int, k: int) -> int:
    """Run-counting closed form for 2 x n counts.

    The sum is empty at k = 0 but the empty selection still counts, so k = 0
    returns 1 directly; k > n returns 0 (pigeonhole).
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    if k == 0:
        return 1
    if k > n:
        return 0
    return sum(
        2 ** r * comb(k - 1, r - 1) * comb(n - k + 1, r)
        for r in range(1, k + 1)
    )


def t2_hypergeometric(n: int, k: int) -> int:
    """2 x n count via the terminating series 2*(n-k+1) * 2F1(1-k, k-n; 2; 2).

    Evaluated in exact rational arithmetic; the series stops at j = k-1
    because the Pochhammer factor (1-k)_j vanishes beyond it.  Valid for
    1 <= k <= n.  A non-integral result would mean a bug and raises
    ArithmeticError.
    """
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    a, b = 1 - k, k - n
    total = Fraction(1)
    term = Fraction(1)
    for j in range(k - 1):
        term *= Fraction((a + j) * (b + j) * 2, (2 + j) * (j + 1))
        total += term
    value = 2 * (n - k + 1) * total
    if value.denominator != 1:
        raise ArithmeticError(
            f"series gave non-integer {value} at n={n}, k={k}"
        )
    return int(value)


def binomial_delta(k: int, r: int) -> int:
    """C(k-1,r-1)*C(k,r) - C(k-2,r-1)*C(k+1,r), for k >= 2, 1 <= r <= k.

    This difference compares adjacent entries in row 2k-1 of the count table
    term by term; it is antisymmetric under r -> k+1-r and negative for
    r <= floor(k/2).
    """
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    if not 1 <= r <= k:
        raise ValueError(f"need 1 <= r <= k, got r={r}")
    return comb(k - 1, r - 1) * comb(k, r) - comb(k - 2, r - 1) * comb(k + 1, r)


def _cell_fn(n_max):
    table = dp_table(2, n_max)

    def cell(n, k):
        if n < 0 or k < 0:
            return 0
        return table[n][k]

    return cell


def verify_pascal_identity(n_max: int) -> VerificationReport:
    """T(n;k) = T(n-2;k-1) + T(n-1;k-1) + T(n-1;k), swept over the table."""
    if n_max < 2:
        raise ValueError(f"n_max must be >= 2, got {n_max}")
    cell = _cell_fn(n_max)
    failures = []
    for n in range(2, n_max + 1):
        for k in range(n + 1):
            lhs = cell(n, k)
            rhs = cell(n - 2, k - 1) + cell(n - 1, k - 1) + cell(n - 1, k)
            if lhs != rhs:
                failures.append((f"n={n} k={k}", lhs, rhs))
    return VerificationReport.from_failures(
        "pascal", f"2 <= n <= {n_max}, 0 <= k <= n", failures
    )


def verify_hockeystick(n_max: int) -> VerificationReport:
    """T(n;k) = T(n-1;k) + sum_{r=1..k} 2*T(n-r-1;k-r), swept over the table.

    Swept for 0 <= k < n: on the diagonal k = n the final summand degenerates
    to a grid of width -1 (the telescoping bottoms out one column early), so
    the identity in this form does not apply there.
    """
    if n_max < 2:
        raise ValueError(f"n_max must be >= 2, got {n_max}")
    cell = _cell_fn(n_max)
    failures = []
    for n in range(2, n_max + 1):
        for k in range(n):
            lhs = cell(n, k)
            rhs = cell(n - 1, k) + sum(
                2 * cell(n - r - 1, k - r) for r in range(1, k + 1)
            )
            if lhs != rhs:
                failures.append((f"n={n} k={k}", lhs, rhs))
    return VerificationReport.from_failures(
        "hockeystick", f"2 <= n <= {n_max}, 0 <= k < n", failures
    )


def verify_delta_properties(k_max: int) -> VerificationReport:
    """The binomial-difference apparatus behind row unimodality.

    For 2 <= k <= k_max and 1 <= r <= k:
      * antisymmetry: binomial_delta(k, k+1-r) = -binomial_delta(k, r),
      * negativity:   binomial_delta(k, r) < 0 when r <= floor(k/2),
      * positivity:   C(k-1,r-1)*C(k+1,r) > C(k,r-1)*C(k,r),
    and for 1 <= k <= k_max the resulting strict row inequalities
    T(2k-1;k) > T(2k-1;k-1) and T(2k;k) > T(2k;k+1).
    """
    if k_max < 2:
        raise ValueError(f"k_max must be >= 2, got {k_max}")
    failures = []
    for k in range(2, k_max + 1):
        for r in range(1, k + 1):
            d = binomial_delta(k, r)
            mirror = binomial_delta(k, k + 1 - r)
            if mirror != -d:
                failures.append(
                    (f"antisymmetry k={k} r={r}", -d, mirror)
                )
            if r <= k // 2 and not d < 0:
                failures.append((f"negativity k={k} r={r}", "< 0", d))
            cross = comb(k - 1, r - 1) * comb(k + 1, r) - comb(k, r - 1) * comb(k, r)
            if not cross > 0:
                failures.append((f"positivity k={k} r={r}", "> 0", cross))
    cell = _cell_fn(2 * k_max)
    for k in range(1, k_max + 1):
        odd_hi, odd_lo = cell(2 * k - 1, k), cell(2 * k - 1, k - 1)
        if not odd_hi > odd_lo:
            failures.append(
                (f"odd-row rise k={k}", f"> {odd_lo}", odd_hi)
            )
        even_hi, even_lo = cell(2 * k, k), cell(2 * k, k + 1)
        if not even_hi > even_lo:
            failures.append(
                (f"even-row fall k={k}", f"> {even_lo}", even_hi)
            )
    return VerificationReport.from_failures(
        "delta", f"2 <= k <= {k_max}, 1 <= r <= k (rows up to n = {2 * k_max})",
        failures,
    )


def poly2(k: int) -> Polynomial:
    """The degree-k polynomial agreeing with the k-th column for n >= k.

    Interpolated exactly on n = k..2k, then validated: degree k, leading
    coefficient 2**k / k!, next coefficient -2**k / (k-2)! (for k >= 2), and
    agreement with the mask sweep on n = k..k+30.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    poly = interpolate([(n, t2_formula(n, k)) for n in range(k, 2 * k + 1)])
    if poly.degree != k:
        raise ArithmeticError(f"column {k} fitted degree {poly.degree}, not {k}")
    if poly.leading != Fraction(2 ** k, factorial(k)):
        raise ArithmeticError(f"column {k} leading coefficient {poly.leading}")
    if k >= 2 and poly.coefficient(k - 1) != -Fraction(2 ** k, factorial(k - 2)):
        raise ArithmeticError(
            f"column {k} second coefficient {poly.coefficient(k - 1)}"
        )
    table = dp_table(2, k + 30)
    for n in range(k, k + 31):
        if poly(n) != table[n][k]:
            raise ArithmeticError(f"column {k} disagrees with sweep at n={n}")
    return poly


def unimodality_check(n: int) -> VerificationReport:
    """Strict rise to k = ceil(n/2), strict fall after, for one row."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    return _unimodality_against(dp_table(2, n), n, n)


def _unimodality_against(table, n_lo, n_hi):
    failures = []
    for n in range(n_lo, n_hi + 1):
        row = table[n]
        peak = (n + 1) // 2
        for k in range(peak):
            if not row[k] < row[k + 1]:
                failures.append(
                    (f"rise n={n} k={k}", f"< {row[k + 1]}", row[k])
                )
        for k in range(peak, n):
            if not row[k] > row[k + 1]:
                failures.append(
                    (f"fall n={n} k={k}", f"> {row[k + 1]}", row[k])
                )
        if n >= 1 and max(row) != row[peak]:
            failures.append((f"argmax n={n}", row[peak], max(row)))
    return VerificationReport.from_failures(
        "unimodal",
        f"{n_lo} <= n <= {n_hi}" if n_lo != n_hi else f"n = {n_lo}",
        failures,
    )


def verify_unimodality(n_max: int) -> VerificationReport:
    """Row unimodality swept over all n = 0..n_max."""
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    return _unimodality_against(dp_table(2, n_max), 0, n_max)


def row_max_sequence(n_max: int) -> list:
    """Largest entry of each row, n = 0..n_max (starts 1, 2, 4, 8, 18, ...)."""
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    return [max(row.counts) for row in dp_table(2, n_max)]


def verify_row_max_identities(k_max: int) -> VerificationReport:
    """Exact relations between a row maximum and its right neighbour.

    For k >= 1:  k*T(2k;k) = (k+1)*T(2k;k+1);  the difference
    T(2k;k) - T(2k;k+1) equals T(2k;k+1)/k, and also equals the
    corresponding difference one row up, T(2k-1;k) - T(2k-1;k+1).
    """
    if k_max < 1:
        raise ValueError(f"k_max must be >= 1, got {k_max}")
    cell = _cell_fn(2 * k_max)
    failures = []
    for k in range(1, k_max + 1):
        peak, right = cell(2 * k, k), cell(2 * k, k + 1)
        if k * peak != (k + 1) * right:
            failures.append((f"ratio k={k}", (k + 1) * right, k * peak))
        if k * (peak - right) != right:
            failures.append((f"difference k={k}", right, k * (peak - right)))
        prev_diff = cell(2 * k - 1, k) - cell(2 * k - 1, k + 1)
        if peak - right != prev_diff:
            failures.append((f"previous-row k={k}", peak - right, prev_diff))
    return VerificationReport.from_failures(
        "section4", f"1 <= k <= {k_max}", failures
    )


def check_max_diff_conjecture(k_max: int) -> VerificationReport:
    """EXPERIMENTAL: T(2k;k) - T(2k;k+1) = T(2k+1;k+1) - T(2k+1;k).

    Unproven; this is a numeric sweep, and a failure would be a finding
    rather than a bug in this package.
    """
    if k_max < 1:
        raise ValueError(f"k_max must be >= 1, got {k_max}")
    cell = _cell_fn(2 * k_max + 1)
    failures = []
    for k in range(1, k_max + 1):
        even_diff = cell(2 * k, k) - cell(2 * k, k + 1)
        next_diff = cell(2 * k + 1, k + 1) - cell(2 * k + 1, k)
        if even_diff != next_diff:
            failures.append((f"k={k}", even_diff, next_diff))
    return VerificationReport.from_failures(
        "c1", f"1 <= k <= {k_max}", failures, experimental=True
    )


def schroeder_numbers(count: int) -> list:
    """First ``count`` large Schroeder numbers 1, 2, 6, 22, 90, ...

    Built from the classical recurrence
    (n+1)*S(n) = 3*(2n-1)*S(n-1) - (n-2)*S(n-2), independent of any counting
    done in this package.
    """
    if count < 0:
        raise ValueError(f"count must be >= 0, got {count}")
    seq = [1, 2]
    for n in range(2, count):
        seq.append((3 * (2 * n - 1) * seq[n - 1] - (n - 2) * seq[n - 2]) // (n + 1))
    return seq[:count]


def schroeder_difference_sequence(k_max: int) -> list:
    """The row-max differences T(2k;k) - T(2k;k+1) for k = 1..k_max."""
    if k_max < 1:
        raise ValueError(f"k_max must be >= 1, got {k_max}")
    cell = _cell_fn(2 * k_max)
    return [cell(2 * k, k) - cell(2 * k, k + 1) for k in range(1, k_max + 1)]


def check_schroeder_differences(k_max: int, reference=None) -> VerificationReport:
    """EXPERIMENTAL: the row-max differences 2, 6, 22, ... match the large
    Schroeder numbers.

    ``reference[i]`` must hold Schroeder number S(i) with S(0) = 1; by
    default the built-in recurrence prefix is used, but an ingested b-file
    sequence can be passed instead.  Observed to hold; not proven.
    """
    if k_max < 1:
        raise ValueError(f"k_max must be >= 1, got {k_max}")
    if reference is None:
        reference = schroeder_numbers(k_max + 1)
    if len(reference) < k_max + 1:
        raise ValueError(
            f"reference holds {len(reference)} terms, need {k_max + 1}"
        )
    diffs = schroeder_difference_sequence(k_max)
    failures = []
    for k in range(1, k_max + 1):
        if diffs[k - 1] != reference[k]:
            failures.append((f"k={k}", reference[k], diffs[k - 1]))
    return VerificationReport.from_failures(
        "schroeder", f"1 <= k <= {k_max}", failures, experimental=True
    )
