"""Frozen expected values shared by the test modules.

TABLE1/TABLE2 are the small 2 x n and 3 x n count tables.  The 4 x n rows
and T(4,4;5) were computed ahead of time by an independent bitmask subset
filter (enumerate every subset, reject any with an adjacent pair); the
Schroeder prefix is the classical sequence.  None of these values were
produced by the package under test.
"""

from fractions import Fraction

TABLE1 = [
    [1],
    [1, 2],
    [1, 4, 2],
    [1, 6, 8, 2],
    [1, 8, 18, 12, 2],
    [1, 10, 32, 38, 16, 2],
    [1, 12, 50, 88, 66, 20, 2],
]

TABLE2 = [
    [1],
    [1, 3, 1],
    [1, 6, 8, 2],
    [1, 9, 24, 22, 6, 1],
    [1, 12, 49, 84, 61, 18, 2],
    [1, 15, 83, 215, 276, 174, 53, 9, 1],
]

ROW_1x3 = [1, 3, 1]
ROW_4x4 = [1, 16, 96, 276, 405, 304, 114, 20, 2]
ROW_4x5 = [1, 20, 159, 652, 1502, 1998, 1537, 678, 170, 24, 2]
T_4_4_5 = 304

# column polynomials for the 3 x n table, k = 1..5, rendered and as
# ascending coefficient tuples
POLY3_STRINGS = {
    1: "3n",
    2: "(9n^2 - 13n + 6)/2",
    3: "(9n^3 - 39n^2 + 64n - 40)/2",
    4: "(27n^4 - 234n^3 + 829n^2 - 1430n + 1008)/8",
    5: "(81n^5 - 1170n^4 + 7215n^3 - 23830n^2 + 42144n - 31760)/40",
}
POLY3_COEFFS = {
    1: (0, 3),
    2: (3, Fraction(-13, 2), Fraction(9, 2)),
    3: (-20, 32, Fraction(-39, 2), Fraction(9, 2)),
    4: (126, Fraction(-715, 4), Fraction(829, 8), Fraction(-117, 4), Fraction(27, 8)),
    5: (
        -794,
        Fraction(5268, 5),
        Fraction(-2383, 4),
        Fraction(1443, 8),
        Fraction(-117, 4),
        Fraction(81, 40),
    ),
}

SCHROEDER_PREFIX = [1, 2, 6, 22, 90, 394, 1806, 8558, 41586, 206098, 1037718]

ROW_MAXIMA_PREFIX = [1, 2, 4, 8, 18, 38, 88, 192]
T_2_10_5 = 2364

MOD3_TABLE1 = [[v % 3 for v in row] for row in TABLE1]
