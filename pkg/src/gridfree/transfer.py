"""Column-sweep dynamic programming for adjacency-free selection counts.

The state space for an m-row grid is the set of vertical-adjacency-free row
subsets of one column, encoded as bitmasks.  Two consecutive columns may not
both select the same row, so a transition is legal exactly when the two masks
are disjoint.  Each mask carries a vector of counts indexed by selection size
k; appending a column with mask ``s`` shifts the size index by popcount(s).

Two specialised recurrence systems for m = 2 and m = 3 are implemented
independently of the mask sweep and are used to cross-check it:

* m = 2 splits counts by the last column's content: empty, or bottom square
  selected (the top-square case is its mirror image),
* m = 3 splits by last column: only bottom, only centre, or both outer
  squares ("double"); only-top mirrors only-bottom.
"""

from __future__ import annotations

import threading

from .core import GridDims, RowTable, VerificationReport, brute_force_row


def column_states(m: int) -> list:
    """Vertical-adjacency-free row subsets of one column, as ascending bitmasks.

    Bit r set means row r is selected.  There are Fibonacci(m + 2) such masks.
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    return [s for s in range(1 << m) if not (s & (s >> 1))]


def mask_rows(mask: int) -> tuple:
    """Row indices present in a column bitmask, ascending."""
    return tuple(r for r in range(mask.bit_length()) if mask >> r & 1)


def max_selection_size(m: int, n: int) -> int:
    """Largest k with any adjacency-free k-selection on m x n: ceil(m*n/2).

    The checkerboard colour class attains it, and no independent set of the
    grid graph is larger.
    """
    return (m * n + 1) // 2


def _sweep_rows(m, n_max, modulus=None):
    """Raw count vectors for n = 0..n_max; one sweep, O(n_max^2) additions."""
    states = column_states(m)
    pops = [s.bit_count() for s in states]
    compat = [
        [j for j, t in enumerate(states) if not (s & t)] for s in states
    ]
    cur = [[1] if s == 0 else [] for s in states]
    rows = [[1]]
    for _ in range(n_max):
        nxt = []
        for i, p in enumerate(pops):
            reach = max(len(cur[j]) for j in compat[i])
            acc = [0] * (reach + p)
            for j in compat[i]:
                prev = cur[j]
                for k in range(len(prev)):
                    acc[k + p] += prev[k]
            if modulus is not None:
                acc = [v % modulus for v in acc]
            nxt.append(acc)
        cur = nxt
        width = max(len(v) for v in cur)
        row = [0] * width
        for vec in cur:
            for k in range(len(vec)):
                row[k] += vec[k]
        if modulus is not None:
            row = [v % modulus for v in row]
        rows.append(row)
    return rows


# (m, modulus) -> raw rows computed so far; regrown when a longer sweep is asked.
_row_cache: dict = {}


def _rows_upto(m, n_max, modulus=None):
    key = (m, modulus)
    cached = _row_cache.get(key)
    if cached is None or len(cached) <= n_max:
        _row_cache[key] = _sweep_rows(m, n_max, modulus)
    return _row_cache[key]


def _trim(counts):
    counts = list(counts)
    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
    return tuple(counts)


def dp_row(m: int, n: int) -> RowTable:
    """Exact counts of adjacency-free k-selections on m x n, for all k.

    Internally the grid is swept along its longer side, so that the mask
    state space is Fibonacci(min(m,n) + 2); counts are transpose-invariant.
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    rows, cols = (m, n) if (m <= n or n == 0) else (n, m)
    return RowTable(m=m, n=n, counts=_trim(_rows_upto(rows, cols)[cols]))


def dp_table(m: int, n_max: int) -> list:
    """Rows n = 0..n_max in one sweep; much cheaper than n_max calls to dp_row."""
    rows = _rows_upto(m, n_max)
    return [
        RowTable(m=m, n=n, counts=_trim(rows[n])) for n in range(n_max + 1)
    ]


def dp_row_mod(m: int, n_max: int, modulus: int) -> list:
    """Residue rows n = 0..n_max with all arithmetic done mod ``modulus``.

    Row lengths still reflect the true nonzero extent (the structural
    popcount bound), since a residue 0 says nothing about the exact count.
    """
    if modulus < 2:
        raise ValueError(f"modulus must be >= 2, got {modulus}")
    rows = _rows_upto(m, n_max, modulus)
    return [list(r) for r in rows[: n_max + 1]]


def dp_cell(m: int, n: int, k: int) -> int:
    """T(m,n;k): adjacency-free k-selections on m x n.

    Returns 0 without running the sweep when k is outside the nonzero
    boundary (k < 0, or k > ceil(m*n/2); for m = 2 and 3 that ceiling equals
    the exact row boundaries n and floor((3n+1)/2)).
    """
    if k < 0:
        return 0
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if k > max_selection_size(m, n):
        return 0
    return dp_row(m, n)[k]


def independent_set_total(m: int, n: int) -> int:
    """Number of adjacency-free selections of any size (k-tracking disabled)."""
    if m > n >= 1:
        m, n = n, m
    states = column_states(m)
    compat = [
        [j for j, t in enumerate(states) if not (s & t)] for s in states
    ]
    cur = [1 if s == 0 else 0 for s in states]
    for _ in range(n):
        cur = [sum(cur[j] for j in compat[i]) for i in range(len(states))]
    return sum(cur)


def verify_oracle(max_cells: int = 24) -> VerificationReport:
    """Sweep vs. enumeration oracle on every grid with at most ``max_cells`` cells.

    Checks dp_row against brute_force_row for all m >= 1, n >= 0 with
    m*n <= max_cells, plus transpose invariance of the oracle itself.
    """
    failures = []
    for m in range(1, max_cells + 1):
        n = 0
        while m * n <= max_cells:
            got = tuple(dp_row(m, n))
            want = tuple(brute_force_row(GridDims(m, n), max_cells=max_cells))
            if got != want:
                failures.append((f"m={m} n={n}", want, got))
            if 1 <= n < m:
                flipped = tuple(brute_force_row(GridDims(n, m), max_cells=max_cells))
                if flipped != want:
                    failures.append((f"m={m} n={n} transpose", want, flipped))
            n += 1
    return VerificationReport.from_failures(
        "oracle", f"all grids with m*n <= {max_cells}", failures
    )


# ---------------------------------------------------------------------------
# m = 2: last-column split.  t0 = last column empty, t1 = bottom selected.
# Relations: row = t0 + 2*t1;  t0(n) = row(n-1);  t1(n) = shift(t0 + t1)(n-1).


def _vec_add(*vecs):
    width = max(len(v) for v in vecs)
    out = [0] * width
    for v in vecs:
        for i in range(len(v)):
            out[i] += v[i]
    return out


def _vec_shift(vec, s):
    return [0] * s + list(vec)


def _vec_scale(c, vec):
    return [c * v for v in vec]


_aux_lock = threading.Lock()
# cached per-n vectors, grown on demand; n = 0 slots hold the bases
_t2_t0s, _t2_t1s, _t2_rows = [None, [1]], [None, [0, 1]], [[1], [1, 2]]


def _t2_extend(n_max):
    with _aux_lock:
        while len(_t2_rows) <= n_max:
            n = len(_t2_rows)
            t0 = _t2_rows[n - 1]
            t1 = _vec_shift(_vec_add(_t2_t0s[n - 1], _t2_t1s[n - 1]), 1)
            _t2_t0s.append(t0)
            _t2_t1s.append(t1)
            _t2_rows.append(_vec_add(t0, _vec_scale(2, t1)))


def t2_aux_rows(n: int) -> tuple:
    """(t0, t1) count vectors for 2 x n: last column empty / bottom selected."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    _t2_extend(n)
    return list(_t2_t0s[n]), list(_t2_t1s[n])


def t2_row_from_recurrences(n: int) -> list:
    """2 x n counts rebuilt from the last-column recurrences, not the sweep."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    _t2_extend(n)
    return list(_t2_rows[n])


# ---------------------------------------------------------------------------
# m = 3: last-column split into bottom-only (tb), centre-only (tc) and
# double (td); only-top mirrors bottom-only.  Writing row(n) for the full
# count vector:
#   row(n) = 2*tb(n) + tc(n) + td(n) + row(n-1)
#   tb(n)  = shift1( tb(n-1) + tc(n-1) + row(n-2) )
#   tc(n)  = shift1( 2*tb(n-1) + td(n-1) + row(n-2) )
#   td(n)  = shift2( tc(n-1) + row(n-2) )

_t3_tbs, _t3_tcs, _t3_tds = [None, [0, 1]], [None, [0, 1]], [None, [0, 0, 1]]
_t3_rows = [[1], [1, 3, 1]]


def _t3_extend(n_max):
    with _aux_lock:
        while len(_t3_rows) <= n_max:
            n = len(_t3_rows)
            two_back = _t3_rows[n - 2]
            tb = _vec_shift(_vec_add(_t3_tbs[n - 1], _t3_tcs[n - 1], two_back), 1)
            tc = _vec_shift(
                _vec_add(_vec_scale(2, _t3_tbs[n - 1]), _t3_tds[n - 1], two_back), 1
            )
            td = _vec_shift(_vec_add(_t3_tcs[n - 1], two_back), 2)
            _t3_tbs.append(tb)
            _t3_tcs.append(tc)
            _t3_tds.append(td)
            _t3_rows.append(_vec_add(_vec_scale(2, tb), tc, td, _t3_rows[n - 1]))


def t3_aux_rows(n: int) -> tuple:
    """(tb, tc, td) count vectors for 3 x n, split by last-column content."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    _t3_extend(n)
    return list(_t3_tbs[n]), list(_t3_tcs[n]), list(_t3_tds[n])


def t3_aux_table(n_max: int) -> tuple:
    """(tbs, tcs, tds, rows), each indexed by n; the aux lists start at n = 1."""
    if n_max < 1:
        raise ValueError(f"n must be >= 1, got {n_max}")
    _t3_extend(n_max)
    upto = n_max + 1
    return (
        [None] + [list(v) for v in _t3_tbs[1:upto]],
        [None] + [list(v) for v in _t3_tcs[1:upto]],
        [None] + [list(v) for v in _t3_tds[1:upto]],
        [list(v) for v in _t3_rows[:upto]],
    )


def t3_row_from_recurrences(n: int) -> list:
    """3 x n counts rebuilt from the last-column recurrences, not the sweep."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n == 0:
        return [1]
    _t3_extend(n)
    return list(_t3_rows[n])
