import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gridfree.core import (
    GridDims,
    OracleSizeError,
    RowTable,
    Selection,
    VerificationReport,
    brute_force_count,
    brute_force_row,
    validate_selection,
)

from golden import ROW_1x3, ROW_4x5, T_4_4_5, TABLE1, TABLE2


def test_grid_dims_validation():
    assert GridDims(1, 0).cells == 0
    assert GridDims(3, 5).cells == 15
    with pytest.raises(ValueError):
        GridDims(0, 3)
    with pytest.raises(ValueError):
        GridDims(2, -1)


def test_row_table_indexing():
    row = RowTable(m=2, n=4, counts=(1, 8, 18, 12, 2))
    assert row[0] == 1
    assert row[4] == 2
    assert row[5] == 0
    assert row[-1] == 0
    assert row.k_max == 4
    assert list(row) == [1, 8, 18, 12, 2]


def test_verification_report_invariant():
    ok = VerificationReport.from_failures("x", "r", [])
    assert ok.passed and not ok.failures
    bad = VerificationReport.from_failures("x", "r", [("p", 1, 2)])
    assert not bad.passed and len(bad.failures) == 1


def test_brute_force_count_examples():
    assert brute_force_count(GridDims(3, 5), 6) == 53
    assert brute_force_count(GridDims(2, 0), 0) == 1
    # frozen value from an independent full-subset filter over C(16,5) sets
    assert brute_force_count(GridDims(4, 4), 5) == T_4_4_5


def test_brute_force_row_examples():
    assert list(brute_force_row(GridDims(2, 4))) == TABLE1[4]
    assert list(brute_force_row(GridDims(3, 2))) == TABLE2[2]
    assert list(brute_force_row(GridDims(1, 3))) == ROW_1x3
    assert list(brute_force_row(GridDims(4, 5))) == ROW_4x5


@pytest.mark.parametrize("m,n", [(1, 5), (2, 3), (3, 3), (4, 2), (2, 6)])
def test_row_agrees_with_per_k_counts(m, n):
    dims = GridDims(m, n)
    row = brute_force_row(dims)
    for k in range(row.k_max + 3):
        assert row[k] == brute_force_count(dims, k)


@pytest.mark.parametrize("m,n", [(1, 1), (2, 3), (3, 4), (4, 4), (2, 5)])
def test_trivial_counts(m, n):
    dims = GridDims(m, n)
    assert brute_force_count(dims, 0) == 1
    assert brute_force_count(dims, 1) == m * n
    assert brute_force_count(dims, m * n + 1) == 0


@settings(max_examples=30, deadline=None)
@given(m=st.integers(1, 4), n=st.integers(1, 4), k=st.integers(0, 6))
def test_transpose_symmetry(m, n, k):
    assert brute_force_count(GridDims(m, n), k) == brute_force_count(
        GridDims(n, m), k
    )


def test_size_guard():
    with pytest.raises(OracleSizeError):
        brute_force_row(GridDims(7, 6))
    with pytest.raises(OracleSizeError):
        brute_force_count(GridDims(7, 6), 3)
    # explicit limits win over the default
    with pytest.raises(OracleSizeError):
        brute_force_row(GridDims(2, 2), max_cells=3)
    assert list(brute_force_row(GridDims(2, 2), max_cells=4)) == [1, 4, 2]


def test_size_guard_env_override(monkeypatch):
    monkeypatch.setenv("GRIDFREE_ORACLE_MAX_CELLS", "10")
    assert brute_force_count(GridDims(2, 5), 0) == 1
    with pytest.raises(OracleSizeError):
        brute_force_count(GridDims(3, 4), 0)


def test_negative_k_rejected():
    with pytest.raises(ValueError):
        brute_force_count(GridDims(2, 2), -1)


def _sel(m, n, cells):
    return Selection(dims=GridDims(m, n), cells=frozenset(cells))


def test_validate_selection():
    # a 6-square adjacency-free pattern on 3 x 5
    assert validate_selection(
        _sel(3, 5, [(0, 0), (2, 0), (0, 2), (2, 2), (0, 4), (2, 4)])
    )
    assert validate_selection(_sel(2, 2, []))
    assert not validate_selection(_sel(2, 2, [(0, 0), (0, 1)]))   # horizontal
    assert not validate_selection(_sel(2, 2, [(0, 0), (1, 0)]))   # vertical
    assert not validate_selection(_sel(2, 2, [(0, 2)]))           # out of range
    assert validate_selection(_sel(2, 2, [(0, 0), (1, 1)]))       # diagonal ok


@settings(max_examples=50, deadline=None)
@given(st.sets(st.tuples(st.integers(0, 3), st.integers(0, 3)), max_size=8))
def test_validate_matches_pairwise_definition(cells):
    ok = validate_selection(_sel(4, 4, cells))
    expected = all(
        abs(r1 - r2) + abs(c1 - c2) != 1
        for (r1, c1) in cells
        for (r2, c2) in cells
    )
    assert ok == expected
