"""Exact enumeration of adjacency-free square selections on m x n grids.

The core quantity is the number of ways to pick k squares from an m x n
grid with no two picked squares sharing an edge.  The package computes it
exactly (arbitrary precision throughout), rebuilds it along several
independent routes, and ships verification suites that sweep the identities
relating those routes.
"""

from .core import (
    DEFAULT_ORACLE_MAX_CELLS,
    GridDims,
    OracleSizeError,
    RowTable,
    Selection,
    VerificationReport,
    brute_force_count,
    brute_force_row,
    validate_selection,
)
from .polynomial import Polynomial, format_polynomial, interpolate
from .sequences import (
    BFile,
    BFileFormatError,
    TriangleImage,
    build_mod_image,
    compare_sequence,
    emit_mod_image,
    flatten_triangle,
    gray_level,
    load_bfile,
    parse_bfile,
    render_bfile,
)
from .three_rows import (
    PolyFamily,
    check_left_edge_agreement,
    checkerboard_selection,
    coefficient_check,
    first_difference_check,
    fit_poly_family,
    poly3,
    t3_max_k,
    t3_min_n,
    verify_boundary,
)
from .transfer import (
    column_states,
    dp_cell,
    dp_row,
    dp_row_mod,
    dp_table,
    independent_set_total,
    mask_rows,
    max_selection_size,
    t2_aux_rows,
    t2_row_from_recurrences,
    t3_aux_rows,
    t3_row_from_recurrences,
    verify_oracle,
)
from .two_rows import (
    binomial_delta,
    check_max_diff_conjecture,
    check_schroeder_differences,
    poly2,
    row_max_sequence,
    schroeder_difference_sequence,
    schroeder_numbers,
    t2_formula,
    t2_hypergeometric,
    unimodality_check,
    verify_delta_properties,
    verify_hockeystick,
    verify_pascal_identity,
    verify_row_max_identities,
    verify_unimodality,
)

__version__ = "0.1.0"
