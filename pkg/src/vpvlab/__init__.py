"""Numerical evaluation of complex-order polylogarithms and truncated
visible-point lattice products, with certified tail bounds and
identity verification."""

from .errors import (
    ComputationError,
    DomainError,
    NonConvergence,
    TailBoundExceedsTol,
    VpvError,
)
from .explorer import (
    DEFAULT_T_VALUES,
    ProbeRow,
    ScanRow,
    SpecialValueRecord,
    audit_special_values,
    catalog,
    critical_line_scan,
    euler_zagier_31,
    exponent_pair_deviation,
    run_catalog,
    trivial_zero_probe,
)
from .lattice import (
    Decomposition,
    VisiblePoint2,
    VisiblePoint3,
    decompose,
    decompose3,
    visible_points_2d,
    visible_points_3d,
)
from .polylog import (
    EPS_DOMAIN,
    EPS_ZETA,
    TERM_CAP,
    SeriesResult,
    polylog,
    polylog_closed_form,
    polylog_neg_int,
    polylog_partial,
    zeta_real,
)
from .products import (
    DEFAULT_DEGREE_CAP_MAX,
    IdentityCase,
    IdentityReport,
    RhsForm,
    TruncationSpec,
    brute_force_log_2d,
    brute_force_log_3d,
    choose_degree_cap,
    lattice_double_sum_2d,
    lattice_triple_sum_3d,
    lhs_log_product_2d,
    lhs_log_product_3d,
    product_log_sum_2d,
    product_log_sum_3d,
    report_to_dict,
    rhs_factors,
    rhs_log,
    tail_bound_2d,
    tail_bound_3d,
    verify,
)

__version__ = "0.1.0"

__all__ = [
    "ComputationError",
    "DomainError",
    "NonConvergence",
    "TailBoundExceedsTol",
    "VpvError",
    "DEFAULT_T_VALUES",
    "ProbeRow",
    "ScanRow",
    "SpecialValueRecord",
    "audit_special_values",
    "catalog",
    "critical_line_scan",
    "euler_zagier_31",
    "exponent_pair_deviation",
    "run_catalog",
    "trivial_zero_probe",
    "Decomposition",
    "VisiblePoint2",
    "VisiblePoint3",
    "decompose",
    "decompose3",
    "visible_points_2d",
    "visible_points_3d",
    "EPS_DOMAIN",
    "EPS_ZETA",
    "TERM_CAP",
    "SeriesResult",
    "polylog",
    "polylog_closed_form",
    "polylog_neg_int",
    "polylog_partial",
    "zeta_real",
    "DEFAULT_DEGREE_CAP_MAX",
    "IdentityCase",
    "IdentityReport",
    "RhsForm",
    "TruncationSpec",
    "brute_force_log_2d",
    "brute_force_log_3d",
    "choose_degree_cap",
    "lattice_double_sum_2d",
    "lattice_triple_sum_3d",
    "lhs_log_product_2d",
    "lhs_log_product_3d",
    "product_log_sum_2d",
    "product_log_sum_3d",
    "report_to_dict",
    "rhs_factors",
    "rhs_log",
    "tail_bound_2d",
    "tail_bound_3d",
    "verify",
    "__version__",
]
