"""Free disposal hull efficiency analysis.

Radial efficiency under four scaling regimes, stepwise response functions,
incremental/decremental scale ratios, one-sided and global returns-to-scale
classification, and an exact rational brute-force verifier for all of it.
"""

from ._version import __version__
from .efficiency import (
    EfficiencyScores,
    Score,
    compute_scores,
    is_mpss,
    phi,
    radial,
    theta,
)
from .errors import (
    AnalysisError,
    DimensionMismatchError,
    DuplicateNameError,
    EmptyDatasetError,
    IndexOutOfRangeError,
    InefficientUnitError,
    NoInputColumnsError,
    NonpositiveValueError,
    NoOutputColumnsError,
    OutOfDomainError,
    ParseError,
    RaggedRowsError,
    ReportWriteError,
    UnclassifiableError,
)
from .io_cli import (
    build_classification_document,
    build_efficiency_document,
    build_ratios_document,
    build_report_document,
    main,
    read_csv,
    read_csv_text,
    response_csv,
    write_csv,
    write_report,
)
from .model import (
    Dataset,
    Delta,
    Numeric,
    Orientation,
    RatioTable,
    Tolerance,
    ratio_table,
    validate_dataset,
)
from .oracle import (
    CheckResult,
    OracleConfig,
    ScalingSystem,
    oracle_phi,
    oracle_response_value,
    oracle_sigma_minus,
    oracle_sigma_plus,
    oracle_system_feasible,
    oracle_theta,
    random_dataset,
    verify_dataset,
    verify_random,
)
from .response import (
    ResponseFunction,
    StepDerivative,
    build_response,
    one_sided_step_derivatives,
)
from .rts import (
    GrsClass,
    InefficientUnit,
    LeftRts,
    OneSidedRts,
    RightRts,
    RtsReport,
    check_consistency,
    classify_all,
    grs,
    left_rts,
    right_rts,
)
from .scale import (
    UNBOUNDED,
    ScaleRatios,
    SigmaResult,
    UnboundedRatio,
    scale_ratios,
    sigma_minus,
    sigma_plus,
)
from .technology import Point, find_dominating, interior_member, is_efficient, member

__all__ = [
    "__version__",
    "AnalysisError",
    "CheckResult",
    "Dataset",
    "Delta",
    "DimensionMismatchError",
    "DuplicateNameError",
    "EfficiencyScores",
    "EmptyDatasetError",
    "GrsClass",
    "IndexOutOfRangeError",
    "InefficientUnit",
    "InefficientUnitError",
    "LeftRts",
    "NoInputColumnsError",
    "NonpositiveValueError",
    "NoOutputColumnsError",
    "Numeric",
    "OneSidedRts",
    "OracleConfig",
    "Orientation",
    "OutOfDomainError",
    "ParseError",
    "Point",
    "RaggedRowsError",
    "RatioTable",
    "ReportWriteError",
    "ResponseFunction",
    "RightRts",
    "RtsReport",
    "ScaleRatios",
    "ScalingSystem",
    "Score",
    "SigmaResult",
    "StepDerivative",
    "Tolerance",
    "UnboundedRatio",
    "UnclassifiableError",
    "UNBOUNDED",
    "build_classification_document",
    "build_efficiency_document",
    "build_ratios_document",
    "build_report_document",
    "build_response",
    "check_consistency",
    "classify_all",
    "compute_scores",
    "find_dominating",
    "grs",
    "interior_member",
    "is_efficient",
    "is_mpss",
    "left_rts",
    "main",
    "member",
    "one_sided_step_derivatives",
    "oracle_phi",
    "oracle_response_value",
    "oracle_sigma_minus",
    "oracle_sigma_plus",
    "oracle_system_feasible",
    "oracle_theta",
    "phi",
    "radial",
    "random_dataset",
    "ratio_table",
    "read_csv",
    "read_csv_text",
    "response_csv",
    "right_rts",
    "scale_ratios",
    "sigma_minus",
    "sigma_plus",
    "theta",
    "validate_dataset",
    "verify_dataset",
    "verify_random",
    "write_csv",
    "write_report",
]
