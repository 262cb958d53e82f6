from graphzip.mdl.completion import (
    CompletionMethod,
    completion_residual,
    dempster_complete,
)
from graphzip.mdl.gaussian import (
    Matrix,
    Normalization,
    is_positive_definite,
    load_matrix,
    sample_covariance,
    sample_gaussian,
    standardize,
)
from graphzip.mdl.glasso import (
    GlassoResult,
    dual_gap,
    graphical_lasso,
    kkt_residual,
)
from graphzip.mdl.metrics import f1_score
from graphzip.mdl.precision import (
    PrecisionFamily,
    PrecisionSpec,
    generate_precision,
    true_graph,
)
from graphzip.mdl.predictive import (
    PredictiveResult,
    default_warmup,
    gaussian_bits,
    predictive_mdl,
    refit_interval,
)
from graphzip.mdl.selection import (
    LambdaEntry,
    LambdaFit,
    Selection,
    SelectionOptions,
    default_grid,
    fit_path,
    lambda_grid,
    path_optimum_f1,
    run_experiment,
    score_path,
    select_model,
)

__all__ = [
    "CompletionMethod",
    "GlassoResult",
    "LambdaEntry",
    "LambdaFit",
    "Matrix",
    "Normalization",
    "PrecisionFamily",
    "PrecisionSpec",
    "PredictiveResult",
    "Selection",
    "SelectionOptions",
    "completion_residual",
    "default_grid",
    "default_warmup",
    "dempster_complete",
    "dual_gap",
    "f1_score",
    "fit_path",
    "gaussian_bits",
    "generate_precision",
    "graphical_lasso",
    "is_positive_definite",
    "kkt_residual",
    "lambda_grid",
    "load_matrix",
    "path_optimum_f1",
    "predictive_mdl",
    "refit_interval",
    "run_experiment",
    "sample_covariance",
    "sample_gaussian",
    "score_path",
    "select_model",
    "standardize",
    "true_graph",
]
