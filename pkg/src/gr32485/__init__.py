"""Special functions, verified quadrature, and a check harness certifying
the corrected closed form of Gradshteyn-Ryzhik entry 3.248.5."""

__version__ = "0.1.0"

from .contour import (
    DEFAULT_PATH,
    ContourResult,
    HankelPath,
    hankel_exp_integral,
    hankel_point,
    hankel_resolvent_integral,
    nested_radical,
    principal_sqrt,
)
from .elliptic import (
    carlson_rf,
    carlson_rj,
    complete_K,
    complete_Pi,
    incomplete_F,
    landen_residual,
)
from .quadrature import (
    DEFAULT_CONFIG,
    ComplexQuadratureResult,
    IntegrandError,
    Interval,
    QuadratureConfig,
    QuadratureResult,
    integrate,
    integrate_complex,
)
from .representations import (
    CONSTANTS,
    REPRESENTATIONS,
    Constants,
    constant_residuals,
    eval_representation,
    representation_ids,
)
from .series import (
    DEFAULT_SERIES,
    SeriesConfig,
    SeriesResult,
    double_series_I,
    hankel_series,
    inner_k_sum,
    u_integral,
    u_series,
    u_value,
)
from .special import central_binomial_ratio, gamma, log_gamma, pochhammer_half

__all__ = [
    "__version__",
    "DEFAULT_PATH",
    "ContourResult",
    "HankelPath",
    "hankel_exp_integral",
    "hankel_point",
    "hankel_resolvent_integral",
    "nested_radical",
    "principal_sqrt",
    "carlson_rf",
    "carlson_rj",
    "complete_K",
    "complete_Pi",
    "incomplete_F",
    "landen_residual",
    "DEFAULT_CONFIG",
    "ComplexQuadratureResult",
    "IntegrandError",
    "Interval",
    "QuadratureConfig",
    "QuadratureResult",
    "integrate",
    "integrate_complex",
    "CONSTANTS",
    "REPRESENTATIONS",
    "Constants",
    "constant_residuals",
    "eval_representation",
    "representation_ids",
    "DEFAULT_SERIES",
    "SeriesConfig",
    "SeriesResult",
    "double_series_I",
    "hankel_series",
    "inner_k_sum",
    "u_integral",
    "u_series",
    "u_value",
    "central_binomial_ratio",
    "gamma",
    "log_gamma",
    "pochhammer_half",
]
