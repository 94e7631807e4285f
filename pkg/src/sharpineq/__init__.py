"""Sharp constants of weighted Fourier inequalities.

Closed-form constants evaluated from Gamma-function expressions in log
space, reproduced independently by quadrature of the associated reduction
kernels, and probed from below as operator norms on the multiplicative
group. See the README for the catalog and the command-line interface.
"""

from .constants import (
    FORMULA_PARAMS,
    ConstantResult,
    InequalityParams,
    davies_hinz_a,
    davies_hinz_b,
    evaluate,
    grad_f,
    hardy_rellich_c,
    herbst_c,
    iterated_e,
    iterated_hardy_c,
    log_uncertainty_d,
    mixed_g,
    mixed_grad_c,
    mixed_sobolev_c,
    pitt_c,
    riesz_composition_const,
    riesz_norm,
    stein_weiss_b,
    sw_diag_d,
    weighted_sobolev_c,
)
from .errors import (
    DivergenceError,
    DomainError,
    HypothesisViolation,
    QuadratureError,
    TailTruncationError,
)
from .kernels import (
    PROFILE_KINDS,
    HomogeneousKernelSpec,
    KernelProfile,
    eval_profile,
    make_profile,
    profile_cell_averages,
    profile_l1_norm,
    profile_lr_norm,
    riesz_pair_value,
    sw_lemma_bound,
    zonal_integral,
)
from .quadrature import gauss_legendre, integrate_decaying, tanh_sinh
from .special import AccuracyBudget, bessel_j, digamma, gamma, log_gamma, sphere_area
from .transforms import (
    RadialGrid,
    circle_convolve,
    fractional_laplacian_radial,
    lp_norm_mult,
    mult_convolve,
    radial_fourier,
)
from .verify import (
    PROBE_FORMULAS,
    CheckReport,
    ProbeReport,
    check_constant_vs_kernel,
    kernel_norm_battery,
    probe_operator,
    run_all,
)

__version__ = "0.1.0"

__all__ = [
    "AccuracyBudget",
    "CheckReport",
    "ConstantResult",
    "DivergenceError",
    "DomainError",
    "FORMULA_PARAMS",
    "HomogeneousKernelSpec",
    "HypothesisViolation",
    "InequalityParams",
    "KernelProfile",
    "PROBE_FORMULAS",
    "PROFILE_KINDS",
    "ProbeReport",
    "QuadratureError",
    "RadialGrid",
    "TailTruncationError",
    "bessel_j",
    "check_constant_vs_kernel",
    "circle_convolve",
    "davies_hinz_a",
    "davies_hinz_b",
    "digamma",
    "eval_profile",
    "evaluate",
    "fractional_laplacian_radial",
    "gamma",
    "gauss_legendre",
    "grad_f",
    "hardy_rellich_c",
    "herbst_c",
    "integrate_decaying",
    "iterated_e",
    "iterated_hardy_c",
    "kernel_norm_battery",
    "log_gamma",
    "log_uncertainty_d",
    "lp_norm_mult",
    "make_profile",
    "mixed_g",
    "mixed_grad_c",
    "mixed_sobolev_c",
    "mult_convolve",
    "pitt_c",
    "probe_operator",
    "profile_cell_averages",
    "profile_l1_norm",
    "profile_lr_norm",
    "radial_fourier",
    "riesz_composition_const",
    "riesz_norm",
    "riesz_pair_value",
    "run_all",
    "sphere_area",
    "stein_weiss_b",
    "sw_diag_d",
    "sw_lemma_bound",
    "tanh_sinh",
    "weighted_sobolev_c",
    "zonal_integral",
    "__version__",
]
