"""Maximal area problem for z/f over the starlike family S(alpha, beta)."""
from . import _backend
from .area import AreaResult, area_quadrature, area_series, area_z_over_f, dirichlet_finite, z_over_f
from .errors import (
    BadParameter,
    DivergentSeries,
    EvaluationFailure,
    InvalidParameters,
    NearZeroConstantTerm,
    NotNormalized,
    RadiusOutOfRange,
    StarlikeAreaError,
)
from .family import (
    FamilyParams,
    GridSpec,
    MembershipReport,
    SchwarzSpec,
    TargetRegion,
    extremal_g,
    extremal_k,
    janowski_params,
    lemma3_inverse,
    lemma3_transform,
    membership_test,
    sample_schwarz_spec,
    synthesize_from_schwarz,
    target_region,
)
from .series import (
    TruncatedSeries,
    ts_add,
    ts_derivative,
    ts_eval,
    ts_exp,
    ts_integrate,
    ts_log,
    ts_mul,
    ts_pow_real,
    ts_reciprocal,
    ts_rotate,
)
from .special import HyperParams, gauss_2f1, max_area, max_area_beta0, pochhammer
from .verify import (
    DominanceReport,
    LambdaSolution,
    TrialReport,
    clunie_inequality,
    conjecture_trial,
    dominance_check,
    recombination_identity_check,
    rho_small_regime_check,
    solve_lambda,
    solve_lambda_exact,
)

__version__ = "0.1.0"
backend = _backend.name
