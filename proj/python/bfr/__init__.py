"""Bayes factors, flip points and reversal pairs for the normal point-null model."""

from ._core import (
    BayesFactorResult,
    CauchyPrior,
    ConvergenceError,
    Direction,
    DomainError,
    Error,
    FlipMethod,
    FlipPointResult,
    MaxIterExceeded,
    NoFlipPoint,
    NormalPrior,
    NoSignChange,
    NotAReversal,
    ReversalPair,
    SolverConfig,
    TableOneRow,
    TestSetup,
    bf01,
    bf01_cauchy,
    bf01_normal_via_quadrature,
    bf_argmin_k,
    cauchy_flip_scale,
    dlogbf_dk,
    flip_point,
    lambert_w0,
    log_bf01,
    phi,
    phi_inverse,
    posterior_prob_h0,
    reversal_pair,
    run_cli,
    std_normal_cdf,
    std_normal_pdf,
    table1,
    tau_star,
    two_sided_p,
    validate_pair,
)

__version__ = "0.1.0"
