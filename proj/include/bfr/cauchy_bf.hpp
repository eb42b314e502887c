#pragma once

#include "bfr/bf_core.hpp"
#include "bfr/numerics.hpp"

namespace bfr {

/// Cauchy(0, r) prior on mu under H1.
struct CauchyPrior {
    double r;

    explicit CauchyPrior(double r);
};

/// BF01 = N(z; 0, 1) / integral N(z; sqrt(n) mu, 1) Cauchy(mu; 0, r) dmu,
/// with the marginal computed by real-line quadrature in log space.
/// Only cfg.rel_tol and the panel budget govern accuracy; abs_tol is ignored.
BayesFactorResult bf01_cauchy(const TestSetup& setup, const CauchyPrior& prior,
                              const numerics::SolverConfig& cfg = {});

/// The same quadrature pipeline with a N(0, tau^2) weight. Exists to
/// cross-check the pipeline against the closed form.
BayesFactorResult bf01_normal_via_quadrature(const TestSetup& setup, const NormalPrior& prior,
                                             const numerics::SolverConfig& cfg = {});

/// Search range for cauchy_flip_scale.
inline constexpr double kCauchyScanMin = 1e-4;
inline constexpr double kCauchyScanMax = 1e3;

/// Cauchy scale r* with BF01 = 1: log-spaced scan of [1e-4, 1e3] for the
/// first H1 -> H0 sign change of log BF01, then Brent on log r.
/// Throws NoFlipPoint if the scan finds no sign change.
double cauchy_flip_scale(const TestSetup& setup, const numerics::SolverConfig& cfg = {});

}  // namespace bfr
