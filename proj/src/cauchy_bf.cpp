#include "bfr/cauchy_bf.hpp"

#include <cmath>
#include <vector>

#include "bfr/errors.hpp"

namespace bfr {

namespace {

// Half-widths of the likelihood and prior-body panels, in their own scale units.
constexpr double kSpikeHalfWidth = 8.0;
constexpr double kBodyHalfWidth = 8.0;

// Prior body resolved by breakpoints at 0, +/-scale, +/-8 scale; likelihood
// spike at mean +/- 8/sqrt(n). Tails mapped with the prior scale.
numerics::RealLineOptions layout(const TestSetup& setup, double prior_scale) {
    const double se = 1.0 / std::sqrt(static_cast<double>(setup.n()));
    const double m = setup.mean();
    numerics::RealLineOptions opts;
    opts.scale = prior_scale;
    opts.breakpoints = {-kBodyHalfWidth * prior_scale, -prior_scale, 0.0, prior_scale, kBodyHalfWidth * prior_scale,
                        m - kSpikeHalfWidth * se, m + kSpikeHalfWidth * se};
    return opts;
}

template <typename LogPrior>
BayesFactorResult bf01_by_quadrature(const TestSetup& setup, double prior_scale, LogPrior log_prior,
                                     const numerics::SolverConfig& cfg) {
    const double z = setup.z();
    const double root_n = std::sqrt(static_cast<double>(setup.n()));
    const numerics::ScalarFn log_integrand = [=](double mu) {
        return numerics::std_normal_log_pdf(z - root_n * mu) + log_prior(mu);
    };
    numerics::SolverConfig qcfg = cfg;
    qcfg.abs_tol = 0.0;
    const auto marginal = numerics::integrate_real_line_log(log_integrand, qcfg, layout(setup, prior_scale));
    return BayesFactorResult::from_log(numerics::std_normal_log_pdf(z) - marginal.log_value);
}

}  // namespace

CauchyPrior::CauchyPrior(double r_) : r(r_) {
    if (!(r > 0.0) || !std::isfinite(r)) {
        throw DomainError("CauchyPrior: r must be positive and finite");
    }
}

BayesFactorResult bf01_cauchy(const TestSetup& setup, const CauchyPrior& prior,
                              const numerics::SolverConfig& cfg) {
    const double r = prior.r;
    return bf01_by_quadrature(setup, r, [r](double mu) { return numerics::cauchy_log_pdf(mu, 0.0, r); },
                              cfg);
}

BayesFactorResult bf01_normal_via_quadrature(const TestSetup& setup, const NormalPrior& prior,
                                             const numerics::SolverConfig& cfg) {
    const double tau = prior.tau;
    return bf01_by_quadrature(setup, tau, [tau](double mu) { return numerics::normal_log_pdf(mu, 0.0, tau); },
                              cfg);
}

double cauchy_flip_scale(const TestSetup& setup, const numerics::SolverConfig& cfg) {
    cfg.validate();
    const auto log_bf = [&](double log_r) { return bf01_cauchy(setup, CauchyPrior(std::exp(log_r)), cfg).log_bf01; };

    // Values inside the band are indistinguishable from quadrature noise.
    const double band = std::max(1e-10, 100.0 * cfg.rel_tol);
    constexpr int kPointsPerDecade = 8;
    const double lo = std::log(kCauchyScanMin);
    const double hi = std::log(kCauchyScanMax);
    const int steps = static_cast<int>(std::lround(std::log10(kCauchyScanMax / kCauchyScanMin) * kPointsPerDecade));

    double favour_h1_at = 0.0;
    bool seen_h1 = false;
    for (int i = 0; i <= steps; ++i) {
        const double x = lo + (hi - lo) * i / steps;
        const double v = log_bf(x);
        if (v < -band) {
            favour_h1_at = x;
            seen_h1 = true;
        } else if (v > band && seen_h1) {
            return std::exp(numerics::find_root(log_bf, {favour_h1_at, x}, cfg));
        }
    }
    throw NoFlipPoint("cauchy_flip_scale: log BF01 does not change sign for r in [1e-4, 1e3]");
}

}  // namespace bfr
