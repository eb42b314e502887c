#include "bfr/flip.hpp"

#include <cmath>
#include <sstream>

#include "bfr/errors.hpp"

namespace bfr {

namespace {

void require_flip_exists(double z) {
    if (!(std::abs(z) > 1.0)) {
        std::ostringstream msg;
        msg << "no flip point for |z| = " << std::abs(z) << " <= 1: BF01 >= 1 for every prior scale";
        throw NoFlipPoint(msg.str());
    }
}

// Search upward from the BF01 minimiser k = z^2 - 1, doubling until BF01 > 1.
double flip_bracketed(double z, const numerics::SolverConfig& cfg) {
    const double z2 = z * z;
    const double lo = z2 - 1.0;
    double hi = std::max(2.0 * lo, 2.0);
    while (log_bf01(z, hi) <= 0.0) {
        hi *= 2.0;
        if (!std::isfinite(hi)) {
            throw NoFlipPoint("flip point bracket search overflowed");
        }
    }
    return numerics::find_root([z](double k) { return log_bf01(z, k); }, {lo, hi}, cfg);
}

double flip_lambert(double z, const numerics::SolverConfig& cfg) {
    const double z2 = z * z;
    const double w = numerics::lambert_w0(-z2 * std::exp(-z2), cfg);
    return std::expm1(w + z2);
}

}  // namespace

std::string_view to_string(FlipMethod m) noexcept {
    return m == FlipMethod::Bracketed ? "Bracketed" : "LambertW";
}

std::optional<FlipMethod> parse_flip_method(std::string_view s) noexcept {
    if (s == "Bracketed" || s == "bracketed") return FlipMethod::Bracketed;
    if (s == "LambertW" || s == "lambert" || s == "lambertw") return FlipMethod::LambertW;
    return std::nullopt;
}

double phi(double k) {
    if (!(k > 0.0)) {
        throw DomainError("phi: k must be > 0");
    }
    return (1.0 + k) * std::log1p(k) / k;
}

double phi_inverse(double y, const numerics::SolverConfig& cfg) {
    if (!(y > 1.0) || !std::isfinite(y)) {
        throw DomainError("phi_inverse: y must be finite and > 1");
    }
    // phi(k) < 1 + k/2 for k > 0, so phi(2(y - 1)) < y gives a lower end.
    double lo = 2.0 * (y - 1.0);
    while (phi(lo) >= y) {
        lo *= 0.5;
    }
    double hi = std::max(2.0 * lo, 1.0);
    while (phi(hi) <= y) {
        hi *= 2.0;
        if (!std::isfinite(hi)) {
            throw DomainError("phi_inverse: bracket search overflowed");
        }
    }
    return numerics::find_root([y](double k) { return phi(k) - y; }, {lo, hi}, cfg);
}

double flip_residual(double z, double k) noexcept { return (1.0 + k) * std::log1p(k) - z * z * k; }

FlipPointResult flip_point(double z, FlipMethod method, const numerics::SolverConfig& cfg) {
    require_flip_exists(z);
    if (std::abs(z) < kLambertMinAbsZ) {
        method = FlipMethod::Bracketed;
    }
    const double k = method == FlipMethod::LambertW ? flip_lambert(z, cfg) : flip_bracketed(z, cfg);
    return {k, flip_residual(z, k), method, z};
}

double tau_star(double k_star, int n) {
    if (!(k_star > 0.0) || n < 1) {
        throw DomainError("tau_star: need k_star > 0 and n >= 1");
    }
    return std::sqrt(k_star / static_cast<double>(n));
}

ReversalPair reversal_pair(const TestSetup& setup, double spread) {
    if (!(spread > 0.0 && spread < 1.0)) {
        throw DomainError("reversal_pair: spread must lie in (0, 1)");
    }
    const double ts = tau_star(flip_point(setup.z()).k_star, setup.n());
    double keep = 1.0 - spread;
    for (int attempt = 0; attempt < 64; ++attempt) {
        const double tau1 = keep * ts;
        const double tau2 = ts / keep;
        const auto r1 = bf01(setup, NormalPrior(tau1));
        const auto r2 = bf01(setup, NormalPrior(tau2));
        if (r1.direction == Direction::FavoursH1 && r2.direction == Direction::FavoursH0) {
            return {tau1, tau2, ts, r1.bf01, r2.bf01};
        }
        keep *= keep;
    }
    throw NotAReversal("reversal_pair: could not separate the pair from the neutral band");
}

ReversalPair validate_pair(const TestSetup& setup, double tau1, double tau2) {
    if (!(tau1 > 0.0) || !(tau2 > 0.0)) {
        throw DomainError("validate_pair: prior scales must be positive");
    }
    const double ts = tau_star(flip_point(setup.z()).k_star, setup.n());
    const double bf1 = bf01(setup, NormalPrior(tau1)).bf01;
    const double bf2 = bf01(setup, NormalPrior(tau2)).bf01;

    std::ostringstream why;
    if (!(tau1 < tau2)) {
        why << "ordering: tau1 = " << tau1 << " is not below tau2 = " << tau2;
    } else if (!(tau1 < ts)) {
        why << "lower side: tau1 = " << tau1 << " is not below tau* = " << ts;
    } else if (!(ts < tau2)) {
        why << "upper side: tau2 = " << tau2 << " is not above tau* = " << ts;
    } else if (!(bf1 < 1.0)) {
        why << "lower side: bf1 = " << bf1 << " does not favour H1";
    } else if (!(bf2 > 1.0)) {
        why << "upper side: bf2 = " << bf2 << " does not favour H0";
    } else {
        return {tau1, tau2, ts, bf1, bf2};
    }
    throw NotAReversal("not a reversal pair (" + why.str() + ")");
}

}  // namespace bfr
