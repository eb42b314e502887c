#include "bfr/bf_core.hpp"

#include <cmath>
#include <sstream>

#include "bfr/errors.hpp"
#include "bfr/numerics.hpp"

namespace bfr {

TestSetup::TestSetup(int n, double z, double sigma) : n_(n), z_(z) {
    if (n < 1) {
        throw DomainError("TestSetup: sample size n must be >= 1");
    }
    if (!std::isfinite(z)) {
        throw DomainError("TestSetup: z must be finite");
    }
    if (sigma != 1.0) {
        std::ostringstream msg;
        msg << "TestSetup: only the unit known-variance model is supported (sigma = " << sigma << ")";
        throw DomainError(msg.str());
    }
}

TestSetup TestSetup::from_mean(int n, double mean) {
    if (n < 1) {
        throw DomainError("TestSetup: sample size n must be >= 1");
    }
    return TestSetup(n, std::sqrt(static_cast<double>(n)) * mean);
}

double TestSetup::mean() const noexcept { return z_ / std::sqrt(static_cast<double>(n_)); }

NormalPrior::NormalPrior(double tau_) : tau(tau_) {
    if (!(tau > 0.0) || !std::isfinite(tau)) {
        throw DomainError("NormalPrior: tau must be positive and finite");
    }
}

double NormalPrior::k(const TestSetup& setup) const noexcept {
    return static_cast<double>(setup.n()) * tau * tau;
}

std::string_view to_string(Direction d) noexcept {
    switch (d) {
        case Direction::FavoursH1: return "FavoursH1";
        case Direction::Neutral: return "Neutral";
        case Direction::FavoursH0: return "FavoursH0";
    }
    return "Unknown";
}

std::optional<Direction> parse_direction(std::string_view s) noexcept {
    if (s == "FavoursH1") return Direction::FavoursH1;
    if (s == "Neutral") return Direction::Neutral;
    if (s == "FavoursH0") return Direction::FavoursH0;
    return std::nullopt;
}

Direction direction_of(double log_bf01) noexcept {
    if (std::abs(log_bf01) <= kNeutralLogBand) return Direction::Neutral;
    return log_bf01 < 0.0 ? Direction::FavoursH1 : Direction::FavoursH0;
}

BayesFactorResult BayesFactorResult::from_log(double log_bf01) noexcept {
    return {std::exp(log_bf01), log_bf01, direction_of(log_bf01)};
}

double log_bf01(double z, double k) {
    if (!(k >= 0.0)) {
        throw DomainError("log_bf01: k must be >= 0");
    }
    if (std::isinf(k)) return k;
    // k/(1+k) written as 1 - 1/(1+k) loses precision for small k.
    return 0.5 * std::log1p(k) - 0.5 * z * z * (k / (1.0 + k));
}

BayesFactorResult bf01(const TestSetup& setup, const NormalPrior& prior) {
    return BayesFactorResult::from_log(log_bf01(setup.z(), prior.k(setup)));
}

double dlogbf_dk(double z, double k) {
    if (!(k >= 0.0)) {
        throw DomainError("dlogbf_dk: k must be >= 0");
    }
    const double a = 1.0 + k;
    return (a - z * z) / (2.0 * a * a);
}

std::optional<double> bf_argmin_k(double z) noexcept {
    if (!(std::abs(z) > 1.0)) return std::nullopt;
    return z * z - 1.0;
}

double posterior_prob_h0(double bf01, double pi0) {
    if (!(bf01 > 0.0)) {
        throw DomainError("posterior_prob_h0: bf01 must be positive");
    }
    if (!(pi0 > 0.0 && pi0 < 1.0)) {
        throw DomainError("posterior_prob_h0: pi0 must lie in (0, 1)");
    }
    if (std::isinf(bf01)) return 1.0;
    const double odds = pi0 * bf01 / (1.0 - pi0);
    return odds / (1.0 + odds);
}

double two_sided_p(double z) noexcept { return std::erfc(std::abs(z) / std::sqrt(2.0)); }

}  // namespace bfr
