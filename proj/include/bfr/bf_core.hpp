#pragma once

#include <optional>
#include <string_view>

namespace bfr {

/// Summary statistics for the known-variance normal model, H0: mu = 0.
class TestSetup {
public:
    /// Throws DomainError unless n >= 1, z is finite and sigma == 1.
    TestSetup(int n, double z, double sigma = 1.0);

    /// Build from the sample mean instead of the z-statistic (z = sqrt(n) * mean).
    static TestSetup from_mean(int n, double mean);

    int n() const noexcept { return n_; }
    double z() const noexcept { return z_; }
    double sigma() const noexcept { return 1.0; }
    double mean() const noexcept;

private:
    int n_;
    double z_;
};

/// N(0, tau^2) prior on mu under H1.
struct NormalPrior {
    double tau;

    explicit NormalPrior(double tau);

    /// k = n * tau^2, the prior variance measured in units of the sampling variance.
    double k(const TestSetup& setup) const noexcept;
};

enum class Direction { FavoursH1, Neutral, FavoursH0 };

std::string_view to_string(Direction d) noexcept;
std::optional<Direction> parse_direction(std::string_view s) noexcept;

/// |log BF01| at or below this is reported as Neutral.
inline constexpr double kNeutralLogBand = 1e-12;

struct BayesFactorResult {
    double bf01;
    double log_bf01;
    Direction direction;

    static BayesFactorResult from_log(double log_bf01) noexcept;
};

Direction direction_of(double log_bf01) noexcept;

/// log BF01(z; k) = 0.5 log(1+k) - z^2 k / (2(1+k)). Throws DomainError for k < 0.
double log_bf01(double z, double k);

BayesFactorResult bf01(const TestSetup& setup, const NormalPrior& prior);

/// d log BF01 / dk = ((1+k) - z^2) / (2 (1+k)^2).
double dlogbf_dk(double z, double k);

/// Minimiser k = z^2 - 1 of BF01 over k >= 0, or nullopt when |z| <= 1
/// (BF01 is then nondecreasing in k).
std::optional<double> bf_argmin_k(double z) noexcept;

/// P(H0 | data) given BF01 and prior mass pi0 on the null.
double posterior_prob_h0(double bf01, double pi0 = 0.5);

/// 2 (1 - Phi(|z|)).
double two_sided_p(double z) noexcept;

}  // namespace bfr
