#pragma once

#include <optional>
#include <string_view>

#include "bfr/bf_core.hpp"
#include "bfr/numerics.hpp"

namespace bfr {

enum class FlipMethod { Bracketed, LambertW };

std::string_view to_string(FlipMethod m) noexcept;
std::optional<FlipMethod> parse_flip_method(std::string_view s) noexcept;

/// Root k* > 0 of (1+k) ln(1+k) = z^2 k, where BF01(z; k*) = 1.
struct FlipPointResult {
    double k_star;
    double residual;  // (1+k*) ln(1+k*) - z^2 k*
    FlipMethod method;  // the method actually used
    double z;
};

/// Two normal-prior scales on opposite sides of tau* with opposite verdicts.
struct ReversalPair {
    double tau1;
    double tau2;
    double tau_star;
    double bf1;
    double bf2;
};

/// phi(k) = (1+k) ln(1+k) / k, increasing from 1 (k -> 0+) to infinity.
double phi(double k);

/// k > 0 with phi(k) = y. Throws DomainError for y <= 1.
double phi_inverse(double y, const numerics::SolverConfig& cfg = {});

/// (1+k) ln(1+k) - z^2 k.
double flip_residual(double z, double k) noexcept;

/// Below this |z| the W0 argument sits too close to -1/e and Bracketed is used instead.
inline constexpr double kLambertMinAbsZ = 1.001;

/// Throws NoFlipPoint for |z| <= 1.
FlipPointResult flip_point(double z, FlipMethod method = FlipMethod::Bracketed,
                           const numerics::SolverConfig& cfg = {});

/// sqrt(k* / n).
double tau_star(double k_star, int n);

/// tau1 = (1 - spread) tau*, tau2 = tau* / (1 - spread); the spread is widened
/// if either side lands in the Neutral band.
ReversalPair reversal_pair(const TestSetup& setup, double spread = 0.5);

/// Throws NotAReversal naming the failed condition if (tau1, tau2) do not
/// straddle tau* with bf1 < 1 < bf2.
ReversalPair validate_pair(const TestSetup& setup, double tau1, double tau2);

}  // namespace bfr
