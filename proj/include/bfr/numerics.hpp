#pragma once

#include <functional>
#include <vector>

namespace bfr::numerics {

using ScalarFn = std::function<double(double)>;

/// Closed search interval for a root. Construction enforces lo < hi.
struct Bracket {
    double lo;
    double hi;

    Bracket(double lo, double hi);
    double width() const noexcept { return hi - lo; }
};

/// Tolerances and iteration budget shared by the iterative kernels.
struct SolverConfig {
    double rel_tol = 1e-12;
    double abs_tol = 1e-14;
    int max_iter = 200;

    /// Throws DomainError unless rel_tol > 0, abs_tol >= 0 and max_iter >= 1.
    void validate() const;
};

/// Brent's method (inverse quadratic / secant steps with bisection fallback).
///
/// The returned root lies inside the initial bracket. Iteration stops once the
/// enclosing interval is no wider than max(abs_tol, rel_tol * |x|), with a
/// floor of a few ulps so that rel_tol below machine epsilon still terminates.
///
/// Throws NoSignChange if f(lo) and f(hi) share a strict sign, and
/// MaxIterExceeded if the budget runs out first.
double find_root(const ScalarFn& f, Bracket bracket, const SolverConfig& cfg = {});

/// Principal branch W0 of the Lambert W function on [-1/e, inf).
/// Series start near the branch point, log-log asymptote for large x,
/// then Halley refinement. Throws DomainError for x < -1/e.
double lambert_w0(double x, const SolverConfig& cfg = {});

// Layout hints for real-line quadrature. Breakpoints split the line into
// finite panels; the two outer tails are mapped with mu = b +/- scale*tan(theta).
struct RealLineOptions {
    double scale = 1.0;
    std::vector<double> breakpoints{0.0};
    // Upper bound on the number of GK21 panels across all pieces.
    int max_panels = 4000;
};

/// Integral of f over the whole real line.
///
/// Global adaptive Gauss-Kronrod (21-point) on each piece. Stops when the
/// summed error estimate is <= max(abs_tol, rel_tol * |I|); otherwise
/// throws ConvergenceError. cfg.max_iter is not used here.
double integrate_real_line(const ScalarFn& f, const SolverConfig& cfg = {},
                           const RealLineOptions& opts = {});

struct LogIntegral {
    double log_value;
    double rel_error;
};

/// log of the integral of exp(log_f) over the real line.
///
/// log_f is evaluated at the breakpoints and on a grid spanning them; the
/// maximum found is subtracted before exponentiating, so integrands whose
/// values would underflow (or overflow) in linear space stay representable.
LogIntegral integrate_real_line_log(const ScalarFn& log_f, const SolverConfig& cfg = {},
                                    const RealLineOptions& opts = {});

double std_normal_pdf(double x) noexcept;
double std_normal_log_pdf(double x) noexcept;
double std_normal_cdf(double x) noexcept;

/// log density of N(mean, sd^2) at x.
double normal_log_pdf(double x, double mean, double sd) noexcept;
/// log density of Cauchy(location, scale) at x.
double cauchy_log_pdf(double x, double location, double scale) noexcept;

}  // namespace bfr::numerics
