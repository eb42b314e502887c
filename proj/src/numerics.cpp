#include "bfr/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <sstream>

#include "bfr/errors.hpp"

namespace bfr::numerics {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// 21-point Kronrod extension of the 10-point Gauss rule (QUADPACK qk21).
// Odd indices 1,3,..,9 of the abscissae are the Gauss nodes.
constexpr std::array<double, 11> kKronrodNodes = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};

constexpr std::array<double, 11> kKronrodWeights = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077657926131143, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};

constexpr std::array<double, 5> kGaussWeights = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Panel {
    int piece;
    double a;
    double b;
    double value;
    double error;

    bool operator<(const Panel& other) const { return error < other.error; }
};

struct Estimate {
    double value;
    double error;
};

// One GK21 panel with the QUADPACK error heuristic.
Estimate gauss_kronrod21(const ScalarFn& g, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    std::array<double, 21> fv{};
    const double f_center = g(center);
    double kronrod = f_center * kKronrodWeights[10];
    double gauss = 0.0;
    double abs_sum = std::abs(kronrod);
    for (std::size_t j = 0; j < 10; ++j) {
        const double dx = half * kKronrodNodes[j];
        const double f1 = g(center - dx);
        const double f2 = g(center + dx);
        fv[2 * j] = f1;
        fv[2 * j + 1] = f2;
        kronrod += kKronrodWeights[j] * (f1 + f2);
        abs_sum += kKronrodWeights[j] * (std::abs(f1) + std::abs(f2));
        if (j % 2 == 1) {
            gauss += kGaussWeights[j / 2] * (f1 + f2);
        }
    }

    const double mean = 0.5 * kronrod;
    double asc = kKronrodWeights[10] * std::abs(f_center - mean);
    for (std::size_t j = 0; j < 10; ++j) {
        asc += kKronrodWeights[j] * (std::abs(fv[2 * j] - mean) + std::abs(fv[2 * j + 1] - mean));
    }

    const double value = kronrod * half;
    const double resabs = abs_sum * std::abs(half);
    const double resasc = asc * std::abs(half);
    double error = std::abs((kronrod - gauss) * half);
    if (resasc != 0.0 && error != 0.0) {
        error = resasc * std::min(1.0, std::pow(200.0 * error / resasc, 1.5));
    }
    if (resabs > std::numeric_limits<double>::min() / (50.0 * kEps)) {
        error = std::max(50.0 * kEps * resabs, error);
    }
    return {value, error};
}

Estimate integrate_pieces(const ScalarFn& f, const SolverConfig& cfg, const RealLineOptions& opts) {
    cfg.validate();
    if (!(opts.scale > 0.0) || !std::isfinite(opts.scale)) {
        throw DomainError("integrate_real_line: scale must be positive and finite");
    }
    if (opts.max_panels < 3) {
        throw DomainError("integrate_real_line: max_panels must be at least 3");
    }

    std::vector<double> cuts = opts.breakpoints;
    if (cuts.empty()) {
        cuts.push_back(0.0);
    }
    for (double c : cuts) {
        if (!std::isfinite(c)) {
            throw DomainError("integrate_real_line: breakpoints must be finite");
        }
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    const double s = opts.scale;
    const double left = cuts.front();
    const double right = cuts.back();
    constexpr double kQuarterTurn = 0.5 * std::numbers::pi;

    // Piece 0: left tail, piece 1: right tail, pieces 2..: finite panels.
    std::vector<ScalarFn> pieces;
    std::vector<std::pair<double, double>> ranges;
    pieces.emplace_back([&f, left, s](double theta) {
        const double c = std::cos(theta);
        const double mu = left - s * std::tan(theta);
        if (!std::isfinite(mu) || c == 0.0) return 0.0;
        const double v = f(mu);
        return v == 0.0 ? 0.0 : v * s / (c * c);
    });
    ranges.emplace_back(0.0, kQuarterTurn);
    pieces.emplace_back([&f, right, s](double theta) {
        const double c = std::cos(theta);
        const double mu = right + s * std::tan(theta);
        if (!std::isfinite(mu) || c == 0.0) return 0.0;
        const double v = f(mu);
        return v == 0.0 ? 0.0 : v * s / (c * c);
    });
    ranges.emplace_back(0.0, kQuarterTurn);
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        pieces.emplace_back(std::cref(f));
        ranges.emplace_back(cuts[i], cuts[i + 1]);
    }

    std::priority_queue<Panel> heap;
    double total = 0.0;
    double total_err = 0.0;
    for (std::size_t p = 0; p < pieces.size(); ++p) {
        const auto [a, b] = ranges[p];
        const Estimate e = gauss_kronrod21(pieces[p], a, b);
        heap.push({static_cast<int>(p), a, b, e.value, e.error});
        total += e.value;
        total_err += e.error;
    }

    auto converged = [&] { return total_err <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total)); };

    while (!converged()) {
        if (!std::isfinite(total) || !std::isfinite(total_err)) {
            throw ConvergenceError("integrate_real_line: integrand produced a non-finite value");
        }
        if (static_cast<int>(heap.size()) >= opts.max_panels) {
            std::ostringstream msg;
            msg << "integrate_real_line: error estimate " << total_err << " above tolerance after "
                << heap.size() << " panels";
            throw ConvergenceError(msg.str());
        }
        const Panel worst = heap.top();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(worst.a < mid && mid < worst.b)) {
            throw ConvergenceError("integrate_real_line: panel width reached roundoff level");
        }
        heap.pop();
        const ScalarFn& g = pieces[static_cast<std::size_t>(worst.piece)];
        const Estimate lo = gauss_kronrod21(g, worst.a, mid);
        const Estimate hi = gauss_kronrod21(g, mid, worst.b);
        heap.push({worst.piece, worst.a, mid, lo.value, lo.error});
        heap.push({worst.piece, mid, worst.b, hi.value, hi.error});
        total += lo.value + hi.value - worst.value;
        total_err += lo.error + hi.error - worst.error;
    }

    // Re-sum to shed the drift of the running totals.
    double value = 0.0;
    double error = 0.0;
    while (!heap.empty()) {
        value += heap.top().value;
        error += heap.top().error;
        heap.pop();
    }
    return {value, error};
}

}  // namespace

Bracket::Bracket(double lo_, double hi_) : lo(lo_), hi(hi_) {
    if (!(lo < hi)) {
        std::ostringstream msg;
        msg << "Bracket requires lo < hi, got [" << lo << ", " << hi << "]";
        throw DomainError(msg.str());
    }
}

void SolverConfig::validate() const {
    if (!(rel_tol > 0.0) || !(abs_tol >= 0.0) || max_iter < 1) {
        throw DomainError("SolverConfig requires rel_tol > 0, abs_tol >= 0, max_iter >= 1");
    }
}

double find_root(const ScalarFn& f, Bracket bracket, const SolverConfig& cfg) {
    cfg.validate();
    double a = bracket.lo;
    double b = bracket.hi;
    double fa = f(a);
    double fb = f(b);
    if (std::isnan(fa) || std::isnan(fb)) {
        throw DomainError("find_root: function is NaN at a bracket endpoint");
    }
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if ((fa > 0.0) == (fb > 0.0)) {
        std::ostringstream msg;
        msg << "find_root: no sign change on [" << a << ", " << b << "] (f = " << fa << ", " << fb << ")";
        throw NoSignChange(msg.str());
    }

    double c = a;
    double fc = fa;
    double step = b - a;
    double prev_step = step;
    for (int iter = 0; iter < cfg.max_iter; ++iter) {
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a;
            fc = fa;
            step = prev_step = b - a;
        }
        if (std::abs(fc) < std::abs(fb)) {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }

        // Half the admissible final bracket width.
        const double tol = 0.5 * std::max({cfg.abs_tol, cfg.rel_tol * std::abs(b), 4.0 * kEps * std::abs(b)});
        const double half = 0.5 * (c - b);
        if (std::abs(half) <= tol || fb == 0.0) {
            return b;
        }

        if (std::abs(prev_step) >= tol && std::abs(fa) > std::abs(fb)) {
            const double s = fb / fa;
            double p;
            double q;
            if (a == c) {
                p = 2.0 * half * s;
                q = 1.0 - s;
            } else {
                const double qa = fa / fc;
                const double r = fb / fc;
                p = s * (2.0 * half * qa * (qa - r) - (b - a) * (r - 1.0));
                q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) {
                q = -q;
            } else {
                p = -p;
            }
            if (2.0 * p < std::min(3.0 * half * q - std::abs(tol * q), std::abs(prev_step * q))) {
                prev_step = step;
                step = p / q;
            } else {
                step = half;
                prev_step = step;
            }
        } else {
            step = half;
            prev_step = step;
        }

        a = b;
        fa = fb;
        b += std::abs(step) > tol ? step : std::copysign(tol, half);
        fb = f(b);
        if (std::isnan(fb)) {
            throw DomainError("find_root: function returned NaN inside the bracket");
        }
    }
    std::ostringstream msg;
    msg << "find_root: no convergence after " << cfg.max_iter << " iterations";
    throw MaxIterExceeded(msg.str());
}

double lambert_w0(double x, const SolverConfig& cfg) {
    cfg.validate();
    constexpr double kBranch = -1.0 / std::numbers::e;
    if (std::isnan(x) || x < kBranch - 4.0 * kEps) {
        std::ostringstream msg;
        msg << "lambert_w0: argument " << x << " below -1/e";
        throw DomainError(msg.str());
    }
    if (x <= kBranch) return -1.0;
    if (x == 0.0) return 0.0;
    if (std::isinf(x)) return x;

    double w;
    if (x < -0.25) {
        const double p = std::sqrt(2.0 * (std::numbers::e * x + 1.0));
        w = -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * 11.0 / 72.0));
    } else if (x < 3.0) {
        const double l = std::log1p(x);
        w = l * (1.0 - std::log1p(l) / (2.0 + l));
    } else {
        const double l1 = std::log(x);
        const double l2 = std::log(l1);
        w = l1 - l2 + l2 / l1;
    }

    for (int iter = 0; iter < cfg.max_iter; ++iter) {
        const double ew = std::exp(w);
        const double resid = w * ew - x;
        const double wp1 = w + 1.0;
        if (resid == 0.0 || wp1 == 0.0) break;
        const double denom = ew * wp1 - (w + 2.0) * resid / (2.0 * wp1);
        if (denom == 0.0 || !std::isfinite(denom)) break;
        const double dw = resid / denom;
        w = std::max(w - dw, -1.0);
        if (std::abs(dw) <= 0.1 * cfg.rel_tol * (1.0 + std::abs(w))) break;
    }
    return w;
}

double integrate_real_line(const ScalarFn& f, const SolverConfig& cfg, const RealLineOptions& opts) {
    return integrate_pieces(f, cfg, opts).value;
}

LogIntegral integrate_real_line_log(const ScalarFn& log_f, const SolverConfig& cfg,
                                    const RealLineOptions& opts) {
    std::vector<double> probes = opts.breakpoints;
    if (probes.empty()) probes.push_back(0.0);
    const auto [lo_it, hi_it] = std::minmax_element(probes.begin(), probes.end());
    const double lo = *lo_it - opts.scale;
    const double hi = *hi_it + opts.scale;
    constexpr int kGrid = 64;
    for (int i = 0; i <= kGrid; ++i) {
        probes.push_back(lo + (hi - lo) * i / kGrid);
    }

    double shift = -std::numeric_limits<double>::infinity();
    for (double mu : probes) {
        const double v = log_f(mu);
        if (std::isfinite(v)) shift = std::max(shift, v);
    }
    if (!std::isfinite(shift)) {
        throw ConvergenceError("integrate_real_line_log: log integrand not finite at any probe point");
    }

    const ScalarFn shifted = [&log_f, shift](double mu) { return std::exp(log_f(mu) - shift); };
    const Estimate e = integrate_pieces(shifted, cfg, opts);
    if (!(e.value > 0.0)) {
        throw ConvergenceError("integrate_real_line_log: integral is not positive");
    }
    return {shift + std::log(e.value), e.error / e.value};
}

double std_normal_pdf(double x) noexcept { return std::exp(std_normal_log_pdf(x)); }

double std_normal_log_pdf(double x) noexcept {
    constexpr double kHalfLog2Pi = 0.91893853320467274178032973640562;
    return -kHalfLog2Pi - 0.5 * x * x;
}

double std_normal_cdf(double x) noexcept { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double normal_log_pdf(double x, double mean, double sd) noexcept {
    const double u = (x - mean) / sd;
    return std_normal_log_pdf(u) - std::log(sd);
}

double cauchy_log_pdf(double x, double location, double scale) noexcept {
    const double u = (x - location) / scale;
    return -std::log(std::numbers::pi * scale) - std::log1p(u * u);
}

}  // namespace bfr::numerics
