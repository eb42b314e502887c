#include "bfr/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "bfr/cauchy_bf.hpp"
#include "bfr/errors.hpp"
#include "bfr/flip.hpp"
#include "bfr/svg.hpp"

namespace bfr::report {

namespace {

using nlohmann::json;

json number(double x, Decimals decimals) {
    if (!std::isfinite(x)) return nullptr;
    return round_to(x, decimals);
}

json optional_number(const std::optional<double>& x, Decimals decimals) {
    return x ? number(*x, decimals) : json(nullptr);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json sweep_array(const std::vector<SweepRow>& rows, Decimals d) {
    json arr = json::array();
    for (const auto& r : rows) {
        arr.push_back({{"kind", to_string(r.kind)},
                       {"scale", number(r.scale, d)},
                       {"k", optional_number(r.k, d)},
                       {"bf01", number(r.bf01, d)},
                       {"log_bf01", number(r.log_bf01, d)},
                       {"direction", to_string(r.direction)}});
    }
    return arr;
}

json panel_a_array(const std::vector<CurveRow>& rows, Decimals d) {
    json arr = json::array();
    for (const auto& r : rows) {
        arr.push_back({{"kind", to_string(r.kind)},
                       {"z", number(r.z, d)},
                       {"k", number(r.k, d)},
                       {"bf01", number(r.bf01, d)},
                       {"log_bf01", number(r.log_bf01, d)},
                       {"direction", to_string(r.direction)}});
    }
    return arr;
}

}  // namespace

std::string_view to_string(PriorFamily f) noexcept { return f == PriorFamily::Normal ? "normal" : "cauchy"; }

std::string_view to_string(Spacing s) noexcept { return s == Spacing::Linear ? "linear" : "log"; }

std::string_view to_string(RowKind k) noexcept {
    switch (k) {
        case RowKind::Point: return "point";
        case RowKind::Flip: return "flip";
        case RowKind::Marker: return "marker";
    }
    return "point";
}

std::optional<PriorFamily> parse_prior_family(std::string_view s) noexcept {
    if (s == "normal") return PriorFamily::Normal;
    if (s == "cauchy") return PriorFamily::Cauchy;
    return std::nullopt;
}

std::optional<Spacing> parse_spacing(std::string_view s) noexcept {
    if (s == "linear") return Spacing::Linear;
    if (s == "log") return Spacing::Log;
    return std::nullopt;
}

std::optional<RowKind> parse_row_kind(std::string_view s) noexcept {
    if (s == "point") return RowKind::Point;
    if (s == "flip") return RowKind::Flip;
    if (s == "marker") return RowKind::Marker;
    return std::nullopt;
}

void SweepSpec::validate() const {
    if (n < 1) throw DomainError("sweep: n must be >= 1");
    if (!(scale_min > 0.0)) throw DomainError("sweep: scale-min must be > 0");
    if (!(scale_min < scale_max) || !std::isfinite(scale_max)) {
        throw DomainError("sweep: scale-min must be below a finite scale-max");
    }
    if (points < 2) throw DomainError("sweep: points must be >= 2");
}

std::vector<double> grid(double lo, double hi, int points, Spacing spacing) {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(points));
    const double a = spacing == Spacing::Log ? std::log(lo) : lo;
    const double b = spacing == Spacing::Log ? std::log(hi) : hi;
    for (int i = 0; i < points; ++i) {
        const double t = a + (b - a) * i / (points - 1);
        out.push_back(spacing == Spacing::Log ? std::exp(t) : t);
    }
    // Pin the endpoints exactly.
    out.front() = lo;
    out.back() = hi;
    return out;
}

std::vector<SweepRow> sweep(const SweepSpec& spec, const numerics::SolverConfig& cfg) {
    spec.validate();
    const TestSetup setup(spec.n, spec.z);
    std::vector<SweepRow> rows;
    for (double s : grid(spec.scale_min, spec.scale_max, spec.points, spec.spacing)) {
        if (spec.family == PriorFamily::Normal) {
            const NormalPrior prior(s);
            const auto r = bf01(setup, prior);
            rows.push_back({RowKind::Point, s, prior.k(setup), r.bf01, r.log_bf01, r.direction});
        } else {
            const auto r = bf01_cauchy(setup, CauchyPrior(s), cfg);
            rows.push_back({RowKind::Point, s, std::nullopt, r.bf01, r.log_bf01, r.direction});
        }
    }
    if (spec.family == PriorFamily::Normal && std::abs(spec.z) > 1.0) {
        const auto fp = flip_point(spec.z, FlipMethod::Bracketed, cfg);
        rows.push_back({RowKind::Flip, tau_star(fp.k_star, spec.n), fp.k_star, 1.0, 0.0, Direction::Neutral});
    }
    return rows;
}

TableOneRow table_one_row(double z) {
    const double k = flip_point(z).k_star;
    return {z, z * z, two_sided_p(z), k, tau_star(k, 50), tau_star(k, 100)};
}

std::vector<TableOneRow> table1() {
    std::vector<TableOneRow> rows;
    for (double z : kTableOneZ) rows.push_back(table_one_row(z));
    return rows;
}

FigureOneData figure1() {
    FigureOneData fig;
    const auto ks = grid(kPanelAKMin, kPanelAKMax, kPanelAPoints, Spacing::Log);
    for (double z : kPanelAZ) {
        for (double k : ks) {
            const auto r = BayesFactorResult::from_log(log_bf01(z, k));
            fig.panel_a.push_back({RowKind::Point, z, k, r.bf01, r.log_bf01, r.direction});
        }
        fig.panel_a.push_back({RowKind::Flip, z, flip_point(z).k_star, 1.0, 0.0, Direction::Neutral});
    }

    fig.panel_b = sweep({kPanelBZ, kPanelBN, PriorFamily::Normal, kPanelBTauMin, kPanelBTauMax, kPanelBPoints,
                         Spacing::Linear});
    const TestSetup setup(kPanelBN, kPanelBZ);
    for (double tau : kPanelBMarkers) {
        const NormalPrior prior(tau);
        const auto r = bf01(setup, prior);
        fig.panel_b.push_back({RowKind::Marker, tau, prior.k(setup), r.bf01, r.log_bf01, r.direction});
    }
    return fig;
}

double round_to(double x, Decimals decimals) {
    if (!decimals || !std::isfinite(x)) return x;
    const double scale = std::pow(10.0, *decimals);
    const double r = std::round(x * scale) / scale;
    return r == 0.0 ? 0.0 : r;  // no "-0"
}

std::string format_number(double x, Decimals decimals) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    if (decimals) {
        std::snprintf(buf, sizeof buf, "%.*f", *decimals, round_to(x, decimals));
    } else {
        std::snprintf(buf, sizeof buf, "%.17g", x);
    }
    return buf;
}

std::string table1_csv(const std::vector<TableOneRow>& rows, Decimals d) {
    return table1_csv(rows, TableOneDecimals{d, d, d, d, d, d});
}

std::string table1_json(const std::vector<TableOneRow>& rows, Decimals d) {
    return table1_json(rows, TableOneDecimals{d, d, d, d, d, d});
}

std::string table1_csv(const std::vector<TableOneRow>& rows, const TableOneDecimals& d) {
    std::ostringstream out;
    out << "z,z_squared,p_value,k_star,tau_star_n50,tau_star_n100\n";
    for (const auto& r : rows) {
        out << format_number(r.z, d[0]) << ',' << format_number(r.z_squared, d[1]) << ','
            << format_number(r.p_value, d[2]) << ',' << format_number(r.k_star, d[3]) << ','
            << format_number(r.tau_star_n50, d[4]) << ',' << format_number(r.tau_star_n100, d[5]) << '\n';
    }
    return out.str();
}

std::string table1_json(const std::vector<TableOneRow>& rows, const TableOneDecimals& d) {
    json arr = json::array();
    for (const auto& r : rows) {
        arr.push_back({{"z", number(r.z, d[0])},
                       {"z_squared", number(r.z_squared, d[1])},
                       {"p_value", number(r.p_value, d[2])},
                       {"k_star", number(r.k_star, d[3])},
                       {"tau_star_n50", number(r.tau_star_n50, d[4])},
                       {"tau_star_n100", number(r.tau_star_n100, d[5])}});
    }
    return dump(arr);
}

std::string sweep_csv(const std::vector<SweepRow>& rows, Decimals d) {
    std::ostringstream out;
    out << "kind,scale,k,bf01,log_bf01,direction\n";
    for (const auto& r : rows) {
        out << to_string(r.kind) << ',' << format_number(r.scale, d) << ',' << (r.k ? format_number(*r.k, d) : "")
            << ',' << format_number(r.bf01, d) << ',' << format_number(r.log_bf01, d) << ','
            << to_string(r.direction) << '\n';
    }
    return out.str();
}

std::string sweep_json(const std::vector<SweepRow>& rows, Decimals d) { return dump(sweep_array(rows, d)); }

std::string panel_a_csv(const std::vector<CurveRow>& rows, Decimals d) {
    std::ostringstream out;
    out << "kind,z,k,bf01,log_bf01,direction\n";
    for (const auto& r : rows) {
        out << to_string(r.kind) << ',' << format_number(r.z, d) << ',' << format_number(r.k, d) << ','
            << format_number(r.bf01, d) << ',' << format_number(r.log_bf01, d) << ',' << to_string(r.direction)
            << '\n';
    }
    return out.str();
}

std::string panel_a_json(const std::vector<CurveRow>& rows, Decimals d) { return dump(panel_a_array(rows, d)); }

std::string figure1_csv(const FigureOneData& fig, Decimals d) {
    return "# panel A\n" + panel_a_csv(fig.panel_a, d) + "\n# panel B\n" + sweep_csv(fig.panel_b, d);
}

std::string figure1_json(const FigureOneData& fig, Decimals d) {
    return dump({{"panel_a", panel_a_array(fig.panel_a, d)}, {"panel_b", sweep_array(fig.panel_b, d)}});
}

std::string sweep_svg(const SweepSpec& spec, const std::vector<SweepRow>& rows) {
    std::ostringstream title;
    title << "BF01 vs prior scale (" << to_string(spec.family) << " prior, z = " << spec.z << ", n = " << spec.n << ")";
    svg::LinePlot plot(title.str(), spec.family == PriorFamily::Normal ? "tau" : "r", "BF01");
    plot.log_x(spec.spacing == Spacing::Log).log_y();

    svg::Series curve{"BF01", {}, ""};
    for (const auto& r : rows) {
        if (r.kind == RowKind::Point) {
            curve.points.push_back({r.scale, r.bf01});
        } else {
            plot.add_marker({{r.scale, r.bf01}, r.kind == RowKind::Flip ? "flip" : "", ""});
        }
    }
    plot.add_series(std::move(curve));
    plot.add_hline({1.0, "BF01 = 1"});
    return plot.render();
}

std::string panel_a_svg(const std::vector<CurveRow>& rows) {
    svg::LinePlot plot("BF01 vs k = n tau^2", "k", "BF01");
    plot.log_x().log_y();
    std::vector<svg::Series> curves;
    for (const auto& r : rows) {
        if (r.kind != RowKind::Point) continue;
        if (curves.empty() || curves.back().label != "z = " + format_number(r.z, 2)) {
            curves.push_back({"z = " + format_number(r.z, 2), {}, svg::LinePlot::palette(curves.size())});
        }
        curves.back().points.push_back({r.k, r.bf01});
    }
    for (const auto& r : rows) {
        if (r.kind != RowKind::Flip) continue;
        for (const auto& c : curves) {
            if (c.label == "z = " + format_number(r.z, 2)) plot.add_marker({{r.k, r.bf01}, "", c.color});
        }
    }
    for (auto& c : curves) plot.add_series(std::move(c));
    plot.add_hline({1.0, "BF01 = 1"});
    return plot.render();
}

std::string panel_b_svg(const std::vector<SweepRow>& rows) {
    svg::LinePlot plot("z = 2.0, n = 50", "tau", "BF01");
    svg::Series curve{"BF01", {}, ""};
    for (const auto& r : rows) {
        if (r.kind == RowKind::Point) {
            curve.points.push_back({r.scale, r.bf01});
        } else if (r.kind == RowKind::Marker) {
            plot.add_marker({{r.scale, r.bf01}, "tau = " + format_number(r.scale, 1) + ": " + format_number(r.bf01, 2),
                             r.bf01 < 1.0 ? "#1f77b4" : "#d62728"});
        } else {
            plot.add_vline({r.scale, "tau* = " + format_number(r.scale, 2)});
        }
    }
    plot.add_series(std::move(curve));
    plot.add_hline({1.0, "BF01 = 1"});
    return plot.render();
}

}  // namespace bfr::report
