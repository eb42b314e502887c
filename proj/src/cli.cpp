#include "bfr/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "bfr/bf_core.hpp"
#include "bfr/cauchy_bf.hpp"
#include "bfr/errors.hpp"
#include "bfr/flip.hpp"
#include "bfr/report.hpp"

namespace bfr::cli {

namespace {

using report::Decimals;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Flat key/value record behind the bf, flip and paradox outputs.
using Value = std::variant<double, long long, std::string>;
using Record = std::vector<std::pair<std::string, Value>>;

std::string render_value(const Value& v, Decimals d) {
    if (const auto* x = std::get_if<double>(&v)) return report::format_number(*x, d);
    if (const auto* i = std::get_if<long long>(&v)) return std::to_string(*i);
    return std::get<std::string>(v);
}

std::string render_record(const Record& rec, const std::string& format, Decimals d) {
    std::ostringstream out;
    if (format == "text") {
        for (const auto& [key, v] : rec) out << key << '=' << render_value(v, d) << '\n';
    } else if (format == "csv") {
        for (std::size_t i = 0; i < rec.size(); ++i) out << (i ? "," : "") << rec[i].first;
        out << '\n';
        for (std::size_t i = 0; i < rec.size(); ++i) out << (i ? "," : "") << render_value(rec[i].second, d);
        out << '\n';
    } else {
        nlohmann::json j = nlohmann::json::object();
        for (const auto& [key, v] : rec) {
            if (const auto* x = std::get_if<double>(&v)) {
                j[key] = std::isfinite(*x) ? nlohmann::json(report::round_to(*x, d)) : nlohmann::json(nullptr);
            } else if (const auto* i = std::get_if<long long>(&v)) {
                j[key] = *i;
            } else {
                j[key] = std::get<std::string>(v);
            }
        }
        out << j.dump(2) << '\n';
    }
    return out.str();
}

struct Output {
    std::string format;
    std::string path;
    int precision = 4;

    // Files carry full precision; the terminal gets --precision decimals.
    Decimals decimals() const { return path.empty() ? Decimals(precision) : std::nullopt; }
};

void emit(const std::string& text, const std::string& path, std::ostream& out, std::ostream& err) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw Error("cannot open output file: " + path);
    file << text;
    if (!file) throw Error("failed writing output file: " + path);
    err << "wrote " << path << '\n';
}

CLI::Option* add_output_flags(CLI::App* cmd, Output& o, std::vector<std::string> formats) {
    o.format = formats.front();
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember(std::move(formats)))->capture_default_str();
    cmd->add_option("--out", o.path, "Write to this file (full precision) instead of stdout");
    return cmd->add_option("--precision", o.precision, "Decimal places for terminal output")
        ->check(CLI::Range(0, 17))
        ->capture_default_str();
}

const CLI::Validator kOpenUnit(
    [](std::string& s) -> std::string {
        double v = 0.0;
        if (!CLI::detail::lexical_cast(s, v) || !(v > 0.0 && v < 1.0)) return "value must lie in (0, 1)";
        return {};
    },
    "(0,1)");

const CLI::Validator kFinite(
    [](std::string& s) -> std::string {
        double v = 0.0;
        if (!CLI::detail::lexical_cast(s, v) || !std::isfinite(v)) return "value must be a finite number";
        return {};
    },
    "FINITE");

struct BfArgs {
    double z = 0.0;
    int n = 0;
    std::string prior = "normal";
    double scale = 0.0;
    Output out;
};

struct FlipArgs {
    double z = 0.0;
    int n = 0;
    std::string method = "bracketed";
    Output out;
};

struct SweepArgs {
    double z = 0.0;
    int n = 0;
    std::string prior = "normal";
    double scale_min = 0.0;
    double scale_max = 0.0;
    int points = 100;
    std::string spacing = "linear";
    Output out;
};

struct ParadoxArgs {
    double z = 0.0;
    int n = 0;
    double spread = 0.5;
    double tau1 = 0.0;
    double tau2 = 0.0;
    Output out;
};

struct FigureArgs {
    std::string panel = "both";
    Output out;
};

void add_z_n(CLI::App* cmd, double& z, int& n, bool n_required = true) {
    cmd->add_option("--z", z, "Observed z-statistic")->required()->check(kFinite);
    auto* opt = cmd->add_option("--n", n, "Sample size")->check(CLI::Range(1, std::numeric_limits<int>::max()));
    if (n_required) opt->required();
}

int do_bf(const BfArgs& a, std::ostream& out, std::ostream& err) {
    const TestSetup setup(a.n, a.z);
    const auto family = *report::parse_prior_family(a.prior);
    const BayesFactorResult r = family == report::PriorFamily::Normal ? bf01(setup, NormalPrior(a.scale))
                                                                      : bf01_cauchy(setup, CauchyPrior(a.scale));
    Record rec{{"z", a.z},
               {"n", static_cast<long long>(a.n)},
               {"prior", a.prior},
               {"scale", a.scale}};
    if (family == report::PriorFamily::Normal) rec.emplace_back("k", NormalPrior(a.scale).k(setup));
    rec.emplace_back("bf01", r.bf01);
    rec.emplace_back("log_bf01", r.log_bf01);
    rec.emplace_back("direction", std::string(to_string(r.direction)));
    rec.emplace_back("posterior_prob_h0", posterior_prob_h0(r.bf01));
    emit(render_record(rec, a.out.format, a.out.decimals()), a.out.path, out, err);
    return kExitOk;
}

int do_flip(const FlipArgs& a, std::ostream& out, std::ostream& err) {
    const auto fp = flip_point(a.z, *parse_flip_method(a.method));
    Record rec{{"z", a.z},
               {"z_squared", a.z * a.z},
               {"k_star", fp.k_star},
               {"residual", fp.residual},
               {"method", std::string(to_string(fp.method))}};
    if (a.n > 0) {
        rec.emplace_back("n", static_cast<long long>(a.n));
        rec.emplace_back("tau_star", tau_star(fp.k_star, a.n));
    }
    emit(render_record(rec, a.out.format, a.out.decimals()), a.out.path, out, err);
    return kExitOk;
}

int do_sweep(const SweepArgs& a, std::ostream& out, std::ostream& err) {
    const report::SweepSpec spec{a.z,         a.n,      *report::parse_prior_family(a.prior),
                                 a.scale_min, a.scale_max, a.points, *report::parse_spacing(a.spacing)};
    try {
        spec.validate();
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
    const auto rows = report::sweep(spec);
    const auto d = a.out.decimals();
    std::string text;
    if (a.out.format == "csv") {
        text = report::sweep_csv(rows, d);
    } else if (a.out.format == "json") {
        text = report::sweep_json(rows, d);
    } else {
        text = report::sweep_svg(spec, rows);
    }
    emit(text, a.out.path, out, err);
    return kExitOk;
}

// Terminal output defaults to the table's published column precision.
int do_table1(const Output& o, bool precision_given, std::ostream& out, std::ostream& err) {
    const auto rows = report::table1();
    const Decimals d = o.decimals();
    report::TableOneDecimals cols{d, d, d, d, d, d};
    if (o.path.empty() && !precision_given) cols = report::kTableOnePublished;
    emit(o.format == "csv" ? report::table1_csv(rows, cols) : report::table1_json(rows, cols), o.path, out, err);
    return kExitOk;
}

// <out> with the extension replaced by "_<panel>.<ext>".
std::string panel_path(const std::string& base, const std::string& panel, const std::string& ext) {
    std::filesystem::path p(base);
    const std::string stem = p.has_extension() ? (p.parent_path() / p.stem()).string() : base;
    return stem + "_" + panel + "." + ext;
}

int do_figure1(const FigureArgs& a, std::ostream& out, std::ostream& err) {
    const auto fig = report::figure1();
    const auto d = a.out.decimals();
    const std::string& fmt = a.out.format;

    auto panel_text = [&](const std::string& panel) {
        if (panel == "a") {
            if (fmt == "csv") return report::panel_a_csv(fig.panel_a, d);
            if (fmt == "json") return report::panel_a_json(fig.panel_a, d);
            return report::panel_a_svg(fig.panel_a);
        }
        if (fmt == "csv") return report::sweep_csv(fig.panel_b, d);
        if (fmt == "json") return report::sweep_json(fig.panel_b, d);
        return report::panel_b_svg(fig.panel_b);
    };

    if (a.panel != "both") {
        emit(panel_text(a.panel), a.out.path, out, err);
    } else if (!a.out.path.empty()) {
        emit(panel_text("a"), panel_path(a.out.path, "a", fmt), out, err);
        emit(panel_text("b"), panel_path(a.out.path, "b", fmt), out, err);
    } else if (fmt == "csv") {
        emit(report::figure1_csv(fig, d), "", out, err);
    } else if (fmt == "json") {
        emit(report::figure1_json(fig, d), "", out, err);
    } else {
        throw UsageError("figure1: SVG for both panels needs --out or --panel a|b");
    }
    return kExitOk;
}

int do_paradox(const ParadoxArgs& a, bool explicit_pair, std::ostream& out, std::ostream& err) {
    const TestSetup setup(a.n, a.z);
    const auto fp = flip_point(a.z);
    const ReversalPair pair = explicit_pair ? validate_pair(setup, a.tau1, a.tau2) : reversal_pair(setup, a.spread);
    const auto d1 = bf01(setup, NormalPrior(pair.tau1)).direction;
    const auto d2 = bf01(setup, NormalPrior(pair.tau2)).direction;
    Record rec{{"z", a.z},
               {"n", static_cast<long long>(a.n)},
               {"p_value", two_sided_p(a.z)},
               {"k_star", fp.k_star},
               {"tau_star", pair.tau_star},
               {"tau1", pair.tau1},
               {"bf1", pair.bf1},
               {"posterior_prob_h0_1", posterior_prob_h0(pair.bf1)},
               {"direction1", std::string(to_string(d1))},
               {"tau2", pair.tau2},
               {"bf2", pair.bf2},
               {"posterior_prob_h0_2", posterior_prob_h0(pair.bf2)},
               {"direction2", std::string(to_string(d2))}};
    emit(render_record(rec, a.out.format, a.out.decimals()), a.out.path, out, err);
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bayes factors, flip points and reversal pairs for the normal point-null model", "bfr"};
    app.require_subcommand(1);

    BfArgs bf;
    auto* bf_cmd = app.add_subcommand("bf", "Bayes factor BF01 for one prior scale");
    add_z_n(bf_cmd, bf.z, bf.n);
    bf_cmd->add_option("--prior", bf.prior, "Prior family under H1")
        ->check(CLI::IsMember({"normal", "cauchy"}))
        ->capture_default_str();
    bf_cmd->add_option("--scale", bf.scale, "Prior scale (tau or r)")->required()->check(CLI::PositiveNumber);
    add_output_flags(bf_cmd, bf.out, {"text", "csv", "json"});

    FlipArgs fl;
    auto* flip_cmd = app.add_subcommand("flip", "Flip point k* where BF01 = 1");
    add_z_n(flip_cmd, fl.z, fl.n, false);
    flip_cmd->add_option("--method", fl.method, "Solver route")
        ->check(CLI::IsMember({"bracketed", "lambert"}))
        ->capture_default_str();
    add_output_flags(flip_cmd, fl.out, {"text", "csv", "json"});

    SweepArgs sw;
    auto* sweep_cmd = app.add_subcommand("sweep", "BF01 over a grid of prior scales");
    add_z_n(sweep_cmd, sw.z, sw.n);
    sweep_cmd->add_option("--prior", sw.prior, "Prior family under H1")
        ->check(CLI::IsMember({"normal", "cauchy"}))
        ->capture_default_str();
    sweep_cmd->add_option("--scale-min", sw.scale_min, "Smallest prior scale")->required()->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--scale-max", sw.scale_max, "Largest prior scale")->required()->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--points", sw.points, "Grid points")
        ->check(CLI::Range(2, 1000000))
        ->capture_default_str();
    sweep_cmd->add_option("--spacing", sw.spacing, "Grid spacing")
        ->check(CLI::IsMember({"linear", "log"}))
        ->capture_default_str();
    add_output_flags(sweep_cmd, sw.out, {"csv", "json", "svg"});

    Output t1;
    auto* table_cmd = app.add_subcommand("table1", "Flip points and critical prior scales for the reference z grid");
    auto* t1_precision = add_output_flags(table_cmd, t1, {"csv", "json"});

    FigureArgs fg;
    auto* fig_cmd = app.add_subcommand("figure1", "Data behind the BF01-versus-scale figure (panels A and B)");
    fig_cmd->add_option("--panel", fg.panel, "Which panel")
        ->check(CLI::IsMember({"a", "b", "both"}))
        ->capture_default_str();
    add_output_flags(fig_cmd, fg.out, {"csv", "json", "svg"});

    ParadoxArgs px;
    auto* px_cmd = app.add_subcommand("paradox", "Construct (or check) a pair of priors with opposite verdicts");
    add_z_n(px_cmd, px.z, px.n);
    px_cmd->add_option("--spread", px.spread, "Relative offset of the pair from tau*")
        ->check(kOpenUnit)
        ->capture_default_str();
    auto* tau1_opt = px_cmd->add_option("--tau1", px.tau1, "Lower prior scale to check")->check(CLI::PositiveNumber);
    auto* tau2_opt = px_cmd->add_option("--tau2", px.tau2, "Upper prior scale to check")->check(CLI::PositiveNumber);
    tau1_opt->needs(tau2_opt);
    tau2_opt->needs(tau1_opt);
    add_output_flags(px_cmd, px.out, {"text", "csv", "json"});

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*bf_cmd) return do_bf(bf, out, err);
        if (*flip_cmd) return do_flip(fl, out, err);
        if (*sweep_cmd) return do_sweep(sw, out, err);
        if (*table_cmd) return do_table1(t1, t1_precision->count() > 0, out, err);
        if (*fig_cmd) return do_figure1(fg, out, err);
        if (*px_cmd) return do_paradox(px, tau1_opt->count() > 0, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitComputation;
    }
    return kExitUsage;
}

}  // namespace bfr::cli
