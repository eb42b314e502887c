// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bfr/bf_core.hpp"
#include "bfr/cauchy_bf.hpp"
#include "bfr/cli.hpp"
#include "bfr/errors.hpp"
#include "bfr/flip.hpp"
#include "bfr/report.hpp"
#include "support/oracles.hpp"

using namespace bfr;

namespace {

// Collects individual checks for one criterion and remembers the first failure.
class Checks {
public:
    void near(const std::string& what, double got, double want, double tol) {
        std::ostringstream s;
        s << what << " = " << got << ", want " << want << " +/- " << tol;
        that(s.str(), std::abs(got - want) <= tol);
    }
    void that(const std::string& what, bool ok) {
        if (!ok && failures_.empty()) failures_ = what;
        count_++;
        bad_ += ok ? 0 : 1;
    }
    bool ok() const { return bad_ == 0; }
    std::string summary() const {
        std::ostringstream s;
        s << (count_ - bad_) << "/" << count_ << " checks";
        if (!failures_.empty()) s << "; first failure: " << failures_;
        return s.str();
    }

private:
    int count_ = 0;
    int bad_ = 0;
    std::string failures_;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct CliRun {
    int code;
    std::string out;
};

CliRun cli_run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str()};
}

std::map<std::string, std::string> parse_kv(const std::string& text) {
    std::map<std::string, std::string> kv;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const auto eq = line.find('=');
        if (eq != std::string::npos) kv[line.substr(0, eq)] = line.substr(eq + 1);
    }
    return kv;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream ls(line);
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        rows.push_back(cells);
    }
    return rows;
}

// 1. Table 1 reproduction at published precision, +/- 1 unit in the last decimal, < 1 s.
Checks table_one() {
    Checks c;
    const auto t0 = std::chrono::steady_clock::now();
    const auto out = cli_run({"table1"});
    const double elapsed = seconds_since(t0);
    c.that("table1 exit code", out.code == 0);
    const auto rows = parse_csv(out.out);
    c.that("table1 row count", rows.size() == 6);
    const double expected[5][6] = {
        {1.50, 2.25, 0.134, 5.82, 0.34, 0.24},   {1.96, 3.84, 0.050, 41.58, 0.91, 0.64},
        {2.00, 4.00, 0.046, 49.44, 0.99, 0.70},  {2.50, 6.25, 0.012, 510.72, 3.20, 2.26},
        {3.00, 9.00, 0.003, 8093.08, 12.72, 9.00},
    };
    const double unit[6] = {0.01, 0.01, 0.001, 0.01, 0.01, 0.01};
    for (std::size_t i = 0; i < 5 && i + 1 < rows.size(); ++i) {
        for (std::size_t j = 0; j < 6; ++j) {
            c.near("table1[" + std::to_string(i) + "][" + rows[0][j] + "]", std::stod(rows[i + 1][j]), expected[i][j],
                   unit[j] * (1 + 1e-9));
        }
    }
    c.that("table1 runtime < 1 s", elapsed < 1.0);
    return c;
}

// 2. Worked example z = 2, n = 50.
Checks worked_example() {
    Checks c;
    const TestSetup s(50, 2.0);
    c.near("BF(tau=0.8)", bf01(s, NormalPrior(0.8)).bf01, 0.83, 0.01);
    c.near("BF(tau=1.5)", bf01(s, NormalPrior(1.5)).bf01, 1.47, 0.01);
    c.near("tau*", tau_star(flip_point(2.0).k_star, 50), 0.99, 0.01);
    return c;
}

// 3. Large-sample scenario z = 1.96, n = 5000.
Checks large_sample() {
    Checks c;
    const TestSetup s(5000, 1.96);
    const double b0707 = bf01(s, NormalPrior(0.707)).bf01;
    const double b1 = bf01(s, NormalPrior(1.0)).bf01;
    const double b2 = bf01(s, NormalPrior(2.0)).bf01;
    const double b005 = bf01(s, NormalPrior(0.05)).bf01;
    c.near("BF(tau=0.707)", b0707, 7.3, 0.1);
    c.near("BF(tau=1.0)", b1, 10.4, 0.1);
    c.near("BF(tau=2.0)", b2, 20.7, 0.2);
    c.near("BF(tau=0.05)", b005, 0.62, 0.01);
    const double swing = std::max({b0707, b1, b2, b005}) / std::min({b0707, b1, b2, b005});
    c.that("swing ratio in [32, 34] (got " + std::to_string(swing) + ")", swing >= 32.0 && swing <= 34.0);
    c.near("tau*", tau_star(flip_point(1.96).k_star, 5000), 0.09, 0.005);
    return c;
}

// 4. Cauchy-prior experiments, < 5 s total.
Checks cauchy() {
    Checks c;
    const auto t0 = std::chrono::steady_clock::now();
    const TestSetup s(50, 2.0);
    c.near("Cauchy BF(r=0.6)", bf01_cauchy(s, CauchyPrior(0.6)).bf01, 0.9, 0.05);
    c.near("Cauchy BF(r=1.0)", bf01_cauchy(s, CauchyPrior(1.0)).bf01, 1.3, 0.05);
    c.near("Cauchy BF(r=sqrt(2)/2)", bf01_cauchy(s, CauchyPrior(std::sqrt(2.0) / 2.0)).bf01, 1.00, 0.05);
    c.near("Cauchy flip scale", cauchy_flip_scale(s), 0.707, 0.05);
    const double elapsed = seconds_since(t0);
    c.that("Cauchy runtime < 5 s (got " + std::to_string(elapsed) + " s)", elapsed < 5.0);
    return c;
}

// 5. Independent-route equivalence.
Checks oracle_equivalence() {
    Checks c;
    for (double z : {1.1, 1.5, 1.96, 2.0, 2.5, 3.0, 4.0, 5.0}) {
        const double br = flip_point(z, FlipMethod::Bracketed).k_star;
        const double lw = flip_point(z, FlipMethod::LambertW).k_star;
        c.that("Bracketed vs LambertW at z=" + std::to_string(z), std::abs(br - lw) <= 1e-9 * br);
    }
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> zd(0.0, 4.0);
    std::uniform_real_distribution<double> td(0.05, 3.0);
    const int ns[] = {10, 50, 5000};
    for (int i = 0; i < 50; ++i) {
        const TestSetup s(ns[i % 3], zd(rng));
        const NormalPrior p(td(rng));
        const double closed = bf01(s, p).bf01;
        const double quad = bf01_normal_via_quadrature(s, p).bf01;
        c.that("quadrature vs closed form #" + std::to_string(i), std::abs(quad - closed) <= 1e-8 * closed);
    }
    return c;
}

// 6. Invariant suite, < 30 s.
Checks invariants() {
    Checks c;
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(6);
    std::uniform_real_distribution<double> zd(-5.0, 5.0);
    std::uniform_real_distribution<double> lk(-4.0, 8.0);

    for (int i = 0; i < 200; ++i) {
        const double z = zd(rng);
        const double k = std::pow(10.0, lk(rng));
        c.that("BF(z,0) = 1", log_bf01(z, 0.0) == 0.0);
        c.that("BF symmetric in z", log_bf01(z, k) == log_bf01(-z, k));
        if (std::abs(z) <= 1.0) c.that("BF >= 1 for |z| <= 1", log_bf01(z, k) >= 0.0);
        const double h = 1e-5 * (1.0 + k);
        const double fd = test::central_difference([z](double kk) { return log_bf01(z, kk); }, k, h);
        c.that("derivative vs central difference", std::abs(dlogbf_dk(z, k) - fd) <= 1e-6);
    }
    for (double z : {-1.0, -0.7, 0.0, 0.3, 1.0}) {
        for (double k = 1e-4; k < 1e8; k *= 1.5) c.that("BF >= 1 when |z| <= 1 (grid)", log_bf01(z, k) >= 0.0);
    }

    for (double z : {1.1, 1.5, 1.96, 2.0, 2.5, 3.0, 4.0, 5.0}) {
        const double kmin = z * z - 1.0;
        c.that("argmin at z^2 - 1", bf_argmin_k(z) == kmin);
        double prev = 0.0;
        for (int i = 1; i <= 100; ++i) {
            const double v = log_bf01(z, kmin * i / 100.0);
            c.that("decreasing below z^2 - 1", v < prev);
            prev = v;
        }
        for (int i = 1; i <= 100; ++i) {
            const double v = log_bf01(z, kmin * std::pow(1e6 / kmin + 1.0, i / 100.0));
            c.that("increasing above z^2 - 1", v > prev);
            prev = v;
        }
        const double ks = flip_point(z).k_star;
        c.that("BF(0.99 k*) < 1", log_bf01(z, 0.99 * ks) < 0.0);
        c.that("BF(1.01 k*) > 1", log_bf01(z, 1.01 * ks) > 0.0);
        c.that("residual bound", std::abs(flip_residual(z, ks)) <= 1e-9 * z * z * ks);
    }

    for (int i = 0; i <= 300; ++i) {
        const double y = 1.01 + (30.0 - 1.01) * i / 300.0;
        c.that("phi round trip", std::abs(phi(phi_inverse(y)) - y) <= 1e-9 * y);
    }

    for (int i = 0; i < 300; ++i) {
        const double bf = std::exp(std::uniform_real_distribution<double>(-8.0, 8.0)(rng));
        const double p = posterior_prob_h0(bf);
        c.that("posterior flips at BF = 1", (p > 0.5) == (bf > 1.0) && (p < 0.5) == (bf < 1.0));
    }
    c.that("posterior at BF = 1 is 1/2", posterior_prob_h0(1.0) == 0.5);

    const double elapsed = seconds_since(t0);
    c.that("invariant suite runtime < 30 s", elapsed < 30.0);
    return c;
}

// 7. CLI golden behaviour.
Checks cli_golden() {
    Checks c;
    c.that("exit 0 on success", cli_run({"bf", "--z", "2", "--n", "50", "--scale", "0.8"}).code == 0);
    c.that("exit 2 on scale 0", cli_run({"bf", "--z", "2", "--n", "50", "--prior", "normal", "--scale", "0"}).code == 2);
    c.that("exit 2 on unknown flag", cli_run({"bf", "--bogus"}).code == 2);
    c.that("exit 1 on no flip point", cli_run({"paradox", "--z", "0.9", "--n", "50"}).code == 1);

    const TestSetup s(50, 2.0);
    for (int precision : {2, 4, 6}) {
        const auto ps = std::to_string(precision);
        const double half_unit = 0.5 * std::pow(10.0, -precision) * (1 + 1e-9);
        const double exact = bf01(s, NormalPrior(0.8)).bf01;
        const auto csv = parse_csv(
            cli_run({"bf", "--z", "2", "--n", "50", "--scale", "0.8", "--format", "csv", "--precision", ps}).out);
        const auto col = static_cast<std::size_t>(std::find(csv[0].begin(), csv[0].end(), "bf01") - csv[0].begin());
        c.near("CSV bf01 round trip @" + ps, std::stod(csv[1][col]), exact, half_unit);
        const auto js = nlohmann::json::parse(
            cli_run({"bf", "--z", "2", "--n", "50", "--scale", "0.8", "--format", "json", "--precision", ps}).out);
        c.near("JSON bf01 round trip @" + ps, js["bf01"].get<double>(), exact, half_unit);
        c.that("JSON direction", js["direction"] == "FavoursH1");
    }

    const auto panel_b = parse_csv(cli_run({"figure1", "--panel", "b"}).out);
    int seen = 0;
    for (const auto& row : panel_b) {
        if (row[0] == "marker" && std::stod(row[1]) == 0.8) {
            c.near("panel B marker tau=0.8", std::stod(row[3]), 0.83, 0.01);
            ++seen;
        } else if (row[0] == "marker" && std::stod(row[1]) == 1.5) {
            c.near("panel B marker tau=1.5", std::stod(row[3]), 1.47, 0.01);
            ++seen;
        } else if (row[0] == "flip") {
            c.near("panel B tau*", std::stod(row[1]), 0.99, 0.01);
            ++seen;
        }
    }
    c.that("panel B has the three caption markers", seen == 3);
    return c;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Checks()>>> criteria = {
        {"AC1 table reproduction", table_one},
        {"AC2 worked example", worked_example},
        {"AC3 large-sample scenario", large_sample},
        {"AC4 Cauchy-prior experiments", cauchy},
        {"AC5 oracle equivalence", oracle_equivalence},
        {"AC6 invariant suite", invariants},
        {"AC7 CLI golden tests", cli_golden},
    };
    int failed = 0;
    for (const auto& [name, run] : criteria) {
        Checks c;
        try {
            c = run();
        } catch (const std::exception& e) {
            c.that(std::string("exception: ") + e.what(), false);
        }
        std::printf("[%s] %s (%s)\n", c.ok() ? "PASS" : "FAIL", name.c_str(), c.summary().c_str());
        failed += c.ok() ? 0 : 1;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
