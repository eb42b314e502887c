#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "bfr/errors.hpp"
#include "bfr/flip.hpp"
#include "bfr/report.hpp"
#include "bfr/svg.hpp"

using namespace bfr;
using namespace bfr::report;
using Catch::Approx;

TEST_CASE("grid spacing", "[report]") {
    const auto lin = grid(0.1, 3.0, 30, Spacing::Linear);
    CHECK(lin.size() == 30);
    CHECK(lin.front() == 0.1);
    CHECK(lin.back() == 3.0);
    CHECK(lin[1] - lin[0] == Approx(0.1));
    const auto lg = grid(1e-2, 1e5, 8, Spacing::Log);
    CHECK(lg[1] == Approx(1e-1));
    CHECK(lg.back() == 1e5);
}

TEST_CASE("table1 rows", "[report]") {
    const auto rows = table1();
    REQUIRE(rows.size() == 5);
    const TableOneRow expected[] = {
        {1.50, 2.25, 0.134, 5.82, 0.34, 0.24},      {1.96, 3.84, 0.050, 41.58, 0.91, 0.64},
        {2.00, 4.00, 0.046, 49.44, 0.99, 0.70},     {2.50, 6.25, 0.012, 510.72, 3.20, 2.26},
        {3.00, 9.00, 0.003, 8093.08, 12.72, 9.00},
    };
    for (std::size_t i = 0; i < 5; ++i) {
        const auto& r = rows[i];
        const auto& e = expected[i];
        INFO("row " << i);
        CHECK(r.z == e.z);
        CHECK(r.z_squared == r.z * r.z);
        CHECK(round_to(r.z_squared, 2) == Approx(e.z_squared));
        CHECK(round_to(r.p_value, 3) == Approx(e.p_value));
        CHECK(round_to(r.k_star, 2) == Approx(e.k_star));
        CHECK(round_to(r.tau_star_n50, 2) == Approx(e.tau_star_n50));
        CHECK(round_to(r.tau_star_n100, 2) == Approx(e.tau_star_n100));
        CHECK(r.tau_star_n50 == Approx(std::sqrt(r.k_star / 50.0)));
    }
}

TEST_CASE("table1 CSV at published precision", "[report]") {
    const std::string csv = table1_csv(table1(), kTableOnePublished);
    CHECK(csv ==
          "z,z_squared,p_value,k_star,tau_star_n50,tau_star_n100\n"
          "1.50,2.25,0.134,5.82,0.34,0.24\n"
          "1.96,3.84,0.050,41.58,0.91,0.64\n"
          "2.00,4.00,0.046,49.44,0.99,0.70\n"
          "2.50,6.25,0.012,510.72,3.20,2.26\n"
          "3.00,9.00,0.003,8093.08,12.72,9.00\n");
}

TEST_CASE("sweep: single direction change at tau*", "[report]") {
    const auto rows = sweep({2.0, 50, PriorFamily::Normal, 0.1, 3.0, 100, Spacing::Linear});
    REQUIRE(rows.size() == 101);
    CHECK(rows.back().kind == RowKind::Flip);
    CHECK(rows.back().scale == Approx(0.99).margin(0.01));
    int changes = 0;
    for (std::size_t i = 1; i + 1 < rows.size(); ++i) {
        if (rows[i].direction != rows[i - 1].direction) {
            ++changes;
            CHECK(rows[i - 1].direction == Direction::FavoursH1);
            CHECK(rows[i].direction == Direction::FavoursH0);
            CHECK(rows[i - 1].scale < 0.99);
            CHECK(rows[i].scale > 0.99);
        }
    }
    CHECK(changes == 1);
    for (const auto& r : rows) {
        if (r.kind == RowKind::Point) {
            REQUIRE(r.k.has_value());
            CHECK(*r.k == Approx(50.0 * r.scale * r.scale));
            CHECK(r.bf01 == Approx(bf01(TestSetup(50, 2.0), NormalPrior(r.scale)).bf01));
        }
    }
}

TEST_CASE("sweep: direction never returns to H1", "[report][property]") {
    for (double z : {1.2, 1.96, 2.5, 3.5}) {
        for (auto spacing : {Spacing::Linear, Spacing::Log}) {
            const auto rows = sweep({z, 30, PriorFamily::Normal, 0.01, 50.0, 200, spacing});
            int changes = 0;
            for (std::size_t i = 1; i < rows.size() && rows[i].kind == RowKind::Point; ++i) {
                if (rows[i].direction != rows[i - 1].direction) ++changes;
                CHECK(!(rows[i - 1].direction == Direction::FavoursH0 && rows[i].direction == Direction::FavoursH1));
            }
            CHECK(changes <= 2);  // H1 -> (Neutral) -> H0
        }
    }
}

TEST_CASE("sweep: small z never favours H1 and has no flip row", "[report]") {
    const auto rows = sweep({0.5, 50, PriorFamily::Normal, 0.01, 10.0, 50, Spacing::Log});
    CHECK(rows.size() == 50);
    for (const auto& r : rows) {
        CHECK(r.kind == RowKind::Point);
        CHECK(r.direction != Direction::FavoursH1);
    }
}

TEST_CASE("sweep: 33-fold swing for the large-sample scenario", "[report]") {
    const auto rows = sweep({1.96, 5000, PriorFamily::Normal, 0.05, 2.0, 40, Spacing::Linear});
    double lo = INFINITY;
    double hi = 0.0;
    for (const auto& r : rows) {
        if (r.kind != RowKind::Point) continue;
        lo = std::min(lo, r.bf01);
        hi = std::max(hi, r.bf01);
    }
    CHECK(hi / lo == Approx(33.0).margin(1.0));
}

TEST_CASE("sweep: Cauchy rows carry no k", "[report]") {
    const auto rows = sweep({2.0, 50, PriorFamily::Cauchy, 0.1, 2.0, 5, Spacing::Log});
    REQUIRE(rows.size() == 5);
    for (const auto& r : rows) CHECK_FALSE(r.k.has_value());
    const auto json = nlohmann::json::parse(sweep_json(rows, std::nullopt));
    CHECK(json[0]["k"].is_null());
    CHECK(sweep_csv(rows, 4).find("point,0.1000,,") != std::string::npos);
}

TEST_CASE("sweep: validation", "[report]") {
    CHECK_THROWS_AS(sweep({2.0, 50, PriorFamily::Normal, 1.0, 1.0, 10, Spacing::Linear}), DomainError);
    CHECK_THROWS_AS(sweep({2.0, 50, PriorFamily::Normal, 0.0, 1.0, 10, Spacing::Linear}), DomainError);
    CHECK_THROWS_AS(sweep({2.0, 50, PriorFamily::Normal, 0.1, 1.0, 1, Spacing::Linear}), DomainError);
}

TEST_CASE("figure1 datasets", "[report]") {
    const auto fig = figure1();
    int flips = 0;
    for (const auto& r : fig.panel_a) {
        if (r.kind != RowKind::Flip) continue;
        ++flips;
        CHECK(r.k == Approx(flip_point(r.z).k_star));
        if (r.z == 1.96) CHECK(r.k == Approx(41.58).margin(0.01));
    }
    CHECK(flips == 5);
    CHECK(fig.panel_a.size() == 5 * (kPanelAPoints + 1));

    int markers = 0;
    for (const auto& r : fig.panel_b) {
        if (r.kind == RowKind::Marker && r.scale == 0.8) {
            ++markers;
            CHECK(r.bf01 == Approx(0.83).margin(0.01));
        }
        if (r.kind == RowKind::Marker && r.scale == 1.5) {
            ++markers;
            CHECK(r.bf01 == Approx(1.47).margin(0.01));
        }
        if (r.kind == RowKind::Flip) {
            ++markers;
            CHECK(r.scale == Approx(0.99).margin(0.01));
        }
    }
    CHECK(markers == 3);
}

TEST_CASE("number formatting", "[report]") {
    CHECK(format_number(0.82601680662815965, 4) == "0.8260");
    CHECK(format_number(-1e-9, 4) == "0.0000");
    CHECK(format_number(0.1, std::nullopt) == "0.10000000000000001");
    CHECK(std::stod(format_number(M_PI, std::nullopt)) == M_PI);
    CHECK(format_number(INFINITY, 2) == "inf");
}

TEST_CASE("svg line plot", "[report][svg]") {
    svg::LinePlot plot("BF <test> & more", "k", "BF01");
    plot.log_x().log_y();
    plot.add_series({"z = 2", {{0.1, 0.9}, {1.0, 0.6}, {10.0, 0.8}, {-1.0, 2.0}}, ""});
    plot.add_marker({{49.4, 1.0}, "flip", ""});
    plot.add_hline({1.0, "BF01 = 1"});
    plot.add_vline({0.99, "tau*"});
    const std::string doc = plot.render();
    CHECK(doc.rfind("<svg xmlns=\"http://www.w3.org/2000/svg\"", 0) == 0);
    CHECK(doc.find("</svg>") != std::string::npos);
    CHECK(doc.find("BF &lt;test&gt; &amp; more") != std::string::npos);
    CHECK(doc.find("<polyline") != std::string::npos);
    CHECK(doc.find("<circle") != std::string::npos);
    CHECK(doc.find("stroke-dasharray") != std::string::npos);
    // The nonpositive x is dropped on a log axis: three vertices remain.
    const auto start = doc.find("points=\"") + 8;
    const auto pts = doc.substr(start, doc.find('"', start) - start);
    CHECK(std::count(pts.begin(), pts.end(), ',') == 3);
}

TEST_CASE("figure svg documents", "[report][svg]") {
    const auto fig = figure1();
    const std::string a = panel_a_svg(fig.panel_a);
    const std::string b = panel_b_svg(fig.panel_b);
    CHECK(std::count(a.begin(), a.end(), '\n') > 20);
    CHECK(a.find("z = 1.96") != std::string::npos);
    CHECK(b.find("tau* = 0.99") != std::string::npos);
    CHECK(b.find("tau = 0.8: 0.83") != std::string::npos);
    CHECK(b.find("tau = 1.5: 1.47") != std::string::npos);
}
