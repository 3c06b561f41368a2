#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "quatdiff/output.hpp"
#include "quatdiff/scenario.hpp"

using namespace qd;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("minimal document gets defaults") {
    ScenarioFile sc = parse_scenario("{}");
    CHECK(sc.version == 1);
    CHECK(sc.config.dt == 1e-3);
    CHECK(sc.config.t_final == 20.0);
    CHECK(sc.config.scenario == Scenario::ClosedLoopTracking);
    CHECK(sc.config.initial_w_mode == InitialWMode::Compliant);
    CHECK(sc.config.controller.r == 0.5);
}

TEST_CASE("resolved form is canonical: re-parsing it is a fixed point") {
    std::string text = R"({
        "scenario": "closed_loop_tracking",
        "trajectory": {"phi_rad": 0.1,
                       "alpha": {"kind": "polynomial", "coeffs": [0.0, 1.0]},
                       "beta": {"kind": "sinusoid", "amplitude": 0.4}},
        "controller": {"k": 2.0, "L": [[2,0,0],[0,2,0],[0,0,2]]},
        "initial_error": {"axis": [0, 0, 2], "angle_rad": 0.5}
    })";
    ScenarioFile a = parse_scenario(text);
    ScenarioFile b = parse_scenario(a.resolved);
    CHECK(a.resolved == b.resolved);
    // axis is normalized during parsing
    CHECK(a.config.initial_error_axis.z == doctest::Approx(1.0));
    // 3x3 L is read row-wise
    CHECK(a.config.controller.L(1, 1) == doctest::Approx(2.0));
}

TEST_CASE("unknown keys are rejected at every level") {
    CHECK_THROWS_AS(parse_scenario(R"({"bogus": 1})"), ConfigError);
    CHECK_THROWS_AS(parse_scenario(R"({"trajectory": {"phi": 0.1}})"), ConfigError);
    CHECK_THROWS_AS(parse_scenario(R"({"controller": {"gain": 1.0}})"), ConfigError);
    CHECK_THROWS_AS(parse_scenario(R"({"initial_error": {"angle_deg": 30}})"), ConfigError);
    CHECK_THROWS_AS(
        parse_scenario(R"({"trajectory": {"alpha": {"kind": "polynomial", "coefs": [1]}}})"),
        ConfigError);
}

TEST_CASE("invalid documents raise config errors") {
    CHECK_THROWS_AS(parse_scenario("not json"), ConfigError);
    CHECK_THROWS_AS(parse_scenario(R"({"version": 2})"), ConfigError);
    CHECK_THROWS_AS(parse_scenario(R"({"scenario": "warp_drive"})"), ConfigError);
    CHECK_THROWS_AS(parse_scenario(R"({"initial_w_mode": "frozen"})"), ConfigError);
    CHECK_THROWS_AS(parse_scenario(R"({"dt_s": -1.0})"), ConfigError);
    CHECK_THROWS_AS(parse_scenario(R"({"controller": {"r": 2.0}})"), ConfigError);
    CHECK_THROWS_AS(parse_scenario(R"({"controller": {"L": [1, 2]}})"), ConfigError);
    CHECK_THROWS_AS(parse_scenario(R"({"initial_error": {"axis": [0, 0, 0]}})"), ConfigError);
    CHECK_THROWS_AS(
        parse_scenario(R"({"trajectory": {"alpha": {"kind": "smooth_jazz"}}})"),
        ConfigError);
}

TEST_CASE("spline signals parse") {
    ScenarioFile sc = parse_scenario(R"({
        "trajectory": {"alpha": {"kind": "cubic_spline",
                                 "knots_t_s": [0, 1, 2], "knots_y": [0, 1, 0]}}
    })");
    SignalValue v = sc.config.trajectory.alpha(1.0);
    CHECK(v.value == doctest::Approx(1.0));
}

TEST_CASE("load_scenario reports missing files") {
    CHECK_THROWS_AS(load_scenario("/nonexistent/path.json"), ConfigError);
}

TEST_CASE("format_double is shortest round-trip") {
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(-2.5e-9) == "-2.5e-09");
    double v = 0.1234567890123456;
    CHECK(std::stod(format_double(v)) == v);
}

TEST_CASE("csv writer emits comments, header, and rows") {
    std::string path = "test_out.csv";
    {
        CsvWriter csv(path);
        csv.comment("meta");
        csv.columns({"t", "x"});
        csv.row({0.5, 1.25});
        csv.row({1.0, -3.0}, "tail");
    }
    std::string text = slurp(path);
    CHECK(text == "# meta\nt,x\n0.5,1.25\n1,-3,tail\n");
    std::remove(path.c_str());
}

TEST_CASE("svg plot writes a well-formed polyline document") {
    std::string path = "test_out.svg";
    PlotSeries s;
    s.name = "series";
    for (int i = 0; i <= 10; ++i) {
        s.x.push_back(0.1 * i);
        s.y.push_back(std::sin(0.1 * i));
    }
    write_svg_plot(path, "title", "t", "y", {s});
    std::string text = slurp(path);
    CHECK(text.find("<svg") != std::string::npos);
    CHECK(text.find("polyline") != std::string::npos);
    CHECK(text.find("</svg>") != std::string::npos);
    CHECK(text.find("title") != std::string::npos);
    std::remove(path.c_str());
}
