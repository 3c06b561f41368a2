#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "quatdiff/output.hpp"
#include "quatdiff/scenario.hpp"
#include "quatdiff/sim.hpp"
#include "quatdiff/stability.hpp"
#include "quatdiff/verification.hpp"

namespace {

constexpr const char* tool_version = "quatdiff 0.1.0";

int cmd_stability(double e0_min, double e0_max, int steps, double w, const std::string& out,
                  const std::string& svg) {
    if (steps < 2 || e0_max <= e0_min)
        throw qd::InvalidRange("stability: need steps >= 2 and e0-max > e0-min");

    qd::CsvWriter csv(out);
    csv.comment(tool_version);
    csv.comment("stability sweep: e0 in [" + qd::format_double(e0_min) + ", " +
                qd::format_double(e0_max) + "], steps=" + std::to_string(steps) +
                ", w=" + qd::format_double(w));
    csv.columns({"e0", "a", "b", "c", "ab_minus_c", "discriminant", "max_re_eigenvalue", "class"});

    std::vector<double> xs, ab, cc, dd;
    for (int i = 0; i < steps; ++i) {
        double e0 = e0_min + (e0_max - e0_min) * i / (steps - 1);
        if (std::abs(e0) < 1e-9) {
            std::cerr << "warning: grid point at e0 = 0 nudged by 1e-9\n";
            e0 = e0 >= 0 ? 1e-9 : -1e-9;
        }
        if (std::abs(e0 + 1.0) < 1e-9) {
            std::cerr << "warning: grid point at e0 = -1 nudged by 1e-9\n";
            e0 = -1.0 + 1e-9;
        }
        qd::StabilityReport rep = qd::classify(e0, w);
        csv.row({e0, rep.poly.a, rep.poly.b, rep.poly.c, rep.poly.a * rep.poly.b - rep.poly.c,
                 rep.discriminant, rep.max_re_eigenvalue},
                qd::to_string(rep.cls));
        xs.push_back(e0);
        ab.push_back(rep.poly.a * rep.poly.b);
        cc.push_back(rep.poly.c);
        dd.push_back(rep.discriminant);
    }
    if (!svg.empty()) {
        qd::write_svg_plot(svg, "Routh-Hurwitz product and discriminant", "e0", "value",
                           {{"a*b", xs, ab}, {"c", xs, cc}, {"discriminant", xs, dd}});
    }
    return 0;
}

int cmd_eigvals(double e0, double w) {
    qd::StabilityReport rep = qd::classify(e0, w);
    std::printf("e0 = %s, |w| = %s\n", qd::format_double(e0).c_str(), qd::format_double(w).c_str());
    std::printf("discriminant = %s\n", qd::format_double(rep.discriminant).c_str());
    std::printf("cubic: l'^3 + %s l'^2 + %s l' + %s\n", qd::format_double(rep.poly.a).c_str(),
                qd::format_double(rep.poly.b).c_str(), qd::format_double(rep.poly.c).c_str());
    std::printf("cubic roots:");
    for (const auto& r : rep.cubic_roots)
        std::printf("  %s%s%si", qd::format_double(r.real()).c_str(),
                    r.imag() < 0 ? "" : "+", qd::format_double(r.imag()).c_str());
    std::printf("\neigenvalues:");
    for (const auto& l : rep.eigenvalues)
        std::printf("  %s%s%si", qd::format_double(l.real()).c_str(),
                    l.imag() < 0 ? "" : "+", qd::format_double(l.imag()).c_str());
    std::printf("\nclass = %s\n", qd::to_string(rep.cls));
    // machine-readable row
    std::printf("RESULT,%s,%s,%s,%s,%s\n", qd::format_double(e0).c_str(),
                qd::format_double(w).c_str(), qd::format_double(rep.discriminant).c_str(),
                qd::format_double(rep.max_re_eigenvalue).c_str(), qd::to_string(rep.cls));
    switch (rep.cls) {
        case qd::StabilityClass::MarginallyStable: return 0;
        case qd::StabilityClass::Unstable: return 1;
        default: return 2;
    }
}

void write_trace_csv(const std::string& path, const qd::SimTrace& trace,
                     const std::string& resolved) {
    qd::CsvWriter csv(path);
    csv.comment(tool_version);
    csv.comment("config: " + resolved);
    csv.columns({"t_s", "r_mag", "e0", "ev_dot_w", "vel_violation", "V_L", "w_mag"});
    for (const auto& r : trace.rows)
        csv.row({r.t, r.r_mag, r.e0, r.ev_dot_w, r.vel_violation, r.V_L, r.w_mag});
}

int cmd_simulate(const std::string& scenario_path, const std::string& prefix,
                 bool emit_svg) {
    qd::ScenarioFile sc = qd::load_scenario(scenario_path);
    qd::SimTrace trace = (sc.config.scenario == qd::Scenario::NominalFlow)
                             ? qd::run_nominal(sc.config)
                             : qd::run_tracking(sc.config);

    write_trace_csv(prefix + "_trace.csv", trace, sc.resolved);

    const auto& rows = trace.rows;
    const qd::TraceRow& first = rows.front();
    const qd::TraceRow& last = rows.back();

    // worst values over the final second, less sensitive to phase than the last row
    double tail_start = last.t - std::min(1.0, last.t);
    double tail_r = 0.0, tail_evw = 0.0, tail_vel = 0.0;
    double max_evw = 0.0, max_vel = 0.0;
    bool vl_monotone = true;
    double max_e0_drift = 0.0, max_w_drift = 0.0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        max_evw = std::max(max_evw, r.ev_dot_w);
        max_vel = std::max(max_vel, r.vel_violation);
        if (i > 0 && r.V_L > rows[i - 1].V_L + 1e-9) vl_monotone = false;
        if (r.t >= tail_start) {
            tail_r = std::max(tail_r, r.r_mag);
            tail_evw = std::max(tail_evw, r.ev_dot_w);
            tail_vel = std::max(tail_vel, r.vel_violation);
        }
        max_e0_drift = std::max(max_e0_drift, std::abs(r.e0 - first.e0));
        max_w_drift = std::max(max_w_drift, std::abs(r.w_mag - first.w_mag));
    }

    std::ofstream sum(prefix + "_summary");
    sum << "# " << tool_version << "\n";
    sum << "# config: " << sc.resolved << "\n";
    sum << "initial_error " << qd::format_double(first.r_mag) << "\n";
    sum << "final_error " << qd::format_double(last.r_mag) << "\n";
    sum << "final_window_error " << qd::format_double(tail_r) << "\n";
    sum << "convergence_ratio "
        << qd::format_double(first.r_mag > 0 ? tail_r / first.r_mag : 0.0) << "\n";
    sum << "initial_ev_dot_w " << qd::format_double(first.ev_dot_w) << "\n";
    sum << "final_window_ev_dot_w " << qd::format_double(tail_evw) << "\n";
    sum << "initial_vel_violation " << qd::format_double(first.vel_violation) << "\n";
    sum << "final_window_vel_violation " << qd::format_double(tail_vel) << "\n";
    sum << "max_ev_dot_w " << qd::format_double(max_evw) << "\n";
    sum << "max_vel_violation " << qd::format_double(max_vel) << "\n";
    sum << "VL_monotone " << (vl_monotone ? "yes" : "no") << "\n";
    sum << "max_e0_drift " << qd::format_double(max_e0_drift) << "\n";
    sum << "max_w_mag_drift " << qd::format_double(max_w_drift) << "\n";

    if (emit_svg) {
        std::vector<double> t, rm, evw, vel;
        for (const auto& r : rows) {
            t.push_back(r.t);
            rm.push_back(r.r_mag);
            evw.push_back(r.ev_dot_w);
            vel.push_back(r.vel_violation);
        }
        qd::write_svg_plot(prefix + "_error.svg", "attitude difference error", "t [s]", "|q - p|",
                           {{"|q-p|", t, rm}});
        qd::write_svg_plot(prefix + "_constraints.svg", "constraint violations", "t [s]",
                           "log10 violation",
                           {{"|ev.w|", t, evw}, {"|w - (e0 v - ev x v)|", t, vel}}, true);
    }
    return 0;
}

int cmd_selftest(std::uint32_t seed, int n_states) {
    qd::SelftestOptions opts;
    opts.seed = seed;
    opts.n_states = n_states;
    std::printf("# %s selftest, seed=%u, states=%d\n", tool_version, seed, n_states);
    qd::SelftestResult res = qd::run_selftest(opts);
    for (const auto& c : res.checks)
        std::printf("%-40s %s  (%s)\n", c.name.c_str(), c.pass ? "PASS" : "FAIL",
                    c.detail.c_str());
    return res.all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"constant quaternion-difference attitude dynamics toolkit"};
    app.require_subcommand(1);

    auto* st = app.add_subcommand("stability", "sweep e0 and classify stability");
    double e0_min = 0.01, e0_max = 1.0, w = 1.0, e0 = 0.5;
    int steps = 100;
    std::string out = "stability.csv", svg, scenario, prefix = "sim";
    st->add_option("--e0-min", e0_min);
    st->add_option("--e0-max", e0_max);
    st->add_option("--steps", steps);
    st->add_option("--w", w);
    st->add_option("--out", out);
    st->add_option("--svg", svg);

    auto* ev = app.add_subcommand("eigvals", "closed-form eigenvalues at one (e0, |w|)");
    ev->add_option("--e0", e0)->required();
    ev->add_option("--w", w);

    auto* sim = app.add_subcommand("simulate", "run a scenario file");
    bool emit_svg = false;
    sim->add_option("--scenario", scenario)->required();
    sim->add_option("--out", prefix);
    sim->add_flag("--svg", emit_svg);

    auto* self = app.add_subcommand("selftest", "oracle-equivalence and identity checks");
    std::uint32_t seed = 12345;
    int n_states = 200;
    self->add_option("--seed", seed);
    self->add_option("--states", n_states);

    CLI11_PARSE(app, argc, argv);

    try {
        if (st->parsed()) return cmd_stability(e0_min, e0_max, steps, w, out, svg);
        if (ev->parsed()) return cmd_eigvals(e0, w);
        if (sim->parsed()) return cmd_simulate(scenario, prefix, emit_svg);
        if (self->parsed()) return cmd_selftest(seed, n_states);
    } catch (const qd::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
