#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "quatdiff/scenario.hpp"
#include "quatdiff/sim.hpp"
#include "quatdiff/stability.hpp"
#include "quatdiff/trajectory.hpp"
#include "quatdiff/verification.hpp"

namespace py = pybind11;
using namespace qd;

namespace {

using Arr3 = std::array<double, 3>;
using Arr4 = std::array<double, 4>;

Vec3 to_vec(const Arr3& a) { return {a[0], a[1], a[2]}; }
Arr3 from_vec(const Vec3& v) { return {v.x, v.y, v.z}; }
Quaternion to_quat(const Arr4& a) { return {a[0], {a[1], a[2], a[3]}}; }
Arr4 from_quat(const Quaternion& q) { return {q.s, q.v.x, q.v.y, q.v.z}; }

std::vector<std::vector<double>> from_mat6(const Mat6& m) {
    std::vector<std::vector<double>> out(6, std::vector<double>(6));
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) out[i][j] = m(i, j);
    return out;
}

ErrorState make_state(double e0, const Arr3& ev, const Arr3& w) {
    return {e0, to_vec(ev), to_vec(w)};
}

py::dict report_dict(const StabilityReport& rep) {
    py::dict d;
    d["e0"] = rep.e0;
    d["w_mag"] = rep.w_mag;
    d["discriminant"] = rep.discriminant;
    d["cubic"] = py::make_tuple(rep.poly.a, rep.poly.b, rep.poly.c);
    d["cubic_roots"] = std::vector<Complex>(rep.cubic_roots.begin(), rep.cubic_roots.end());
    d["eigenvalues"] = std::vector<Complex>(rep.eigenvalues.begin(), rep.eigenvalues.end());
    d["max_re_eigenvalue"] = rep.max_re_eigenvalue;
    d["class"] = std::string(to_string(rep.cls));
    return d;
}

py::dict trace_dict(const SimTrace& trace) {
    std::vector<double> t, r_mag, e0, evw, vel, vl, wmag;
    for (const auto& r : trace.rows) {
        t.push_back(r.t);
        r_mag.push_back(r.r_mag);
        e0.push_back(r.e0);
        evw.push_back(r.ev_dot_w);
        vel.push_back(r.vel_violation);
        vl.push_back(r.V_L);
        wmag.push_back(r.w_mag);
    }
    py::dict d;
    d["t"] = t;
    d["r_mag"] = r_mag;
    d["e0"] = e0;
    d["ev_dot_w"] = evw;
    d["vel_violation"] = vel;
    d["V_L"] = vl;
    d["w_mag"] = wmag;
    return d;
}

}  // namespace

PYBIND11_MODULE(_quatdiff_core, m) {
    m.doc() = "constant quaternion-difference attitude dynamics";

    m.def("qmul", [](const Arr4& p, const Arr4& q) { return from_quat(qmul(to_quat(p), to_quat(q))); });
    m.def("qinv", [](const Arr4& q) { return from_quat(qinv(to_quat(q))); });
    m.def("quat_kinematics", [](const Arr4& q, const Arr3& omega) {
        return from_quat(quat_kinematics(to_quat(q), to_vec(omega)));
    });
    m.def("error_quat", [](const Arr4& p, const Arr4& q) {
        return from_quat(error_quat(to_quat(p), to_quat(q)));
    });
    m.def("v_from_w", [](const Arr4& e, const Arr3& w) { return from_vec(v_from_w(to_quat(e), to_vec(w))); });
    m.def("w_from_v", [](const Arr4& e, const Arr3& v) { return from_vec(w_from_v(to_quat(e), to_vec(v))); });
    m.def("nominal_wdot", [](const Arr4& e, const Arr3& w) {
        return from_vec(nominal_wdot(to_quat(e), to_vec(w)));
    });
    m.def("nominal_state_derivative", [](const Vec6& x) { return nominal_state_derivative(x); });

    m.def("build_A", [](double e0, const Arr3& ev, const Arr3& w) {
        return from_mat6(build_A(make_state(e0, ev, w)));
    });
    m.def("char_poly_numeric", [](const std::vector<std::vector<double>>& a) {
        Mat6 A;
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) A(i, j) = a.at(i).at(j);
        return char_poly_numeric(A);
    });
    m.def("char_poly_closed", [](double e0, double w) {
        CharPoly p = char_poly_closed(e0, w);
        py::dict d;
        d["c4"] = p.c4;
        d["c2"] = p.c2;
        d["c0"] = p.c0;
        d["cubic"] = py::make_tuple(p.a, p.b, p.c);
        return d;
    });
    m.def("discriminant", &discriminant);
    m.def("eigenvalues", [](double e0, double w) {
        auto e = eigenvalues(e0, w);
        return std::vector<Complex>(e.begin(), e.end());
    });
    m.def("classify", [](double e0, double w, double tol) { return report_dict(classify(e0, w, tol)); },
          py::arg("e0"), py::arg("w") = 1.0, py::arg("tol") = 1e-8);

    m.def("trajectory_sample",
          [](double phi, const std::vector<double>& alpha_coeffs,
             const std::vector<double>& beta_coeffs, double t) {
              TrajectoryParams p{phi, Signal::polynomial(alpha_coeffs), Signal::polynomial(beta_coeffs)};
              TrajectorySample s = sample(p, t);
              py::dict d;
              d["t"] = s.t;
              d["p"] = from_quat(s.p);
              d["q"] = from_quat(s.q);
              d["v"] = from_vec(s.v);
              d["w"] = from_vec(s.w);
              d["vdot"] = from_vec(s.vdot);
              d["wdot"] = from_vec(s.wdot);
              return d;
          });

    m.def("run_scenario", [](const std::string& json_text) {
        ScenarioFile sc = parse_scenario(json_text);
        SimTrace trace = (sc.config.scenario == Scenario::NominalFlow) ? run_nominal(sc.config)
                                                                       : run_tracking(sc.config);
        return trace_dict(trace);
    });

    m.def("selftest", [](std::uint32_t seed, int n_states) {
        SelftestOptions o;
        o.seed = seed;
        o.n_states = n_states;
        SelftestResult res = run_selftest(o);
        py::list checks;
        for (const auto& c : res.checks)
            checks.append(py::make_tuple(c.name, c.pass, c.detail));
        py::dict d;
        d["all_pass"] = res.all_pass;
        d["checks"] = checks;
        return d;
    }, py::arg("seed") = 12345, py::arg("n_states") = 100);

    py::register_exception<Error>(m, "QuatdiffError");
}
