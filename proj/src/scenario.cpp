#include "quatdiff/scenario.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "quatdiff/errors.hpp"

namespace qd {

using nlohmann::json;

namespace {

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!allowed.count(it.key()))
            throw ConfigError("scenario: unknown key '" + it.key() + "' in " + where);
}

double number(const json& obj, const std::string& key, double fallback, json& resolved) {
    double v = obj.contains(key) ? obj.at(key).get<double>() : fallback;
    resolved[key] = v;
    return v;
}

Vec3 vec3(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 3)
        throw ConfigError("scenario: " + where + " must be a 3-element array");
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

Signal parse_signal(const json& j, const std::string& where, json& resolved) {
    if (!j.is_object() || !j.contains("kind"))
        throw ConfigError("scenario: " + where + " must be an object with a 'kind'");
    std::string kind = j.at("kind").get<std::string>();
    resolved["kind"] = kind;
    if (kind == "polynomial") {
        reject_unknown(j, {"kind", "coeffs"}, where);
        auto coeffs = j.at("coeffs").get<std::vector<double>>();
        resolved["coeffs"] = coeffs;
        return Signal::polynomial(coeffs);
    }
    if (kind == "sinusoid") {
        reject_unknown(j, {"kind", "amplitude", "angular_rate_rad_s", "phase_rad", "offset"}, where);
        double amp = number(j, "amplitude", 1.0, resolved);
        double rate = number(j, "angular_rate_rad_s", 1.0, resolved);
        double phase = number(j, "phase_rad", 0.0, resolved);
        double offset = number(j, "offset", 0.0, resolved);
        return Signal::sinusoid(amp, rate, phase, offset);
    }
    if (kind == "cubic_spline") {
        reject_unknown(j, {"kind", "knots_t_s", "knots_y"}, where);
        auto ts = j.at("knots_t_s").get<std::vector<double>>();
        auto ys = j.at("knots_y").get<std::vector<double>>();
        resolved["knots_t_s"] = ts;
        resolved["knots_y"] = ys;
        return Signal::cubic_spline(ts, ys);
    }
    throw ConfigError("scenario: unknown signal kind '" + kind + "' in " + where);
}

}  // namespace

ScenarioFile parse_scenario(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("scenario: JSON parse error: ") + e.what());
    }

    reject_unknown(j, {"version", "scenario", "dt_s", "t_final_s", "renormalize_every",
                       "snapshot_stride", "trajectory", "controller", "initial_error",
                       "initial_w_mode", "initial_w_rad_s"},
                   "top level");

    ScenarioFile out;
    json resolved;
    out.version = j.value("version", 1);
    if (out.version != 1) throw ConfigError("scenario: unsupported version");
    resolved["version"] = out.version;

    SimConfig& cfg = out.config;
    std::string scen = j.value("scenario", std::string("closed_loop_tracking"));
    resolved["scenario"] = scen;
    if (scen == "nominal_flow")
        cfg.scenario = Scenario::NominalFlow;
    else if (scen == "closed_loop_tracking")
        cfg.scenario = Scenario::ClosedLoopTracking;
    else
        throw ConfigError("scenario: unknown scenario '" + scen + "'");

    cfg.dt = number(j, "dt_s", 1e-3, resolved);
    cfg.t_final = number(j, "t_final_s", 20.0, resolved);
    cfg.renormalize_every = static_cast<int>(number(j, "renormalize_every", 1, resolved));
    cfg.snapshot_stride = static_cast<int>(number(j, "snapshot_stride", 100, resolved));

    if (j.contains("trajectory")) {
        const json& tj = j.at("trajectory");
        reject_unknown(tj, {"phi_rad", "alpha", "beta"}, "trajectory");
        json rt;
        cfg.trajectory.phi = number(tj, "phi_rad", 0.0, rt);
        if (tj.contains("alpha")) {
            json rs;
            cfg.trajectory.alpha = parse_signal(tj.at("alpha"), "trajectory.alpha", rs);
            rt["alpha"] = rs;
        }
        if (tj.contains("beta")) {
            json rs;
            cfg.trajectory.beta = parse_signal(tj.at("beta"), "trajectory.beta", rs);
            rt["beta"] = rs;
        }
        resolved["trajectory"] = rt;
    }

    if (j.contains("controller")) {
        const json& cj = j.at("controller");
        reject_unknown(cj, {"k", "r", "L", "eps_ev", "canonicalize"}, "controller");
        json rc;
        cfg.controller.k = number(cj, "k", 1.0, rc);
        cfg.controller.r = number(cj, "r", 0.5, rc);
        cfg.controller.eps_ev = number(cj, "eps_ev", 1e-9, rc);
        cfg.controller.canonicalize = cj.value("canonicalize", true);
        rc["canonicalize"] = cfg.controller.canonicalize;
        if (cj.contains("L")) {
            const json& lj = cj.at("L");
            if (lj.is_number()) {
                double d = lj.get<double>();
                cfg.controller.L = Mat3::diag(d, d, d);
            } else if (lj.is_array() && lj.size() == 3) {
                Mat3 L;
                for (int i = 0; i < 3; ++i) {
                    Vec3 row = vec3(lj[i], "controller.L row");
                    L(i, 0) = row.x; L(i, 1) = row.y; L(i, 2) = row.z;
                }
                cfg.controller.L = L;
            } else {
                throw ConfigError("scenario: controller.L must be a scalar or a 3x3 array");
            }
            rc["L"] = lj;
        } else {
            rc["L"] = 1.0;
        }
        resolved["controller"] = rc;
    }

    if (j.contains("initial_error")) {
        const json& ij = j.at("initial_error");
        reject_unknown(ij, {"axis", "angle_rad"}, "initial_error");
        json ri;
        Vec3 axis = ij.contains("axis") ? vec3(ij.at("axis"), "initial_error.axis")
                                        : Vec3{1.0, 0.0, 0.0};
        double n = axis.norm();
        if (n <= 0.0) throw ConfigError("scenario: initial_error.axis must be nonzero");
        cfg.initial_error_axis = axis / n;
        cfg.initial_error_angle = number(ij, "angle_rad", 0.0, ri);
        ri["axis"] = {cfg.initial_error_axis.x, cfg.initial_error_axis.y, cfg.initial_error_axis.z};
        resolved["initial_error"] = ri;
    }

    std::string wmode = j.value("initial_w_mode", std::string("compliant"));
    resolved["initial_w_mode"] = wmode;
    if (wmode == "compliant")
        cfg.initial_w_mode = InitialWMode::Compliant;
    else if (wmode == "match_reference")
        cfg.initial_w_mode = InitialWMode::MatchReference;
    else
        throw ConfigError("scenario: unknown initial_w_mode '" + wmode + "'");

    if (j.contains("initial_w_rad_s")) {
        cfg.initial_w = vec3(j.at("initial_w_rad_s"), "initial_w_rad_s");
        resolved["initial_w_rad_s"] = {cfg.initial_w.x, cfg.initial_w.y, cfg.initial_w.z};
    }

    cfg.validate();
    out.resolved = resolved.dump();
    return out;
}

ScenarioFile load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("scenario: cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_scenario(ss.str());
}

}  // namespace qd
