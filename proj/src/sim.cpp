#include "quatdiff/sim.hpp"

#include <cmath>

#include "quatdiff/errors.hpp"

namespace qd {

namespace {

void check_finite(const double* data, std::size_t n, double t) {
    for (std::size_t i = 0; i < n; ++i)
        if (!std::isfinite(data[i]))
            throw NonFiniteDerivative("non-finite state at t = " + std::to_string(t));
}

}  // namespace

void SimConfig::validate() const {
    if (dt <= 0.0) throw ConfigError("sim: dt must be positive");
    if (t_final < dt) throw ConfigError("sim: t_final must be >= dt");
    if (std::abs(initial_error_axis.norm() - 1.0) > 1e-9)
        throw ConfigError("sim: initial error axis must be unit");
    if (renormalize_every < 1) throw ConfigError("sim: renormalize_every must be >= 1");
    if (snapshot_stride < 1) throw ConfigError("sim: snapshot_stride must be >= 1");
    controller.validate();
}

SimTrace run_nominal(const SimConfig& cfg) {
    cfg.validate();
    Quaternion e0q = rotation_quat(cfg.initial_error_axis, cfg.initial_error_angle);
    ErrorState s{e0q.s, e0q.v, cfg.initial_w};
    if (s.e0 <= 0.0)
        throw NonCompliantState("run_nominal: initial e0 must be positive");
    if (!s.compliant(1e-9))
        throw NonCompliantState("run_nominal: initial state violates ev^T w = 0");

    Vec6 x{s.ev.x, s.ev.y, s.ev.z, s.w.x, s.w.y, s.w.z};
    int steps = static_cast<int>(std::llround(cfg.t_final / cfg.dt));
    SimTrace trace;
    trace.rows.reserve(steps + 1);

    auto record = [&](double t, const Vec6& y) {
        Vec3 ev{y[0], y[1], y[2]};
        Vec3 w{y[3], y[4], y[5]};
        double e0 = std::sqrt(std::max(0.0, 1.0 - ev.norm2()));
        Quaternion e{e0, ev};
        Vec3 v = v_from_w(e, w);
        TraceRow row;
        row.t = t;
        row.r_mag = std::sqrt(std::max(0.0, 2.0 - 2.0 * e0));  // |q - p| = sqrt(2 - 2 e0)
        row.e0 = e0;
        row.ev_dot_w = std::abs(dot(ev, w));
        row.vel_violation = (w - w_from_v(e, v)).norm();
        row.V_L = 0.5 * (w - w_from_v(e, v)).norm2();
        row.w_mag = w.norm();
        trace.rows.push_back(row);
        if (static_cast<int>(trace.rows.size() - 1) % cfg.snapshot_stride == 0)
            trace.snapshots.push_back({t, e, w, ev});
    };

    record(0.0, x);
    auto deriv = [](double, const Vec6& y) { return nominal_state_derivative(y); };
    for (int i = 0; i < steps; ++i) {
        double t = i * cfg.dt;
        x = rk4_step(x, t, cfg.dt, deriv);
        check_finite(x.data(), 6, t + cfg.dt);
        record(t + cfg.dt, x);
    }
    trace.final_state = x;
    return trace;
}

SimTrace run_tracking(const SimConfig& cfg) {
    cfg.validate();
    if (cfg.scenario != Scenario::ClosedLoopTracking)
        throw ConfigError("run_tracking: scenario must be closed_loop_tracking");

    TrajectorySample s0 = sample(cfg.trajectory, 0.0);
    Quaternion e_init = rotation_quat(cfg.initial_error_axis, cfg.initial_error_angle);
    Quaternion q = qmul(s0.p, e_init).normalized();
    Vec3 w0 = (cfg.initial_w_mode == InitialWMode::Compliant)
                  ? w_from_v(e_init, s0.v)
                  : s0.v;

    std::array<double, 7> x{q.s, q.v.x, q.v.y, q.v.z, w0.x, w0.y, w0.z};
    int steps = static_cast<int>(std::llround(cfg.t_final / cfg.dt));
    SimTrace trace;
    trace.rows.reserve(steps + 1);

    auto control_state = [&](double t, const std::array<double, 7>& y) {
        Quaternion qq{y[0], y[1], y[2], y[3]};
        Vec3 w{y[4], y[5], y[6]};
        TrajectorySample ts = sample(cfg.trajectory, t);
        Quaternion e = qmul(Quaternion{ts.p.s, -ts.p.v}, qq);
        if (cfg.controller.canonicalize && e.s < 0.0) e = -e;
        return std::pair<ControlState, TrajectorySample>(
            ControlState{e.s, e.v, ts.v, ts.vdot, w}, ts);
    };

    auto deriv = [&](double t, const std::array<double, 7>& y) {
        auto [cs, ts] = control_state(t, y);
        Quaternion qq{y[0], y[1], y[2], y[3]};
        Vec3 w{y[4], y[5], y[6]};
        Quaternion qdot = qmul(qq, embed_vec(w));
        Vec3 wdot = accel_law(cs, cfg.controller);
        return std::array<double, 7>{qdot.s, qdot.v.x, qdot.v.y, qdot.v.z,
                                     wdot.x, wdot.y, wdot.z};
    };

    auto record = [&](double t, const std::array<double, 7>& y) {
        auto [cs, ts] = control_state(t, y);
        Quaternion qq{y[0], y[1], y[2], y[3]};
        TraceRow row;
        row.t = t;
        row.r_mag = (qq - ts.p).norm();
        row.e0 = cs.e0;
        row.ev_dot_w = std::abs(dot(cs.ev, cs.w));
        row.vel_violation = (cs.w - w_from_v(Quaternion{cs.e0, cs.ev}, cs.v)).norm();
        row.V_L = lyapunov(cs, cfg.controller).V;
        row.w_mag = cs.w.norm();
        trace.rows.push_back(row);
        if (static_cast<int>(trace.rows.size() - 1) % cfg.snapshot_stride == 0)
            trace.snapshots.push_back({t, qq, cs.w, cs.ev});
    };

    record(0.0, x);
    for (int i = 0; i < steps; ++i) {
        double t = i * cfg.dt;
        x = rk4_step(x, t, cfg.dt, deriv);
        check_finite(x.data(), 7, t + cfg.dt);
        if ((i + 1) % cfg.renormalize_every == 0) {
            Quaternion qq{x[0], x[1], x[2], x[3]};
            qq = qq.normalized();
            x[0] = qq.s; x[1] = qq.v.x; x[2] = qq.v.y; x[3] = qq.v.z;
        }
        record(t + cfg.dt, x);
    }
    return trace;
}

}  // namespace qd
