#ifndef QUATDIFF_SIM_HPP
#define QUATDIFF_SIM_HPP

#include <string>
#include <vector>

#include "quatdiff/controller.hpp"
#include "quatdiff/dynamics.hpp"
#include "quatdiff/trajectory.hpp"

namespace qd {

enum class Scenario { NominalFlow, ClosedLoopTracking };

enum class InitialWMode { Compliant, MatchReference };

struct SimConfig {
    double dt = 1e-3;
    double t_final = 20.0;
    Scenario scenario = Scenario::ClosedLoopTracking;
    TrajectoryParams trajectory;
    ControllerConfig controller;
    Vec3 initial_error_axis{1.0, 0.0, 0.0};
    double initial_error_angle = 0.0;
    InitialWMode initial_w_mode = InitialWMode::Compliant;
    Vec3 initial_w{0.0, 0.0, 0.0};  // nominal-flow body half-velocity
    int renormalize_every = 1;
    int snapshot_stride = 100;

    void validate() const;
};

struct TraceRow {
    double t = 0.0;
    double r_mag = 0.0;           // |q - p|
    double e0 = 0.0;
    double ev_dot_w = 0.0;        // |ev^T w|
    double vel_violation = 0.0;   // |w - (e0 v - ev x v)|
    double V_L = 0.0;
    double w_mag = 0.0;
};

struct Snapshot {
    double t = 0.0;
    Quaternion q;
    Vec3 w;
    Vec3 ev;
};

struct SimTrace {
    std::vector<TraceRow> rows;
    std::vector<Snapshot> snapshots;
    Vec6 final_state{};  // (ev, w) for nominal runs
};

// classical fixed-step RK4 on a flat state vector
template <typename State, typename Deriv>
State rk4_step(const State& x, double t, double dt, Deriv&& f) {
    State k1 = f(t, x);
    State x2 = x, x3 = x, x4 = x;
    for (std::size_t i = 0; i < x.size(); ++i) x2[i] += 0.5 * dt * k1[i];
    State k2 = f(t + 0.5 * dt, x2);
    for (std::size_t i = 0; i < x.size(); ++i) x3[i] += 0.5 * dt * k2[i];
    State k3 = f(t + 0.5 * dt, x3);
    for (std::size_t i = 0; i < x.size(); ++i) x4[i] += dt * k3[i];
    State k4 = f(t + dt, x4);
    State out = x;
    for (std::size_t i = 0; i < x.size(); ++i)
        out[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    return out;
}

SimTrace run_nominal(const SimConfig& cfg);
SimTrace run_tracking(const SimConfig& cfg);

}  // namespace qd

#endif
