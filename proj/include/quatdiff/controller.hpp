#ifndef QUATDIFF_CONTROLLER_HPP
#define QUATDIFF_CONTROLLER_HPP

#include "quatdiff/dynamics.hpp"
#include "quatdiff/linalg.hpp"

namespace qd {

struct ControllerConfig {
    double k = 1.0;               // scalar gain in g
    Mat3 L = Mat3::identity();    // SPD feedback matrix
    double r = 0.5;               // constraint weighting in [0, 1]
    double eps_ev = 1e-9;         // small-|ev| guard
    bool canonicalize = true;     // flip e to the e0 > 0 hemisphere

    void validate() const;
};

struct ControlState {
    double e0 = 1.0;
    Vec3 ev;
    Vec3 v;
    Vec3 vdot;
    Vec3 w;
};

// scalar constraint law, bounded form: component of wdot along ev
double scalar_law_g(const ControlState& cs, double k);

// vector law driving w toward e0 v - ev x v
Vec3 vector_law_h(const ControlState& cs, const Mat3& L);

// first design: h blended with the scalar law along ev
Vec3 blended_accel(const ControlState& cs, const ControllerConfig& cfg);

// second design: target velocity f interpolating the two velocity constraints
Vec3 target_velocity(const ControlState& cs, const ControllerConfig& cfg);

// acceleration law fdot - L (w - f); carries the Lyapunov guarantee
Vec3 accel_law(const ControlState& cs, const ControllerConfig& cfg);

struct LyapunovValue {
    double V = 0.0;
    double Vdot = 0.0;
};

LyapunovValue lyapunov(const ControlState& cs, const ControllerConfig& cfg);

}  // namespace qd

#endif
