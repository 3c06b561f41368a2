#ifndef QUATDIFF_DYNAMICS_HPP
#define QUATDIFF_DYNAMICS_HPP

#include <cmath>

#include "quatdiff/quat.hpp"

namespace qd {

constexpr double antipodal_eps = 1e-6;   // guard on 1 + e0 denominators
constexpr double compliance_eps = 1e-9;  // |ev.w| <= eps * |ev||w|

// Unit error quaternion (e0, ev) together with the body half-angular velocity w.
struct ErrorState {
    double e0 = 1.0;
    Vec3 ev;
    Vec3 w;

    Quaternion error_quaternion() const { return {e0, ev}; }

    bool unit(double tol = 1e-9) const {
        return std::abs(e0 * e0 + ev.norm2() - 1.0) <= tol;
    }
    bool compliant(double eps = compliance_eps) const {
        return std::abs(dot(ev, w)) <= eps * ev.norm() * w.norm() + 1e-300;
    }
};

// Componentwise difference q - p; not unit in general.
struct DiffQuaternion {
    Quaternion r;
};

inline Quaternion error_quat(const Quaternion& p, const Quaternion& q) {
    require_unit(q, "error_quat");
    return qmul(qinv(p), q);
}

// e0 = 1 - |r|^2 / 2, for r = q - p with p, q unit
inline double e0_from_diff(const DiffQuaternion& d) {
    double n = d.r.norm();
    return 1.0 - 0.5 * n * n;
}

// desired half-velocity from body half-velocity under constant difference
inline Vec3 v_from_w(const Quaternion& e, const Vec3& w) {
    return e.s * w + cross(e.v, w);
}

// inverse map: w = e0 v - ev x v
inline Vec3 w_from_v(const Quaternion& e, const Vec3& v) {
    return e.s * v - cross(e.v, v);
}

// error-quaternion derivative in the general two-velocity form
inline Quaternion error_dot(const Quaternion& e, const Vec3& v, const Vec3& w) {
    return {dot(e.v, v - w), e.s * (w - v) + cross(e.v, v + w)};
}

inline void require_not_antipodal(double e0, const char* who) {
    if (e0 <= -1.0 + antipodal_eps)
        throw AntipodalSingularity(std::string(who) + ": e0 at or near the antipodal singularity");
}

// minimal-magnitude half-angular acceleration keeping the difference constant
inline Vec3 nominal_wdot(const Quaternion& e, const Vec3& w) {
    require_not_antipodal(e.s, "nominal_wdot");
    return e.v * (w.norm2() / (1.0 + e.s));
}

// Nonlinear state-space form on (ev, w), with e0 reconstructed as +sqrt(1 - |ev|^2).
// Restricted to the e0 > 0 hemisphere by construction.
inline Vec6 nominal_state_derivative(const Vec6& x) {
    Vec3 ev{x[0], x[1], x[2]};
    Vec3 w{x[3], x[4], x[5]};
    double s2 = ev.norm2();
    double e0 = std::sqrt(std::max(0.0, 1.0 - s2));
    Vec3 evdot = (e0 - 1.0) * w + ev * dot(ev, w) + cross(ev, w);
    Vec3 wdot = ev * (w.norm2() / (1.0 + e0));
    return {evdot.x, evdot.y, evdot.z, wdot.x, wdot.y, wdot.z};
}

// Full 7-state flow (e0, ev, w) carrying e0 explicitly; needed for studies in
// the e0 < 0 hemisphere where the reconstruction above does not apply.
using Vec7 = std::array<double, 7>;

inline Vec7 full_state_derivative(const Vec7& x) {
    double e0 = x[0];
    Vec3 ev{x[1], x[2], x[3]};
    Vec3 w{x[4], x[5], x[6]};
    require_not_antipodal(e0, "full_state_derivative");
    double evw = dot(ev, w);
    double e0dot = (e0 - 1.0) * evw;
    Vec3 evdot = (e0 - 1.0) * w + ev * evw + cross(ev, w);
    Vec3 wdot = ev * (w.norm2() / (1.0 + e0));
    return {e0dot, evdot.x, evdot.y, evdot.z, wdot.x, wdot.y, wdot.z};
}

inline Vec6 nominal_state_derivative(const ErrorState& s) {
    require_not_antipodal(s.e0, "nominal_state_derivative");
    return nominal_state_derivative(Vec6{s.ev.x, s.ev.y, s.ev.z, s.w.x, s.w.y, s.w.z});
}

}  // namespace qd

#endif
