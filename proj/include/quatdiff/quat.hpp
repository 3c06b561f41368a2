#ifndef QUATDIFF_QUAT_HPP
#define QUATDIFF_QUAT_HPP

#include <cmath>

#include "quatdiff/errors.hpp"
#include "quatdiff/linalg.hpp"

namespace qd {

// Scalar-first quaternion: q = [s, v.x, v.y, v.z].
struct Quaternion {
    double s = 1.0;
    Vec3 v;

    constexpr Quaternion() = default;
    constexpr Quaternion(double s_, const Vec3& v_) : s(s_), v(v_) {}
    constexpr Quaternion(double q0, double q1, double q2, double q3) : s(q0), v(q1, q2, q3) {}

    static constexpr Quaternion identity() { return {1.0, {0.0, 0.0, 0.0}}; }

    Quaternion operator+(const Quaternion& o) const { return {s + o.s, v + o.v}; }
    Quaternion operator-(const Quaternion& o) const { return {s - o.s, v - o.v}; }
    Quaternion operator-() const { return {-s, -v}; }
    Quaternion operator*(double a) const { return {s * a, v * a}; }

    double norm() const { return std::sqrt(s * s + v.norm2()); }
    Quaternion normalized() const {
        double n = norm();
        return {s / n, v / n};
    }
    bool finite() const { return std::isfinite(s) && v.finite(); }
};

constexpr double unit_input_tol = 1e-6;

inline bool is_unit(const Quaternion& q, double tol = unit_input_tol) {
    return std::abs(q.norm() - 1.0) <= tol;
}

inline void require_unit(const Quaternion& q, const char* who) {
    if (!is_unit(q)) throw NonUnitInput(std::string(who) + ": quaternion is not unit magnitude");
}

inline Quaternion qmul(const Quaternion& p, const Quaternion& q) {
    return {p.s * q.s - dot(p.v, q.v), p.s * q.v + q.s * p.v + cross(p.v, q.v)};
}

inline Quaternion qinv(const Quaternion& q) {
    require_unit(q, "qinv");
    return {q.s, -q.v};
}

inline Quaternion embed_vec(const Vec3& u) { return {0.0, u}; }

// four-component dot product
inline double qdot4(const Quaternion& p, const Quaternion& q) {
    return p.s * q.s + dot(p.v, q.v);
}

// dq/dt = (1/2) q (x) omega, omega the full body angular velocity
inline Quaternion quat_kinematics(const Quaternion& q, const Vec3& omega_body) {
    require_unit(q, "quat_kinematics");
    return qmul(q, embed_vec(omega_body)) * 0.5;
}

// exponential of a pure quaternion u: (cos|u|, sin|u| u/|u|)
inline Quaternion quat_exp(const Vec3& u) {
    double a = u.norm();
    if (a < 1e-300) return Quaternion::identity();
    return {std::cos(a), u * (std::sin(a) / a)};
}

// rotation by `angle` about unit `axis`
inline Quaternion rotation_quat(const Vec3& axis, double angle) {
    return {std::cos(0.5 * angle), axis * std::sin(0.5 * angle)};
}

// Euler's equation: n = omega x J omega + J omega_dot
inline Vec3 torque_from_accel(const Mat3& inertia, const Vec3& omega, const Vec3& omega_dot) {
    if (!inertia.spd(1e-9)) throw NonSPDInertia("torque_from_accel: inertia must be symmetric positive definite");
    return cross(omega, inertia * omega) + inertia * omega_dot;
}

}  // namespace qd

#endif
