#include "quatdiff/controller.hpp"

#include <cmath>

#include "quatdiff/errors.hpp"

namespace qd {

void ControllerConfig::validate() const {
    if (k <= 0.0) throw ConfigError("controller: k must be positive");
    if (r < 0.0 || r > 1.0) throw ConfigError("controller: r must be in [0, 1]");
    if (!L.spd(1e-9)) throw ConfigError("controller: L must be symmetric positive definite");
    if (eps_ev <= 0.0) throw ConfigError("controller: eps_ev must be positive");
}

double scalar_law_g(const ControlState& cs, double k) {
    return cs.e0 * dot(cs.w, (1.0 - cs.e0) * cs.v + cross(cs.ev, cs.v))
         - dot(cs.ev, cross(cs.v, cs.w)) - k * dot(cs.ev, cs.w);
}

Vec3 vector_law_h(const ControlState& cs, const Mat3& L) {
    const Vec3& ev = cs.ev;
    const Vec3& v = cs.v;
    const Vec3& w = cs.w;
    return cs.e0 * cs.vdot - cross(ev, cs.vdot)
         - v * dot(ev, w) - w * dot(ev, v)
         + cs.e0 * cross(v, w) + ev * dot(v, v + w)
         - L * (w - cs.e0 * v + cross(ev, v));
}

Vec3 blended_accel(const ControlState& cs, const ControllerConfig& cfg) {
    Vec3 h = vector_law_h(cs, cfg.L);
    if (cfg.r == 1.0) return h;
    double ev2 = cs.ev.norm2();
    if (cs.ev.norm() <= cfg.eps_ev)
        throw DegenerateErrorVector("blended_accel: |ev| too small for r < 1");
    double g = scalar_law_g(cs, cfg.k);
    return h + (1.0 - cfg.r) * ((g - dot(cs.ev, h)) / ev2) * cs.ev;
}

Vec3 target_velocity(const ControlState& cs, const ControllerConfig& cfg) {
    Vec3 f = cs.e0 * cs.v - cross(cs.ev, cs.v);
    // clamped denominator: exact for |ev| > eps, continuous through ev = 0
    double evn = std::max(cs.ev.norm(), cfg.eps_ev);
    f -= (1.0 - cfg.r) * (cs.e0 * dot(cs.ev, cs.v) / evn) * cs.ev;
    return f;
}

Vec3 accel_law(const ControlState& cs, const ControllerConfig& cfg) {
    const Vec3& ev = cs.ev;
    const Vec3& v = cs.v;
    const Vec3& w = cs.w;
    double e0 = cs.e0;
    double e0dot = dot(ev, v - w);
    Vec3 evdot = e0 * (w - v) + cross(ev, v + w);

    Vec3 dtarget = e0dot * v + e0 * cs.vdot - cross(evdot, v) - cross(ev, cs.vdot);
    Vec3 fb = w - e0 * v + cross(ev, v);

    // clamped denominators keep every term finite and continuous near ev = 0
    // while leaving the law exact for |ev| > eps
    double evn = std::max(ev.norm(), cfg.eps_ev);
    double omr = 1.0 - cfg.r;
    Vec3 pv = e0dot * v + e0 * cs.vdot;
    double evv = dot(ev, v);
    dtarget -= omr * (dot(ev, pv) / evn) * ev;
    dtarget -= omr * (e0 / evn) * (evdot * evv + ev * dot(evdot, v));
    dtarget += omr * (e0 * dot(ev, evdot) * evv / (evn * evn * evn)) * ev;
    fb += omr * (e0 * evv / evn) * ev;
    return dtarget - cfg.L * fb;
}

LyapunovValue lyapunov(const ControlState& cs, const ControllerConfig& cfg) {
    Vec3 d = cs.w - target_velocity(cs, cfg);
    return {0.5 * d.norm2(), -dot(d, cfg.L * d)};
}

}  // namespace qd
