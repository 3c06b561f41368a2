#include "quatdiff/trajectory.hpp"

#include <algorithm>
#include <cmath>

#include "quatdiff/errors.hpp"

namespace qd {

Signal Signal::polynomial(std::vector<double> coeffs) {
    return Signal([c = std::move(coeffs)](double t) {
        SignalValue s;
        for (std::size_t i = c.size(); i-- > 0;) s.value = s.value * t + c[i];
        for (std::size_t i = c.size(); i-- > 1;) s.d1 = s.d1 * t + i * c[i];
        for (std::size_t i = c.size(); i-- > 2;) s.d2 = s.d2 * t + i * (i - 1) * c[i];
        return s;
    });
}

Signal Signal::sinusoid(double amplitude, double angular_rate, double phase, double offset) {
    return Signal([=](double t) {
        double ph = angular_rate * t + phase;
        SignalValue s;
        s.value = offset + amplitude * std::sin(ph);
        s.d1 = amplitude * angular_rate * std::cos(ph);
        s.d2 = -amplitude * angular_rate * angular_rate * std::sin(ph);
        return s;
    });
}

Signal Signal::cubic_spline(std::vector<double> ts, std::vector<double> ys) {
    std::size_t n = ts.size();
    if (n < 2 || ys.size() != n) throw ConfigError("cubic_spline: need >= 2 matching knots");
    for (std::size_t i = 1; i < n; ++i)
        if (ts[i] <= ts[i - 1]) throw ConfigError("cubic_spline: knots must be strictly increasing");

    // natural spline second derivatives by the standard tridiagonal solve
    std::vector<double> m(n, 0.0), u(n, 0.0), z(n, 0.0);
    std::vector<double> l(n, 1.0);
    for (std::size_t i = 1; i + 1 < n; ++i) {
        double hi = ts[i] - ts[i - 1];
        double hi1 = ts[i + 1] - ts[i];
        double alpha = 3.0 * ((ys[i + 1] - ys[i]) / hi1 - (ys[i] - ys[i - 1]) / hi);
        l[i] = 2.0 * (ts[i + 1] - ts[i - 1]) - hi * u[i - 1];
        u[i] = hi1 / l[i];
        z[i] = (alpha - hi * z[i - 1]) / l[i];
    }
    for (std::size_t i = n - 1; i-- > 1;) m[i] = z[i] - u[i] * m[i + 1];

    return Signal([ts = std::move(ts), ys = std::move(ys), m = std::move(m)](double t) {
        std::size_t n = ts.size();
        std::size_t i = std::upper_bound(ts.begin(), ts.end(), t) - ts.begin();
        if (i == 0) i = 1;
        if (i >= n) i = n - 1;
        double h = ts[i] - ts[i - 1];
        double a = (ts[i] - t) / h;
        double b = (t - ts[i - 1]) / h;
        SignalValue s;
        s.value = a * ys[i - 1] + b * ys[i]
                + ((a * a * a - a) * m[i - 1] + (b * b * b - b) * m[i]) * h * h / 6.0;
        s.d1 = (ys[i] - ys[i - 1]) / h
             + ((3.0 * b * b - 1.0) * m[i] - (3.0 * a * a - 1.0) * m[i - 1]) * h / 6.0;
        s.d2 = a * m[i - 1] + b * m[i];
        return s;
    });
}

namespace {

struct Angles {
    double ca, sa, cb, sb;  // cos/sin of alpha, beta
    SignalValue al, be;
};

Angles eval_angles(const TrajectoryParams& params, double t) {
    Angles a;
    a.al = params.alpha(t);
    a.be = params.beta(t);
    a.ca = std::cos(a.al.value);
    a.sa = std::sin(a.al.value);
    a.cb = std::cos(a.be.value);
    a.sb = std::sin(a.be.value);
    return a;
}

// half-velocity for offset phi (w is the same expression with phi negated)
Vec3 half_velocity(const Angles& a, double cphi, double sphi) {
    Vec3 xhat{a.cb, a.sb, 0.0};
    Vec3 yhat{-a.ca * a.sb, a.ca * a.cb, -a.sa};
    double cx = a.al.d1 * cphi * cphi - a.be.d1 * cphi * sphi * a.sa;
    double cy = a.al.d1 * cphi * sphi + a.be.d1 * cphi * cphi * a.sa;
    return cx * xhat + cy * yhat;
}

Vec3 half_accel(const Angles& a, double cphi, double sphi) {
    Vec3 xhat{a.cb, a.sb, 0.0};
    Vec3 yhat{-a.ca * a.sb, a.ca * a.cb, -a.sa};
    Vec3 zhat{-a.sa * a.sb, a.sa * a.cb, a.ca};
    double ad = a.al.d1, add = a.al.d2, bd = a.be.d1, bdd = a.be.d2;
    double cx = add * cphi * cphi - 2.0 * ad * bd * cphi * sphi * a.ca
              - bdd * cphi * sphi * a.sa - bd * bd * cphi * cphi * a.ca * a.sa;
    double cy = add * cphi * sphi + 2.0 * ad * bd * cphi * cphi * a.ca
              + bdd * cphi * cphi * a.sa - bd * bd * cphi * sphi * a.ca * a.sa;
    double cz = -(ad * ad + bd * bd * a.sa * a.sa) * cphi * sphi;
    return cx * xhat + cy * yhat + cz * zhat;
}

}  // namespace

TrajectorySample sample(const TrajectoryParams& params, double t) {
    if (std::abs(params.phi) >= M_PI / 2.0)
        throw InvalidRange("trajectory: |phi| must be < pi/2");
    Angles a = eval_angles(params, t);
    double cphi = std::cos(params.phi);
    double sphi = std::sin(params.phi);

    TrajectorySample s;
    s.t = t;
    s.p = {cphi * a.ca, cphi * a.sa * a.cb, cphi * a.sa * a.sb, -sphi};
    s.q = {cphi * a.ca, cphi * a.sa * a.cb, cphi * a.sa * a.sb, sphi};
    s.v = half_velocity(a, cphi, sphi);
    s.w = half_velocity(a, cphi, -sphi);
    s.vdot = half_accel(a, cphi, sphi);
    s.wdot = half_accel(a, cphi, -sphi);
    s.triad = Mat3::from_columns({a.cb, a.sb, 0.0},
                                 {-a.ca * a.sb, a.ca * a.cb, -a.sa},
                                 {-a.sa * a.sb, a.sa * a.cb, a.ca});
    return s;
}

Vec3 omega_full(const TrajectoryParams& params, double t) {
    TrajectorySample s = sample(params, t);
    return 2.0 * s.w;
}

double ConsistencyReport::max() const {
    return std::max({pdot, qdot, xhat, yhat, zhat, vdot, wdot});
}

ConsistencyReport verify_consistency(const TrajectoryParams& params, double t, double h) {
    if (h < 1e-7 || h > 1e-3) throw InvalidRange("verify_consistency: h must be in [1e-7, 1e-3]");
    TrajectorySample s0 = sample(params, t);
    TrajectorySample sp = sample(params, t + h);
    TrajectorySample sm = sample(params, t - h);
    Angles a = eval_angles(params, t);

    auto qresid = [&](const Quaternion& plus, const Quaternion& minus, const Quaternion& analytic) {
        Quaternion fd = (plus - minus) * (0.5 / h);
        return (fd - analytic).norm();
    };
    auto vresid = [&](const Vec3& plus, const Vec3& minus, const Vec3& analytic) {
        return ((plus - minus) * (0.5 / h) - analytic).norm();
    };

    // pdot = p (x) v, qdot = q (x) w
    Quaternion pdot = qmul(s0.p, embed_vec(s0.v));
    Quaternion qdot = qmul(s0.q, embed_vec(s0.w));

    Vec3 xh = s0.triad.column(0), yh = s0.triad.column(1), zh = s0.triad.column(2);
    Vec3 xhdot = a.be.d1 * (a.ca * yh + a.sa * zh);
    Vec3 yhdot = -a.al.d1 * zh - a.be.d1 * a.ca * xh;
    Vec3 zhdot = -a.be.d1 * a.sa * xh + a.al.d1 * yh;

    ConsistencyReport r;
    r.pdot = qresid(sp.p, sm.p, pdot);
    r.qdot = qresid(sp.q, sm.q, qdot);
    r.xhat = vresid(sp.triad.column(0), sm.triad.column(0), xhdot);
    r.yhat = vresid(sp.triad.column(1), sm.triad.column(1), yhdot);
    r.zhat = vresid(sp.triad.column(2), sm.triad.column(2), zhdot);
    r.vdot = vresid(sp.v, sm.v, s0.vdot);
    r.wdot = vresid(sp.w, sm.w, s0.wdot);
    return r;
}

}  // namespace qd
