#ifndef QUATDIFF_TRAJECTORY_HPP
#define QUATDIFF_TRAJECTORY_HPP

#include <functional>
#include <vector>

#include "quatdiff/quat.hpp"

namespace qd {

// value and first two derivatives of a scalar signal at time t
struct SignalValue {
    double value = 0.0;
    double d1 = 0.0;
    double d2 = 0.0;
};

class Signal {
  public:
    Signal() : eval_([](double) { return SignalValue{}; }) {}
    explicit Signal(std::function<SignalValue(double)> f) : eval_(std::move(f)) {}

    SignalValue operator()(double t) const { return eval_(t); }

    // coefficients low-order first: c0 + c1 t + c2 t^2 + ...
    static Signal polynomial(std::vector<double> coeffs);
    static Signal sinusoid(double amplitude, double angular_rate, double phase = 0.0,
                           double offset = 0.0);
    // natural cubic spline through (t_i, y_i); knots strictly increasing
    static Signal cubic_spline(std::vector<double> knots_t, std::vector<double> knots_y);

  private:
    std::function<SignalValue(double)> eval_;
};

struct TrajectoryParams {
    double phi = 0.0;  // constant half-offset, |phi| < pi/2
    Signal alpha;
    Signal beta;
};

struct TrajectorySample {
    double t = 0.0;
    Quaternion p, q;
    Vec3 v, w;
    Vec3 vdot, wdot;
    Mat3 triad;  // columns xhat, yhat, zhat
};

TrajectorySample sample(const TrajectoryParams& params, double t);

// full angular velocity of the triad frame, exposed in the 2w convention
Vec3 omega_full(const TrajectoryParams& params, double t);

struct ConsistencyReport {
    double pdot = 0.0, qdot = 0.0;
    double xhat = 0.0, yhat = 0.0, zhat = 0.0;
    double vdot = 0.0, wdot = 0.0;
    double max() const;
};

// central-difference residuals of the analytic derivatives at (t, h)
ConsistencyReport verify_consistency(const TrajectoryParams& params, double t, double h);

}  // namespace qd

#endif
