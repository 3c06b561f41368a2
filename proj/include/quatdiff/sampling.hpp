#ifndef QUATDIFF_SAMPLING_HPP
#define QUATDIFF_SAMPLING_HPP

#include <random>

#include "quatdiff/dynamics.hpp"

namespace qd {

inline Vec3 random_unit_vec3(std::mt19937& rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    Vec3 v;
    do {
        v = {n(rng), n(rng), n(rng)};
    } while (v.norm() < 1e-6);
    return v / v.norm();
}

inline Quaternion random_unit_quat(std::mt19937& rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    Quaternion q;
    do {
        q = {n(rng), {n(rng), n(rng), n(rng)}};
    } while (q.norm() < 1e-6);
    return q.normalized();
}

// compliant (ev^T w = 0) error state with e0 drawn from [e0_min, e0_max]
inline ErrorState random_compliant_state(std::mt19937& rng, double e0_min = 0.02,
                                         double e0_max = 0.99, double w_min = 0.1,
                                         double w_max = 10.0) {
    std::uniform_real_distribution<double> ue(e0_min, e0_max);
    std::uniform_real_distribution<double> uw(w_min, w_max);
    double e0 = ue(rng);
    Vec3 dir = random_unit_vec3(rng);
    Vec3 ev = dir * std::sqrt(1.0 - e0 * e0);
    Vec3 raw = random_unit_vec3(rng);
    Vec3 perp = raw - dir * dot(raw, dir);
    while (perp.norm() < 1e-6) {
        raw = random_unit_vec3(rng);
        perp = raw - dir * dot(raw, dir);
    }
    Vec3 w = perp / perp.norm() * uw(rng);
    return {e0, ev, w};
}

}  // namespace qd

#endif
