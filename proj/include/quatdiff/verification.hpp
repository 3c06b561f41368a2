#ifndef QUATDIFF_VERIFICATION_HPP
#define QUATDIFF_VERIFICATION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "quatdiff/stability.hpp"

namespace qd {

// Expected sparse pattern of the rotated matrix A' in terms of
// c = e0, s = |ev|, w = |w|.
Mat6 expected_rotated_A(double c, double s, double w);

// max relative mismatch between the Faddeev-LeVerrier coefficients of
// build_A(s) and the closed form; odd coefficients compared against zero.
// `perturb` is a test hook added to entry (pi, pj) of A before the check.
double charpoly_mismatch(const ErrorState& s, int pi = -1, int pj = -1, double perturb = 0.0);

// max relative error of A * delta against central differences of the
// nominal vector field along constraint-tangent directions
double jacobian_fd_error(const ErrorState& s, std::uint32_t seed, double step = 1e-5);

// max absolute residual over the six congruence identities and the
// entrywise A' pattern
double transform_identity_error(const ErrorState& s);

// |closed-form lambda^2 coefficient forms difference| maximized over an e0 grid;
// the two published expressions must agree identically
double lambda2_coefficient_mismatch();

struct SelftestCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SelftestOptions {
    std::uint32_t seed = 12345;
    int n_states = 200;
    // test hook: additive perturbation of one entry of A inside the char-poly check
    int perturb_i = -1, perturb_j = -1;
    double perturb = 0.0;
};

struct SelftestResult {
    std::vector<SelftestCheck> checks;
    bool all_pass = true;
};

SelftestResult run_selftest(const SelftestOptions& opts);

}  // namespace qd

#endif
