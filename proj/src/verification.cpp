#include "quatdiff/verification.hpp"

#include <cmath>
#include <sstream>

#include "quatdiff/sampling.hpp"

namespace qd {

Mat6 expected_rotated_A(double c, double s, double w) {
    Mat3 a11, a12, a21, a22;
    a11(0, 1) = w;
    a11(0, 2) = s * w;
    a11(1, 0) = -w;
    a11(2, 0) = -s * w / c;
    a12(0, 0) = c - c * c;
    a12(1, 1) = c - 1.0;
    a12(1, 2) = -s;
    a12(2, 1) = s;
    a12(2, 2) = c - 1.0;
    a21(0, 0) = w * w / (c * (1.0 + c));
    a21(1, 1) = w * w / (1.0 + c);
    a21(2, 2) = w * w / (1.0 + c);
    a22(0, 2) = 2.0 * s * w / (1.0 + c);
    return Mat6::from_blocks(a11, a12, a21, a22);
}

double charpoly_mismatch(const ErrorState& s, int pi, int pj, double perturb) {
    Mat6 A = build_A(s);
    if (pi >= 0 && pj >= 0) A(pi, pj) += perturb;
    auto numeric = char_poly_numeric(A);
    double w = s.w.norm();
    CharPoly p = char_poly_closed(s.e0, w);
    double w2 = w * w;
    std::array<double, 7> expected{1.0, 0.0, p.c4 * w2, 0.0, p.c2 * w2 * w2, 0.0,
                                   p.c0 * w2 * w2 * w2};
    double worst = 0.0;
    for (int k = 0; k < 7; ++k) {
        double scale = std::pow(w, k);  // coefficient of lambda^(6-k) carries w^k
        double err = (k % 2 == 0 && k > 0)
                         ? std::abs(numeric[k] - expected[k]) / std::max(std::abs(expected[k]), scale)
                         : std::abs(numeric[k] - expected[k]) / std::max(scale, 1e-300);
        worst = std::max(worst, err);
    }
    return worst;
}

double jacobian_fd_error(const ErrorState& s, std::uint32_t seed, double step) {
    Mat6 A = build_A(s);
    Vec6 x{s.ev.x, s.ev.y, s.ev.z, s.w.x, s.w.y, s.w.z};
    std::mt19937 rng(seed);
    std::normal_distribution<double> n(0.0, 1.0);

    double worst = 0.0;
    for (int trial = 0; trial < 8; ++trial) {
        Vec6 d;
        for (auto& v : d) v = n(rng);
        // project onto the tangent space of ev^T w = 0
        Vec6 grad{s.w.x, s.w.y, s.w.z, s.ev.x, s.ev.y, s.ev.z};
        double g2 = 0.0, gd = 0.0;
        for (int i = 0; i < 6; ++i) {
            g2 += grad[i] * grad[i];
            gd += grad[i] * d[i];
        }
        for (int i = 0; i < 6; ++i) d[i] -= grad[i] * gd / g2;
        double dn = norm(d);
        if (dn < 1e-9) continue;
        for (auto& v : d) v /= dn;

        Vec6 xp = x, xm = x;
        for (int i = 0; i < 6; ++i) {
            xp[i] += step * d[i];
            xm[i] -= step * d[i];
        }
        Vec6 fp = nominal_state_derivative(xp);
        Vec6 fm = nominal_state_derivative(xm);
        Vec6 fd, ad = A * d;
        for (int i = 0; i < 6; ++i) fd[i] = (fp[i] - fm[i]) / (2.0 * step);
        Vec6 diff;
        for (int i = 0; i < 6; ++i) diff[i] = ad[i] - fd[i];
        worst = std::max(worst, norm(diff) / std::max(norm(fd), 1e-12));
    }
    return worst;
}

namespace {

double max_abs_diff(const Mat3& a, const Mat3& b) {
    double m = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
    return m;
}

}  // namespace

double transform_identity_error(const ErrorState& st) {
    Mat3 C = build_C(st);
    Mat3 Ct = C.transpose();
    double c = st.e0;
    double s = st.ev.norm();
    double w = st.w.norm();

    double worst = 0.0;
    auto check = [&](const Mat3& got, const Mat3& want, double scale) {
        worst = std::max(worst, max_abs_diff(got, want) / std::max(1.0, scale));
    };

    check(Ct * C, Mat3::identity(), 1.0);
    check(Ct * outer(st.ev, st.ev) * C, Mat3::diag(s * s, 0.0, 0.0), 1.0);
    Mat3 ew;
    ew(0, 2) = s * w;
    check(Ct * outer(st.ev, st.w) * C, ew, w);
    Mat3 we;
    we(2, 0) = s * w;
    check(Ct * outer(st.w, st.ev) * C, we, w);
    Mat3 se;
    se(1, 2) = -s;
    se(2, 1) = s;
    check(Ct * skew(st.ev) * C, se, 1.0);
    Mat3 sw;
    sw(0, 1) = -w;
    sw(1, 0) = w;
    check(Ct * skew(st.w) * C, sw, w);

    Mat6 rotated = reduce_A(build_A(st), C, w).rotated;
    Mat6 want = expected_rotated_A(c, s, w);
    double m = 0.0;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) m = std::max(m, std::abs(rotated(i, j) - want(i, j)));
    worst = std::max(worst, m / std::max(1.0, want.max_abs()));
    return worst;
}

double lambda2_coefficient_mismatch() {
    double worst = 0.0;
    for (int i = -99; i <= 99; ++i) {
        if (i == 0) continue;
        double c = i / 100.0;
        double f1 = (1.0 - c) * (3.0 + 3.0 * c - 2.0 * c * c) / ((1.0 + c) * (1.0 + c));
        double f2 = (3.0 - 5.0 * c * c + 2.0 * c * c * c) / ((1.0 + c) * (1.0 + c));
        worst = std::max(worst, std::abs(f1 - f2) / std::max(1.0, std::abs(f1)));
    }
    return worst;
}

SelftestResult run_selftest(const SelftestOptions& opts) {
    SelftestResult res;
    std::mt19937 rng(opts.seed);

    auto add = [&](const std::string& name, bool pass, double value, double bound) {
        std::ostringstream os;
        os << "max residual " << value << " (bound " << bound << ")";
        res.checks.push_back({name, pass, os.str()});
        res.all_pass = res.all_pass && pass;
    };

    {
        double worst = 0.0;
        for (int i = 0; i < opts.n_states; ++i) {
            ErrorState s = random_compliant_state(rng);
            worst = std::max(worst,
                             charpoly_mismatch(s, opts.perturb_i, opts.perturb_j, opts.perturb));
        }
        add("charpoly_closed_vs_faddeev_leverrier", worst < 1e-9, worst, 1e-9);
    }
    {
        double worst = 0.0;
        for (int i = 0; i < 50; ++i) {
            // moderate range: central-difference truncation grows like
            // step^2 |w|^2 / e0^3 and would swamp the 1e-6 bound at extremes
            ErrorState s = random_compliant_state(rng, 0.1, 0.95, 0.25, 4.0);
            worst = std::max(worst, jacobian_fd_error(s, opts.seed + 1000 + i));
        }
        add("jacobian_finite_difference", worst < 1e-6, worst, 1e-6);
    }
    {
        double worst = 0.0;
        for (int i = 0; i < 50; ++i) {
            ErrorState s = random_compliant_state(rng);
            worst = std::max(worst, transform_identity_error(s));
        }
        add("congruence_identities", worst < 1e-12, worst, 1e-12);
    }
    {
        double worst = 0.0;
        for (int i = 0; i < 50; ++i) {
            ErrorState s = random_compliant_state(rng);
            Mat6 A = build_A(s);
            worst = std::max(worst, std::abs(A.trace()) / A.frobenius());
        }
        add("trace_zero", worst < 1e-12, worst, 1e-12);
    }
    {
        double worst = lambda2_coefficient_mismatch();
        add("lambda2_coefficient_forms", worst < 1e-12, worst, 1e-12);
    }
    return res;
}

}  // namespace qd
