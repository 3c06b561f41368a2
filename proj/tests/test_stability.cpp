#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "quatdiff/sampling.hpp"
#include "quatdiff/stability.hpp"
#include "quatdiff/verification.hpp"

using namespace qd;

TEST_CASE("closed-form coefficients at e0 = 0.5") {
    CharPoly p = char_poly_closed(0.5, 1.0);
    CHECK(p.a == doctest::Approx(4.25).epsilon(1e-14));
    CHECK(p.b == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(p.c == doctest::Approx(0.25).epsilon(1e-14));
    // even coefficients are the cubic's scaled by powers of (1 + e0)
    double c = 0.5;
    CHECK(p.c4 == doctest::Approx(p.a / (1.0 + c)).epsilon(1e-13));
    CHECK(p.c2 == doctest::Approx(p.b / ((1.0 + c) * (1.0 + c))).epsilon(1e-13));
    CHECK(p.c0 == doctest::Approx(p.c / ((1.0 + c) * (1.0 + c) * (1.0 + c))).epsilon(1e-13));
    CHECK_THROWS_AS(char_poly_closed(0.0, 1.0), SingularE0);
    CHECK_THROWS_AS(char_poly_closed(-1.0, 1.0), AntipodalSingularity);
}

TEST_CASE("discriminant values and root bracket") {
    CHECK(discriminant(0.5) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(discriminant(-0.5) == doctest::Approx(-4.0).epsilon(1e-14));
    // bisect the sign change in (-0.17, -0.15)
    double lo = -0.17, hi = -0.15;
    REQUIRE(discriminant(lo) < 0.0);
    REQUIRE(discriminant(hi) > 0.0);
    for (int i = 0; i < 80; ++i) {
        double mid = 0.5 * (lo + hi);
        (discriminant(mid) < 0.0 ? lo : hi) = mid;
    }
    double root = 0.5 * (lo + hi);
    CHECK(root > -0.17);
    CHECK(root < -0.15);
    CHECK(std::abs(discriminant(root)) < 1e-12);
}

TEST_CASE("Faddeev-LeVerrier on a known diagonal matrix") {
    Mat6 D;
    for (int i = 0; i < 6; ++i) D(i, i) = i + 1.0;
    auto c = char_poly_numeric(D);
    // det(lambda I - D) = prod (lambda - k), k = 1..6: expand independently
    std::vector<double> poly{1.0};
    for (int k = 1; k <= 6; ++k) {
        std::vector<double> next(poly.size() + 1, 0.0);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i] += poly[i];
            next[i + 1] -= k * poly[i];
        }
        poly = next;
    }
    for (int i = 0; i < 7; ++i) CHECK(c[i] == doctest::Approx(poly[i]).epsilon(1e-12));
}

TEST_CASE("closed form matches the numeric characteristic polynomial") {
    std::mt19937 rng(53);
    for (int i = 0; i < 100; ++i) {
        ErrorState s = random_compliant_state(rng);
        CHECK(charpoly_mismatch(s) < 1e-9);
    }
}

TEST_CASE("cubic_roots on the e0 = 0.5 cubic and a complex-pair case") {
    auto r = cubic_roots(char_poly_closed(0.5, 1.0));
    CHECK(r[0].real() == doctest::Approx(-2.0 - std::sqrt(3.0)).epsilon(1e-10));
    CHECK(r[1].real() == doctest::Approx(-2.0 + std::sqrt(3.0)).epsilon(1e-8));
    CHECK(r[2].real() == doctest::Approx(-0.25).epsilon(1e-8));
    for (const auto& x : r) CHECK(x.imag() == 0.0);

    // x^3 + x has roots 0, +-i (Cardano branch); compare as a multiset since
    // fp noise in the ~1e-16 real parts can reorder the lexicographic sort
    CharPoly p;
    p.a = 0.0; p.b = 1.0; p.c = 0.0;
    auto rc = cubic_roots(p);
    for (Complex want : {Complex(0.0, -1.0), Complex(0.0, 0.0), Complex(0.0, 1.0)}) {
        double best = 1e300;
        for (const auto& x : rc) best = std::min(best, std::abs(x - want));
        CHECK(best < 1e-12);
    }
}

TEST_CASE("cubic roots actually satisfy the polynomial") {
    for (double e0 : {-0.9, -0.5, -0.16, -0.05, 0.05, 0.3, 0.8, 0.99}) {
        CharPoly p = char_poly_closed(e0, 1.0);
        double scale = std::max({1.0, std::abs(p.a), std::abs(p.b), std::abs(p.c)});
        for (const auto& x : cubic_roots(p)) {
            Complex res = ((x + p.a) * x + p.b) * x + p.c;
            CHECK(std::abs(res) < 1e-9 * scale);
        }
    }
}

TEST_CASE("eigenvalue symmetry, scaling, and imaginary-axis placement") {
    for (double e0 : {0.1, 0.5, 0.9}) {
        auto eig = eigenvalues(e0, 1.0);
        for (const auto& l : eig) CHECK(std::abs(l.real()) < 1e-10);
        // point symmetry: multiset equals its negation
        auto neg = eig;
        for (auto& l : neg) l = -l;
        std::sort(neg.begin(), neg.end(), [](const Complex& a, const Complex& b) {
            return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
        });
        for (int i = 0; i < 6; ++i) CHECK(std::abs(eig[i] - neg[i]) < 1e-12);
        // linear scaling with |w|
        auto eig3 = eigenvalues(e0, 3.0);
        for (int i = 0; i < 6; ++i) CHECK(std::abs(eig3[i] - 3.0 * eig[i]) < 1e-10);
    }
    // unstable side has a strictly positive real part
    auto eigu = eigenvalues(-0.5, 1.0);
    double maxre = 0.0;
    for (const auto& l : eigu) maxre = std::max(maxre, l.real());
    CHECK(maxre > 0.1);
}

TEST_CASE("classify: classes, w-invariance, boundary band, tol validation") {
    CHECK(classify(0.5, 1.0).cls == StabilityClass::MarginallyStable);
    CHECK(classify(-0.5, 1.0).cls == StabilityClass::Unstable);
    for (double e0 : {-0.7, -0.3, 0.2, 0.6, 0.95}) {
        auto c1 = classify(e0, 0.1).cls;
        CHECK(classify(e0, 1.0).cls == c1);
        CHECK(classify(e0, 10.0).cls == c1);
    }
    // near the discriminant root with a generous tol
    double lo = -0.17, hi = -0.15;
    for (int i = 0; i < 80; ++i) {
        double mid = 0.5 * (lo + hi);
        (discriminant(mid) < 0.0 ? lo : hi) = mid;
    }
    CHECK(classify(0.5 * (lo + hi), 1.0, 1e-6).cls == StabilityClass::Boundary);
    CHECK_THROWS_AS(classify(0.5, 1.0, 0.0), InvalidRange);
    CHECK(std::string(to_string(StabilityClass::MarginallyStable)) == "MarginallyStable");
}

TEST_CASE("build_A preconditions") {
    ErrorState s{std::cos(0.5), Vec3{0, 0, std::sin(0.5)}, Vec3{1, 0, 0}};
    Mat6 A = build_A(s);
    CHECK(std::abs(A.trace()) <= 1e-12 * A.frobenius());

    ErrorState noncompliant = s;
    noncompliant.w = Vec3{1, 0, 1};
    CHECK_THROWS_AS(build_A(noncompliant), NonCompliantState);

    ErrorState singular{0.0, Vec3{0, 0, 1}, Vec3{1, 0, 0}};
    CHECK_THROWS_AS(build_A(singular), SingularE0);

    ErrorState antipodal{-1.0 + 1e-9, Vec3{0, 0, 1e-4}, Vec3{1, 0, 0}};
    CHECK_THROWS_AS(build_A(antipodal), AntipodalSingularity);
}

TEST_CASE("build_C frame and the congruence reduction") {
    std::mt19937 rng(59);
    for (int i = 0; i < 50; ++i) {
        ErrorState s = random_compliant_state(rng);
        CHECK(transform_identity_error(s) < 1e-12);
        // similarity preserves the characteristic polynomial
        Mat6 A = build_A(s);
        double w = s.w.norm();
        ReducedA red = reduce_A(A, build_C(s), w);
        auto ca = char_poly_numeric(A);
        auto cr = char_poly_numeric(red.rotated);
        for (int k = 0; k < 7; ++k) {
            double scale = std::max(1.0, std::pow(std::max(w, 1.0), k));
            CHECK(std::abs(ca[k] - cr[k]) < 1e-10 * scale * std::max(1.0, std::abs(ca[k])));
        }
        // normalized matrix has the unit-|w| closed-form coefficients
        auto cn = char_poly_numeric(red.normalized);
        CharPoly p = char_poly_closed(s.e0, 1.0);
        CHECK(cn[2] == doctest::Approx(p.c4).epsilon(1e-8));
        CHECK(cn[4] == doctest::Approx(p.c2).epsilon(1e-8));
        CHECK(cn[6] == doctest::Approx(p.c0).epsilon(1e-8));
    }
    ErrorState degenerate{1.0, Vec3{0, 0, 0}, Vec3{1, 0, 0}};
    CHECK_THROWS_AS(build_C(degenerate), DegenerateFrame);
}

TEST_CASE("selftest passes clean and detects a seeded defect") {
    SelftestOptions opts;
    opts.n_states = 50;
    SelftestResult clean = run_selftest(opts);
    CHECK(clean.all_pass);
    REQUIRE(clean.checks.size() == 5);

    // deterministic for a fixed seed
    SelftestResult again = run_selftest(opts);
    for (std::size_t i = 0; i < clean.checks.size(); ++i)
        CHECK(clean.checks[i].detail == again.checks[i].detail);

    // perturbing any single entry of A must trip the char-poly oracle
    opts.perturb_i = 3;
    opts.perturb_j = 1;
    opts.perturb = 1e-3;
    SelftestResult broken = run_selftest(opts);
    CHECK(!broken.all_pass);
    CHECK(!broken.checks[0].pass);
}
