#include "quatdiff/stability.hpp"

#include <algorithm>
#include <cmath>

#include "quatdiff/errors.hpp"

namespace qd {

namespace {

constexpr double singular_e0_eps = 1e-9;

void check_e0(double e0, const char* who) {
    if (std::abs(e0) < singular_e0_eps)
        throw SingularE0(std::string(who) + ": e0 = 0 is excluded (1/e0 terms)");
    require_not_antipodal(e0, who);
}

bool complex_less(const Complex& a, const Complex& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
}

}  // namespace

StateMatrix6 build_A(const ErrorState& s) {
    check_e0(s.e0, "build_A");
    if (!s.compliant())
        throw NonCompliantState("build_A: state violates ev.w = 0");
    const Vec3& ev = s.ev;
    const Vec3& w = s.w;
    double e0 = s.e0;
    double w2 = w.norm2();

    Mat3 a11 = outer(ev, w) - skew(w) - outer(w, ev) * (1.0 / e0);
    Mat3 a12 = Mat3::identity() * (e0 - 1.0) + skew(ev) + outer(ev, ev);
    Mat3 a21 = Mat3::identity() * (w2 / (1.0 + e0))
             + outer(ev, ev) * (w2 / ((1.0 + e0) * (1.0 + e0) * e0));
    Mat3 a22 = outer(ev, w) * (2.0 / (1.0 + e0));
    return Mat6::from_blocks(a11, a12, a21, a22);
}

Mat3 build_C(const ErrorState& s) {
    double se = s.ev.norm();
    double sw = s.w.norm();
    if (se <= antipodal_eps || sw <= antipodal_eps)
        throw DegenerateFrame("build_C: ev or w too small to define the frame");
    if (std::abs(dot(s.ev, s.w)) > compliance_eps * se * sw)
        throw DegenerateFrame("build_C: ev and w are not orthogonal");
    return Mat3::from_columns(s.ev / se, cross(s.w, s.ev) / (se * sw), s.w / sw);
}

ReducedA reduce_A(const StateMatrix6& A, const Mat3& C, double w_mag) {
    Mat3 Ct = C.transpose();
    Mat6 rotated = Mat6::from_blocks(
        Ct * A.block(0, 0) * C, Ct * A.block(0, 1) * C,
        Ct * A.block(1, 0) * C, Ct * A.block(1, 1) * C);
    // A'' = diag(1/w, 1/w^2) A' diag(1, w)
    Mat6 normalized = Mat6::from_blocks(
        rotated.block(0, 0) * (1.0 / w_mag), rotated.block(0, 1),
        rotated.block(1, 0) * (1.0 / (w_mag * w_mag)), rotated.block(1, 1) * (1.0 / w_mag));
    return {rotated, normalized};
}

CharPoly char_poly_closed(double e0, double w_mag) {
    check_e0(e0, "char_poly_closed");
    CharPoly p;
    p.e0 = e0;
    p.w_mag = w_mag;
    double c = e0;
    p.c4 = (1.0 + 3.0 * c - c * c - c * c * c) / (c * (1.0 + c));
    p.c2 = (1.0 - c) * (3.0 + 3.0 * c - 2.0 * c * c) / ((1.0 + c) * (1.0 + c));
    p.c0 = 2.0 * c * (1.0 - c) * (1.0 - c) / ((1.0 + c) * (1.0 + c) * (1.0 + c));
    p.a = 1.0 / c + 3.0 - c - c * c;
    p.b = (1.0 - c) * (3.0 + 3.0 * c - 2.0 * c * c);
    p.c = 2.0 * c * (1.0 - c) * (1.0 - c);
    return p;
}

std::array<double, 7> char_poly_numeric(const StateMatrix6& A) {
    // Faddeev-LeVerrier: M1 = A, c1 = -tr M1; M_{k+1} = A (M_k + c_k I)
    std::array<double, 7> coef{};
    coef[0] = 1.0;
    Mat6 M = A;
    for (int k = 1; k <= 6; ++k) {
        coef[k] = -M.trace() / k;
        if (k < 6) {
            Mat6 shifted = M;
            for (int i = 0; i < 6; ++i) shifted(i, i) += coef[k];
            M = A * shifted;
        }
    }
    return coef;
}

double discriminant(double e0) {
    return 1.0 + 5.0 * e0 - 8.0 * e0 * e0 + 4.0 * e0 * e0 * e0;
}

std::array<Complex, 3> cubic_roots(const CharPoly& p) {
    // monic x^3 + a x^2 + b x + c; depressed form y^3 + py + q via x = y - a/3
    double a = p.a, b = p.b, c = p.c;
    double pp = b - a * a / 3.0;
    double qq = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
    double disc = -4.0 * pp * pp * pp - 27.0 * qq * qq;
    std::array<Complex, 3> roots;
    double shift = -a / 3.0;
    double scale = std::max({1.0, std::abs(pp), std::abs(qq)});
    if (std::abs(pp) < 1e-14 * scale && std::abs(qq) < 1e-14 * scale) {
        roots = {Complex(shift), Complex(shift), Complex(shift)};
    } else if (disc >= 0.0) {
        // three real roots, trigonometric form
        double m = 2.0 * std::sqrt(-pp / 3.0);
        double arg = std::clamp(3.0 * qq / (pp * m), -1.0, 1.0);
        double theta = std::acos(arg) / 3.0;
        for (int k = 0; k < 3; ++k)
            roots[k] = Complex(m * std::cos(theta - 2.0 * M_PI * k / 3.0) + shift);
    } else {
        // one real root, Cardano
        double sq = std::sqrt(qq * qq / 4.0 + pp * pp * pp / 27.0);
        double u3 = -qq / 2.0 + (qq > 0 ? -sq : sq);
        // pick the larger-magnitude cube root for accuracy
        double u = std::cbrt(u3);
        double v = (u != 0.0) ? -pp / (3.0 * u) : 0.0;
        double y1 = u + v;
        double re = -y1 / 2.0;
        double im = std::sqrt(3.0) / 2.0 * std::abs(u - v);
        roots = {Complex(y1 + shift), Complex(re + shift, -im), Complex(re + shift, im)};
    }
    std::sort(roots.begin(), roots.end(), complex_less);
    return roots;
}

std::array<Complex, 6> eigenvalues(double e0, double w_mag) {
    CharPoly p = char_poly_closed(e0, w_mag);
    auto lp = cubic_roots(p);
    std::array<Complex, 6> eig;
    double k = w_mag * w_mag / (1.0 + e0);
    for (int i = 0; i < 3; ++i) {
        Complex lam = std::sqrt(lp[i] * k);
        eig[2 * i] = lam;
        eig[2 * i + 1] = -lam;
    }
    std::sort(eig.begin(), eig.end(), complex_less);
    return eig;
}

StabilityReport classify(double e0, double w_mag, double tol) {
    if (tol <= 0.0) throw InvalidRange("classify: tol must be positive");
    StabilityReport rep;
    rep.e0 = e0;
    rep.w_mag = w_mag;
    rep.discriminant = discriminant(e0);
    rep.poly = char_poly_closed(e0, w_mag);
    rep.cubic_roots = cubic_roots(rep.poly);
    rep.eigenvalues = eigenvalues(e0, w_mag);
    rep.max_re_eigenvalue = 0.0;
    for (const auto& l : rep.eigenvalues)
        rep.max_re_eigenvalue = std::max(rep.max_re_eigenvalue, l.real());

    const CharPoly& p = rep.poly;
    // tol also pads the Routh-Hurwitz margins (e0 = 1 sits exactly on a b = c)
    bool routh_hurwitz = p.a >= -tol && p.b >= -tol && p.c >= -tol && p.a * p.b - p.c > -tol;
    if (std::abs(rep.discriminant) <= tol)
        rep.cls = StabilityClass::Boundary;
    else if (rep.discriminant > tol && routh_hurwitz)
        rep.cls = StabilityClass::MarginallyStable;
    else
        rep.cls = StabilityClass::Unstable;
    return rep;
}

}  // namespace qd
