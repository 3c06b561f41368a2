#ifndef QUATDIFF_STABILITY_HPP
#define QUATDIFF_STABILITY_HPP

#include <array>
#include <complex>
#include <string>

#include "quatdiff/dynamics.hpp"
#include "quatdiff/linalg.hpp"

namespace qd {

using StateMatrix6 = Mat6;
using Complex = std::complex<double>;

// Coefficients of the normalized even characteristic polynomial
//   P(x) = x^6 + c4 x^4 + c2 x^2 + c0,  x = lambda / |w|,
// together with the reduced monic cubic x^3 + a x^2 + b x + c obtained by the
// substitution lambda' = (1 + e0) lambda^2 / |w|^2.
struct CharPoly {
    double c4 = 0.0, c2 = 0.0, c0 = 0.0;
    double a = 0.0, b = 0.0, c = 0.0;
    double e0 = 0.0;
    double w_mag = 0.0;
};

enum class StabilityClass { MarginallyStable, Unstable, Boundary };

inline const char* to_string(StabilityClass c) {
    switch (c) {
        case StabilityClass::MarginallyStable: return "MarginallyStable";
        case StabilityClass::Unstable: return "Unstable";
        default: return "Boundary";
    }
}

struct StabilityReport {
    double e0 = 0.0;
    double w_mag = 0.0;
    double discriminant = 0.0;
    CharPoly poly;
    std::array<Complex, 3> cubic_roots{};
    std::array<Complex, 6> eigenvalues{};
    double max_re_eigenvalue = 0.0;
    StabilityClass cls = StabilityClass::Boundary;
};

// Linearized state matrix about a constraint-compliant (e0, ev, w).
StateMatrix6 build_A(const ErrorState& s);

// Orthogonal frame with columns ev/|ev|, (w x ev)/(|ev||w|), w/|w|.
Mat3 build_C(const ErrorState& s);

struct ReducedA {
    Mat6 rotated;     // A' = blockdiag(C^T, C^T) A blockdiag(C, C)
    Mat6 normalized;  // A'' = diag(1/w, 1/w^2) A' diag(1, w); spectrum of A' scaled by 1/w
};

ReducedA reduce_A(const StateMatrix6& A, const Mat3& C, double w_mag);

// Closed-form characteristic polynomial coefficients for given (e0, |w|).
CharPoly char_poly_closed(double e0, double w_mag);

// Faddeev-LeVerrier coefficients of det(lambda I - A), leading first.
std::array<double, 7> char_poly_numeric(const StateMatrix6& A);

// Non-trivial discriminant factor 1 + 5 e0 - 8 e0^2 + 4 e0^3.
double discriminant(double e0);

// Roots of the monic cubic in p, sorted lexicographically by (re, im).
std::array<Complex, 3> cubic_roots(const CharPoly& p);

// Six eigenvalues from the cubic roots via lambda^2 = lambda' |w|^2 / (1 + e0).
std::array<Complex, 6> eigenvalues(double e0, double w_mag);

StabilityReport classify(double e0, double w_mag, double tol = 1e-8);

}  // namespace qd

#endif
