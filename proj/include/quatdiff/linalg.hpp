#ifndef QUATDIFF_LINALG_HPP
#define QUATDIFF_LINALG_HPP

#include <array>
#include <cmath>
#include <cstddef>

namespace qd {

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    constexpr Vec3() = default;
    constexpr Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

    constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    constexpr Vec3 operator-() const { return {-x, -y, -z}; }
    constexpr Vec3 operator*(double a) const { return {x * a, y * a, z * a}; }
    constexpr Vec3 operator/(double a) const { return {x / a, y / a, z / a}; }
    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
    Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }

    double norm() const { return std::sqrt(x * x + y * y + z * z); }
    constexpr double norm2() const { return x * x + y * y + z * z; }
    bool finite() const { return std::isfinite(x) && std::isfinite(y) && std::isfinite(z); }
};

constexpr Vec3 operator*(double a, const Vec3& v) { return v * a; }

constexpr double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

struct Mat3 {
    // row-major
    std::array<std::array<double, 3>, 3> m{};

    double& operator()(int i, int j) { return m[i][j]; }
    double operator()(int i, int j) const { return m[i][j]; }

    static Mat3 zero() { return {}; }
    static Mat3 identity() {
        Mat3 r;
        r(0, 0) = r(1, 1) = r(2, 2) = 1.0;
        return r;
    }
    static Mat3 diag(double a, double b, double c) {
        Mat3 r;
        r(0, 0) = a; r(1, 1) = b; r(2, 2) = c;
        return r;
    }
    static Mat3 from_columns(const Vec3& c0, const Vec3& c1, const Vec3& c2) {
        Mat3 r;
        r(0, 0) = c0.x; r(0, 1) = c1.x; r(0, 2) = c2.x;
        r(1, 0) = c0.y; r(1, 1) = c1.y; r(1, 2) = c2.y;
        r(2, 0) = c0.z; r(2, 1) = c1.z; r(2, 2) = c2.z;
        return r;
    }

    Vec3 column(int j) const { return {m[0][j], m[1][j], m[2][j]}; }

    Mat3 transpose() const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r(i, j) = m[j][i];
        return r;
    }

    Mat3 operator+(const Mat3& o) const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r(i, j) = m[i][j] + o(i, j);
        return r;
    }
    Mat3 operator-(const Mat3& o) const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r(i, j) = m[i][j] - o(i, j);
        return r;
    }
    Mat3 operator*(double a) const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r(i, j) = m[i][j] * a;
        return r;
    }
    Mat3 operator*(const Mat3& o) const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                double s = 0.0;
                for (int k = 0; k < 3; ++k) s += m[i][k] * o(k, j);
                r(i, j) = s;
            }
        return r;
    }
    Vec3 operator*(const Vec3& v) const {
        return {m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z,
                m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
                m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z};
    }

    double trace() const { return m[0][0] + m[1][1] + m[2][2]; }
    double det() const {
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
             - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
             + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    }
    double frobenius() const {
        double s = 0.0;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) s += m[i][j] * m[i][j];
        return std::sqrt(s);
    }
    bool symmetric(double tol = 1e-12) const {
        return std::abs(m[0][1] - m[1][0]) <= tol && std::abs(m[0][2] - m[2][0]) <= tol
            && std::abs(m[1][2] - m[2][1]) <= tol;
    }
    // symmetric positive definite via leading principal minors
    bool spd(double tol = 1e-12) const {
        if (!symmetric(tol * (1.0 + frobenius()))) return false;
        double m1 = m[0][0];
        double m2 = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        double m3 = det();
        return m1 > 0.0 && m2 > 0.0 && m3 > 0.0;
    }
};

inline Mat3 skew(const Vec3& u) {
    Mat3 r;
    r(0, 1) = -u.z; r(0, 2) = u.y;
    r(1, 0) = u.z;  r(1, 2) = -u.x;
    r(2, 0) = -u.y; r(2, 1) = u.x;
    return r;
}

inline Mat3 outer(const Vec3& a, const Vec3& b) {
    Mat3 r;
    r(0, 0) = a.x * b.x; r(0, 1) = a.x * b.y; r(0, 2) = a.x * b.z;
    r(1, 0) = a.y * b.x; r(1, 1) = a.y * b.y; r(1, 2) = a.y * b.z;
    r(2, 0) = a.z * b.x; r(2, 1) = a.z * b.y; r(2, 2) = a.z * b.z;
    return r;
}

using Vec6 = std::array<double, 6>;

struct Mat6 {
    std::array<std::array<double, 6>, 6> m{};

    double& operator()(int i, int j) { return m[i][j]; }
    double operator()(int i, int j) const { return m[i][j]; }

    static Mat6 zero() { return {}; }
    static Mat6 identity() {
        Mat6 r;
        for (int i = 0; i < 6; ++i) r(i, i) = 1.0;
        return r;
    }
    static Mat6 from_blocks(const Mat3& a11, const Mat3& a12, const Mat3& a21, const Mat3& a22) {
        Mat6 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                r(i, j) = a11(i, j);
                r(i, j + 3) = a12(i, j);
                r(i + 3, j) = a21(i, j);
                r(i + 3, j + 3) = a22(i, j);
            }
        return r;
    }

    Mat3 block(int bi, int bj) const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r(i, j) = m[3 * bi + i][3 * bj + j];
        return r;
    }

    Mat6 transpose() const {
        Mat6 r;
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) r(i, j) = m[j][i];
        return r;
    }
    Mat6 operator+(const Mat6& o) const {
        Mat6 r;
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) r(i, j) = m[i][j] + o(i, j);
        return r;
    }
    Mat6 operator-(const Mat6& o) const {
        Mat6 r;
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) r(i, j) = m[i][j] - o(i, j);
        return r;
    }
    Mat6 operator*(double a) const {
        Mat6 r;
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) r(i, j) = m[i][j] * a;
        return r;
    }
    Mat6 operator*(const Mat6& o) const {
        Mat6 r;
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) {
                double s = 0.0;
                for (int k = 0; k < 6; ++k) s += m[i][k] * o(k, j);
                r(i, j) = s;
            }
        return r;
    }
    Vec6 operator*(const Vec6& v) const {
        Vec6 r{};
        for (int i = 0; i < 6; ++i) {
            double s = 0.0;
            for (int k = 0; k < 6; ++k) s += m[i][k] * v[k];
            r[i] = s;
        }
        return r;
    }

    double trace() const {
        double s = 0.0;
        for (int i = 0; i < 6; ++i) s += m[i][i];
        return s;
    }
    double frobenius() const {
        double s = 0.0;
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) s += m[i][j] * m[i][j];
        return std::sqrt(s);
    }
    double max_abs() const {
        double s = 0.0;
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j) s = std::max(s, std::abs(m[i][j]));
        return s;
    }
};

// matrix exponential by scaling-and-squaring with a Taylor series
inline Mat6 expm(const Mat6& a) {
    double nrm = a.frobenius();
    int squarings = 0;
    if (nrm > 0.5) {
        squarings = static_cast<int>(std::ceil(std::log2(nrm / 0.5)));
        if (squarings < 0) squarings = 0;
    }
    Mat6 as = a * std::pow(0.5, squarings);
    Mat6 result = Mat6::identity();
    Mat6 term = Mat6::identity();
    for (int k = 1; k <= 20; ++k) {
        term = term * as * (1.0 / k);
        result = result + term;
    }
    for (int i = 0; i < squarings; ++i) result = result * result;
    return result;
}

inline double norm(const Vec6& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

}  // namespace qd

#endif
