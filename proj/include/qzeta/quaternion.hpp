#ifndef QZETA_QUATERNION_HPP
#define QZETA_QUATERNION_HPP

#include <cmath>
#include <complex>
#include <iosfwd>
#include <string>
#include <utility>

#include "qzeta/errors.hpp"

namespace qzeta {

// A quaternion x0 + x1*i + x2*j + x3*k over double-precision reals.
// Plain value type; all arithmetic is allocation-free and thread-safe.
struct Quaternion {
    double x0 = 0.0;
    double x1 = 0.0;
    double x2 = 0.0;
    double x3 = 0.0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double r) : x0(r) {}
    constexpr Quaternion(double a, double b, double c, double d)
        : x0(a), x1(b), x2(c), x3(d) {}

    static constexpr Quaternion unit_i() { return {0, 1, 0, 0}; }
    static constexpr Quaternion unit_j() { return {0, 0, 1, 0}; }
    static constexpr Quaternion unit_k() { return {0, 0, 0, 1}; }

    // Builds x = a + j*b from the simplex/perplex pair.
    static constexpr Quaternion from_symplectic(std::complex<double> a,
                                                std::complex<double> b) {
        return {a.real(), a.imag(), b.real(), -b.imag()};
    }

    constexpr bool is_zero() const {
        return x0 == 0.0 && x1 == 0.0 && x2 == 0.0 && x3 == 0.0;
    }
    bool is_finite() const {
        return std::isfinite(x0) && std::isfinite(x1) && std::isfinite(x2) &&
               std::isfinite(x3);
    }
    // Entries with x2 = x3 = 0 embed the complex plane.
    constexpr bool is_complex() const { return x2 == 0.0 && x3 == 0.0; }
    constexpr bool is_real() const {
        return x1 == 0.0 && x2 == 0.0 && x3 == 0.0;
    }

    constexpr double real_part() const { return x0; }

    constexpr Quaternion conj() const { return {x0, -x1, -x2, -x3}; }

    constexpr double norm_sq() const {
        return x0 * x0 + x1 * x1 + x2 * x2 + x3 * x3;
    }
    double norm() const { return std::sqrt(norm_sq()); }

    // x = a + j*b with simplex a = x0 + x1*i and perplex b = x2 - x3*i.
    constexpr std::pair<std::complex<double>, std::complex<double>>
    symplectic_parts() const {
        return {std::complex<double>(x0, x1), std::complex<double>(x2, -x3)};
    }
    constexpr std::complex<double> simplex() const { return {x0, x1}; }
    constexpr std::complex<double> perplex() const { return {x2, -x3}; }

    Quaternion inverse() const;

    constexpr Quaternion operator-() const { return {-x0, -x1, -x2, -x3}; }

    constexpr Quaternion& operator+=(const Quaternion& r) {
        x0 += r.x0;
        x1 += r.x1;
        x2 += r.x2;
        x3 += r.x3;
        return *this;
    }
    constexpr Quaternion& operator-=(const Quaternion& r) {
        x0 -= r.x0;
        x1 -= r.x1;
        x2 -= r.x2;
        x3 -= r.x3;
        return *this;
    }
};

// Hamilton product; noncommutative.
constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.x0 * b.x0 - a.x1 * b.x1 - a.x2 * b.x2 - a.x3 * b.x3,
            a.x0 * b.x1 + a.x1 * b.x0 + a.x2 * b.x3 - a.x3 * b.x2,
            a.x0 * b.x2 - a.x1 * b.x3 + a.x2 * b.x0 + a.x3 * b.x1,
            a.x0 * b.x3 + a.x1 * b.x2 - a.x2 * b.x1 + a.x3 * b.x0};
}

constexpr Quaternion operator+(const Quaternion& a, const Quaternion& b) {
    return {a.x0 + b.x0, a.x1 + b.x1, a.x2 + b.x2, a.x3 + b.x3};
}

constexpr Quaternion operator-(const Quaternion& a, const Quaternion& b) {
    return {a.x0 - b.x0, a.x1 - b.x1, a.x2 - b.x2, a.x3 - b.x3};
}

constexpr Quaternion operator*(double s, const Quaternion& q) {
    return {s * q.x0, s * q.x1, s * q.x2, s * q.x3};
}

constexpr Quaternion operator*(const Quaternion& q, double s) { return s * q; }

constexpr bool operator==(const Quaternion& a, const Quaternion& b) {
    return a.x0 == b.x0 && a.x1 == b.x1 && a.x2 == b.x2 && a.x3 == b.x3;
}
constexpr bool operator!=(const Quaternion& a, const Quaternion& b) {
    return !(a == b);
}

inline Quaternion Quaternion::inverse() const {
    const double n2 = norm_sq();
    if (!(n2 >= 1e-300)) {
        throw DomainError("quaternion inverse: norm below underflow floor");
    }
    return (1.0 / n2) * conj();
}

// Textual form "x0,x1,x2,x3" used by CLI flags.
Quaternion parse_quaternion(const std::string& text);
std::string to_string(const Quaternion& q);
std::ostream& operator<<(std::ostream& os, const Quaternion& q);

} // namespace qzeta

#endif // QZETA_QUATERNION_HPP
