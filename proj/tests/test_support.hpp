#ifndef QZETA_TEST_SUPPORT_HPP
#define QZETA_TEST_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

#include "qzeta/cmatrix.hpp"
#include "qzeta/qmatrix.hpp"
#include "qzeta/quaternion.hpp"

namespace qzeta::testing {

inline double rel_err(double a, double b) {
    return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

inline double rel_err(std::complex<double> a, std::complex<double> b) {
    return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

inline double component_dist(const Quaternion& a, const Quaternion& b) {
    return std::max({std::abs(a.x0 - b.x0), std::abs(a.x1 - b.x1),
                     std::abs(a.x2 - b.x2), std::abs(a.x3 - b.x3)});
}

inline Quaternion random_quaternion(std::mt19937_64& rng, double scale = 1.0) {
    std::uniform_real_distribution<double> d(-scale, scale);
    return {d(rng), d(rng), d(rng), d(rng)};
}

inline CMatrix random_cmatrix(std::mt19937_64& rng, std::size_t rows,
                              std::size_t cols, double scale = 1.0) {
    std::uniform_real_distribution<double> d(-scale, scale);
    CMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = {d(rng), d(rng)};
    return m;
}

inline QMatrix random_qmatrix(std::mt19937_64& rng, std::size_t rows,
                              std::size_t cols, double scale = 1.0) {
    QMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = random_quaternion(rng, scale);
    return m;
}

} // namespace qzeta::testing

#endif // QZETA_TEST_SUPPORT_HPP
