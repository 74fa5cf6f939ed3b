#include "qzeta/qmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace qzeta {

namespace {

void require_same_shape(const QMatrix& a, const QMatrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ShapeError(std::string(op) + ": shapes " +
                         std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                         " and " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()) + " differ");
    }
}

} // namespace

QMatrix::QMatrix(std::size_t rows, std::size_t cols,
                 std::vector<Quaternion> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) {
        throw ShapeError("QMatrix: entry count does not match shape");
    }
}

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Quaternion>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) {
            throw ShapeError("QMatrix: ragged initializer");
        }
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Quaternion(1.0);
    return m;
}

QMatrix QMatrix::from_complex(const CMatrix& m) {
    QMatrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            out(r, c) = Quaternion(m(r, c).real(), m(r, c).imag(), 0.0, 0.0);
    return out;
}

CMatrix QMatrix::simplex_part() const {
    CMatrix out(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            out(r, c) = (*this)(r, c).simplex();
    return out;
}

CMatrix QMatrix::perplex_part() const {
    CMatrix out(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            out(r, c) = (*this)(r, c).perplex();
    return out;
}

QMatrix QMatrix::transpose() const {
    QMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    return out;
}

QMatrix QMatrix::scaled_left(const Quaternion& s) const {
    QMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = s * data_[i];
    return out;
}

QMatrix QMatrix::scaled_right(const Quaternion& s) const {
    QMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] * s;
    return out;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
    require_same_shape(a, b, "add");
    QMatrix out(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c) + b(r, c);
    return out;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
    require_same_shape(a, b, "sub");
    QMatrix out(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c) - b(r, c);
    return out;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    if (a.cols() != b.rows()) {
        throw ShapeError("qmatmul: inner dimensions " + std::to_string(a.cols()) +
                         " and " + std::to_string(b.rows()) + " differ");
    }
    QMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Quaternion& ark = a(r, k);
            if (ark.is_zero()) continue;
            for (std::size_t c = 0; c < b.cols(); ++c)
                out(r, c) += ark * b(k, c);
        }
    }
    return out;
}

bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.rows() == b.rows() && a.cols() == b.cols() && a.data() == b.data();
}

CMatrix complex_adjoint(const QMatrix& m) {
    const std::size_t r = m.rows(), c = m.cols();
    CMatrix out(2 * r, 2 * c);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < c; ++j) {
            const cplx s = m(i, j).simplex();
            const cplx p = m(i, j).perplex();
            out(i, j) = s;
            out(i, c + j) = -std::conj(p);
            out(r + i, j) = p;
            out(r + i, c + j) = std::conj(s);
        }
    }
    return out;
}

double study_det(const QMatrix& m) {
    if (!m.square()) {
        throw ShapeError("study_det: matrix is " + std::to_string(m.rows()) +
                         "x" + std::to_string(m.cols()) + ", need square");
    }
    const cplx d = det(complex_adjoint(m));
    const double scale = 1.0 + std::abs(d);
    if (std::abs(d.imag()) > 1e-8 * scale) {
        throw NumericalError("study_det: imaginary residue " +
                             std::to_string(d.imag()) + " exceeds tolerance");
    }
    double value = d.real();
    if (value < 0.0) {
        if (value < -1e-10 * scale) {
            throw NumericalError("study_det: negative value " +
                                 std::to_string(value) + " beyond round-off clamp");
        }
        value = 0.0;
    }
    return value;
}

double study_det_triangular(const QMatrix& m) {
    if (!m.square()) {
        throw ShapeError("study_det_triangular: need square matrix");
    }
    const std::size_t n = m.rows();
    bool upper = true, lower = true;
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            if (r > c && !m(r, c).is_zero()) upper = false;
            if (r < c && !m(r, c).is_zero()) lower = false;
        }
    }
    if (!upper && !lower) {
        throw StructureError("study_det_triangular: matrix is not triangular");
    }
    double prod = 1.0;
    for (std::size_t i = 0; i < n; ++i) prod *= m(i, i).norm_sq();
    return prod;
}

double max_norm(const QMatrix& m) {
    double best = 0.0;
    for (const Quaternion& q : m.data()) best = std::max(best, q.norm());
    return best;
}

} // namespace qzeta
