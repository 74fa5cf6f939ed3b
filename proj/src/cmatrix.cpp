#include "qzeta/cmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace qzeta {

namespace {

void require_same_shape(const CMatrix& a, const CMatrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ShapeError(std::string(op) + ": shapes " +
                         std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                         " and " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()) + " differ");
    }
}

} // namespace

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) {
        throw ShapeError("CMatrix: entry count does not match shape");
    }
}

CMatrix::CMatrix(std::initializer_list<std::initializer_list<cplx>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) {
            throw ShapeError("CMatrix: ragged initializer");
        }
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

CMatrix CMatrix::transpose() const {
    CMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    return out;
}

CMatrix CMatrix::conjugate() const {
    CMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i)
        out.data_[i] = std::conj(data_[i]);
    return out;
}

CMatrix operator+(const CMatrix& a, const CMatrix& b) {
    require_same_shape(a, b, "add");
    CMatrix out(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c) + b(r, c);
    return out;
}

CMatrix operator-(const CMatrix& a, const CMatrix& b) {
    require_same_shape(a, b, "sub");
    CMatrix out(a.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c) - b(r, c);
    return out;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    if (a.cols() != b.rows()) {
        throw ShapeError("matmul: inner dimensions " + std::to_string(a.cols()) +
                         " and " + std::to_string(b.rows()) + " differ");
    }
    CMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const cplx ark = a(r, k);
            if (ark == cplx{}) continue;
            for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) += ark * b(k, c);
        }
    }
    return out;
}

CMatrix operator*(cplx s, const CMatrix& m) {
    CMatrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = s * m(r, c);
    return out;
}

bool operator==(const CMatrix& a, const CMatrix& b) {
    return a.rows() == b.rows() && a.cols() == b.cols() && a.data() == b.data();
}

CMatrix block2x2(const CMatrix& A, const CMatrix& B, const CMatrix& C,
                 const CMatrix& D) {
    if (A.rows() != B.rows() || C.rows() != D.rows() || A.cols() != C.cols() ||
        B.cols() != D.cols()) {
        throw ShapeError("block2x2: blocks do not conform");
    }
    CMatrix out(A.rows() + C.rows(), A.cols() + B.cols());
    for (std::size_t r = 0; r < A.rows(); ++r) {
        for (std::size_t c = 0; c < A.cols(); ++c) out(r, c) = A(r, c);
        for (std::size_t c = 0; c < B.cols(); ++c) out(r, A.cols() + c) = B(r, c);
    }
    for (std::size_t r = 0; r < C.rows(); ++r) {
        for (std::size_t c = 0; c < C.cols(); ++c) out(A.rows() + r, c) = C(r, c);
        for (std::size_t c = 0; c < D.cols(); ++c)
            out(A.rows() + r, A.cols() + c) = D(r, c);
    }
    return out;
}

LuFactors lu_decompose(const CMatrix& m) {
    if (!m.square()) {
        throw ShapeError("lu_decompose: matrix is " + std::to_string(m.rows()) +
                         "x" + std::to_string(m.cols()) + ", need square");
    }
    const std::size_t n = m.rows();
    CMatrix a = m; // working copy, overwritten with the factors
    LuFactors out;
    out.perm.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.perm[i] = i;

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        double best = std::abs(a(k, k));
        for (std::size_t r = k + 1; r < n; ++r) {
            const double cand = std::abs(a(r, k));
            if (cand > best) {
                best = cand;
                pivot = r;
            }
        }
        if (pivot != k) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(pivot, c));
            std::swap(out.perm[k], out.perm[pivot]);
            out.perm_sign = -out.perm_sign;
        }
        const cplx akk = a(k, k);
        if (akk == cplx{}) continue; // structurally singular column
        for (std::size_t r = k + 1; r < n; ++r) {
            const cplx f = a(r, k) / akk;
            a(r, k) = f;
            for (std::size_t c = k + 1; c < n; ++c) a(r, c) -= f * a(k, c);
        }
    }

    out.lower = CMatrix::identity(n);
    out.upper = CMatrix(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < r; ++c) out.lower(r, c) = a(r, c);
        for (std::size_t c = r; c < n; ++c) out.upper(r, c) = a(r, c);
    }
    return out;
}

cplx det(const CMatrix& m) {
    if (!m.square()) {
        throw ShapeError("det: matrix is " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + ", need square");
    }
    if (m.rows() == 0) return 1.0;
    const LuFactors f = lu_decompose(m);
    cplx d = static_cast<double>(f.perm_sign);
    for (std::size_t i = 0; i < m.rows(); ++i) d *= f.upper(i, i);
    return d;
}

double max_abs(const CMatrix& m) {
    double best = 0.0;
    for (const cplx& v : m.data()) best = std::max(best, std::abs(v));
    return best;
}

} // namespace qzeta
