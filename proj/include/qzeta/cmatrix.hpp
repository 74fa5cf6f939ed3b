#ifndef QZETA_CMATRIX_HPP
#define QZETA_CMATRIX_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "qzeta/errors.hpp"

namespace qzeta {

using cplx = std::complex<double>;

// Dense row-major complex matrix. Immutable in spirit: operations allocate
// fresh results, so concurrent reads are always safe.
class CMatrix {
  public:
    CMatrix() = default;
    CMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    CMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> data);
    CMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

    static CMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    cplx& operator()(std::size_t r, std::size_t c) {
        return data_[r * cols_ + c];
    }
    const cplx& operator()(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }

    const std::vector<cplx>& data() const { return data_; }

    CMatrix transpose() const;
    CMatrix conjugate() const; // entrywise complex conjugation

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> data_;
};

CMatrix operator+(const CMatrix& a, const CMatrix& b);
CMatrix operator-(const CMatrix& a, const CMatrix& b);
CMatrix operator*(const CMatrix& a, const CMatrix& b);
CMatrix operator*(cplx s, const CMatrix& m);
bool operator==(const CMatrix& a, const CMatrix& b);

// Assembles [[A, B], [C, D]] from conformable blocks.
CMatrix block2x2(const CMatrix& A, const CMatrix& B, const CMatrix& C,
                 const CMatrix& D);

// LU factorization with partial pivoting: perm applied to rows of the input
// reproduces lower * upper. perm_sign is the permutation parity (+1/-1).
struct LuFactors {
    CMatrix lower;
    CMatrix upper;
    std::vector<std::size_t> perm;
    int perm_sign = 1;
};
LuFactors lu_decompose(const CMatrix& m);

// Determinant via the pivoted LU above. det of the 0x0 matrix is 1.
cplx det(const CMatrix& m);

double max_abs(const CMatrix& m);

} // namespace qzeta

#endif // QZETA_CMATRIX_HPP
