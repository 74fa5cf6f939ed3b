#ifndef QZETA_QMATRIX_HPP
#define QZETA_QMATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "qzeta/cmatrix.hpp"
#include "qzeta/quaternion.hpp"

namespace qzeta {

// Dense row-major quaternionic matrix. Like CMatrix, operations allocate
// fresh results; values are safe to share across threads.
class QMatrix {
  public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    QMatrix(std::size_t rows, std::size_t cols, std::vector<Quaternion> data);
    QMatrix(std::initializer_list<std::initializer_list<Quaternion>> rows);

    static QMatrix identity(std::size_t n);
    // Lifts a complex matrix (zero perplex part everywhere).
    static QMatrix from_complex(const CMatrix& m);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Quaternion& operator()(std::size_t r, std::size_t c) {
        return data_[r * cols_ + c];
    }
    const Quaternion& operator()(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }

    const std::vector<Quaternion>& data() const { return data_; }

    // Symplectic decomposition M = simplex + j * perplex, entrywise.
    CMatrix simplex_part() const;
    CMatrix perplex_part() const;

    QMatrix transpose() const;

    // Left/right scaling by a quaternion scalar (order matters).
    QMatrix scaled_left(const Quaternion& s) const;
    QMatrix scaled_right(const Quaternion& s) const;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Quaternion> data_;
};

QMatrix operator+(const QMatrix& a, const QMatrix& b);
QMatrix operator-(const QMatrix& a, const QMatrix& b);
// Entrywise Hamilton-product accumulation; order-sensitive.
QMatrix operator*(const QMatrix& a, const QMatrix& b);
bool operator==(const QMatrix& a, const QMatrix& b);

// The 2r x 2c complex image [[S, -conj(P)], [P, conj(S)]] of M = S + j*P.
// Real-linear and multiplicative: complex_adjoint(MN) =
// complex_adjoint(M) * complex_adjoint(N).
CMatrix complex_adjoint(const QMatrix& m);

// Study determinant det(complex_adjoint(M)): real and nonnegative, zero
// exactly on singular matrices. The determinant of the complex image must
// come out real; a residue above 1e-8 * (1 + |det|) raises NumericalError,
// as does a negative real part below -1e-10 * (1 + |det|). Round-off in
// (-1e-10 * scale, 0) clamps to 0.
double study_det(const QMatrix& m);

// Fast path for triangular matrices: the product of squared diagonal norms.
// Triangularity (upper or lower) is verified exactly; StructureError otherwise.
double study_det_triangular(const QMatrix& m);

double max_norm(const QMatrix& m);

} // namespace qzeta

#endif // QZETA_QMATRIX_HPP
