#ifndef QZETA_ZETA_HPP
#define QZETA_ZETA_HPP

#include <optional>
#include <string>
#include <vector>

#include "qzeta/graph.hpp"

namespace qzeta {

// Largest |entry| of the weighted edge matrix; with the arc-count m this
// drives the Euler-product convergence guard |t| * max < 1/(8 m^2).
double max_edge_weight_norm(const Graph& g, const WeightAssignment& w);
double convergence_guard_bound(const Graph& g);

// Study determinant of I - t * (weighted edge matrix), t acting from the
// left on every entry. Nonnegative real.
double reciprocal_hashimoto(const Graph& g, const WeightAssignment& w,
                            Quaternion t);

// Closed form |1 - t^2|^(2m-2n) * Sdet(I - W t + (D_w - I) t^2), with t and
// t^2 acting from the right. On trees the exponent is negative, so
// |1 - t^2| <= 1e-12 is a pole (DomainError).
double reciprocal_bass(const Graph& g, const WeightAssignment& w, Quaternion t);

struct ZetaReport {
    Quaternion t;
    std::optional<double> hashimoto;
    std::optional<double> bass;
    std::optional<double> discrepancy; // |a-b| / max(1, |a|, |b|)
    double tolerance = 1e-8;
    bool pass = false;
    bool near_pole = false;      // |1 - t^2| < 1e-6
    bool radius_warning = false; // outside the convergence guard radius
    std::vector<std::string> errors;
};

// Evaluates both reciprocals and compares. Numeric/domain failures are
// collected into the report; shape errors still propagate.
ZetaReport check_identity(const Graph& g, const WeightAssignment& w,
                          Quaternion t, double tolerance = 1e-8);

// Complex-weight specialization: both the closed form and the edge-matrix
// determinant, for cross-checking. Requires all weights complex.
struct ComplexZetaPair {
    cplx bass;
    cplx hashimoto;
};
ComplexZetaPair reciprocal_complex(const Graph& g, const WeightAssignment& w,
                                   cplx t);

// Both sides of the characteristic-polynomial identity
//   det(lambda I - (B_w - J0))
//     = (lambda^2 - 1)^(m-n) det(lambda^2 I - lambda W + (D_w - I)).
struct CharpolyPair {
    cplx left;
    cplx right;
};
CharpolyPair charpoly_identity(const Graph& g, const WeightAssignment& w,
                               cplx lambda);

// Classic unweighted reciprocal (1 - t^2)^(m-n) det(I - t A + t^2 (D - I)),
// real arithmetic.
double ihara_reciprocal(const Graph& g, double t);

} // namespace qzeta

#endif // QZETA_ZETA_HPP
