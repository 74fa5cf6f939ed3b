#include "qzeta/zeta.hpp"

#include <algorithm>
#include <cmath>

namespace qzeta {

namespace {

// Integer power with exact handling of negative exponents.
template <typename T>
T int_pow(T base, int e) {
    const bool inv = e < 0;
    unsigned k = static_cast<unsigned>(inv ? -e : e);
    T acc(1.0);
    T b = base;
    while (k) {
        if (k & 1u) acc *= b;
        b *= b;
        k >>= 1u;
    }
    return inv ? T(1.0) / acc : acc;
}

constexpr double kPoleFloor = 1e-12;

void require_complex_weights(const WeightAssignment& w, const char* where) {
    if (!w.all_complex()) {
        throw DomainError(std::string(where) +
                          ": weights must have zero j,k parts");
    }
}

// Complex simplex images of W, D_w and the weighted edge matrix.
struct ComplexWeighted {
    CMatrix vertex_weight;
    CMatrix out_weight;
    CMatrix edge;
};

ComplexWeighted complex_weighted(const Graph& g, const WeightAssignment& w) {
    const WeightedMatrices wm = matrices_weighted(g, w);
    return {wm.vertex_weight.simplex_part(), wm.out_weight.simplex_part(),
            edge_matrix(g, w).simplex_part()};
}

} // namespace

double max_edge_weight_norm(const Graph& g, const WeightAssignment& w) {
    const int a2m = g.arc_count();
    double best = 0.0;
    for (int e = 0; e < a2m; ++e)
        for (int f = 0; f < a2m; ++f)
            best = std::max(best, edge_weight(g, w, e, f).norm());
    return best;
}

double convergence_guard_bound(const Graph& g) {
    const double m = static_cast<double>(g.edge_count());
    return 1.0 / (8.0 * m * m);
}

double reciprocal_hashimoto(const Graph& g, const WeightAssignment& w,
                            Quaternion t) {
    if (!t.is_finite()) throw DomainError("reciprocal_hashimoto: t not finite");
    const int a2m = g.arc_count();
    QMatrix m(static_cast<std::size_t>(a2m), static_cast<std::size_t>(a2m));
    for (int e = 0; e < a2m; ++e) {
        for (int f = 0; f < a2m; ++f) {
            Quaternion v = -(t * edge_weight(g, w, e, f));
            if (e == f) v += Quaternion(1.0);
            m(static_cast<std::size_t>(e), static_cast<std::size_t>(f)) = v;
        }
    }
    return study_det(m);
}

double reciprocal_bass(const Graph& g, const WeightAssignment& w,
                       Quaternion t) {
    if (!t.is_finite()) throw DomainError("reciprocal_bass: t not finite");
    const int n = g.vertex_count();
    const int exponent = 2 * (g.edge_count() - n);
    const double one_minus_t2 = (Quaternion(1.0) - t * t).norm();
    if (exponent < 0 && one_minus_t2 <= kPoleFloor) {
        throw DomainError("reciprocal_bass: pole |1 - t^2| ~ 0 on a tree");
    }

    const WeightedMatrices wm = matrices_weighted(g, w);
    const Quaternion t2 = t * t;
    QMatrix inner = QMatrix::identity(static_cast<std::size_t>(n)) -
                    wm.vertex_weight.scaled_right(t) +
                    (wm.out_weight - QMatrix::identity(static_cast<std::size_t>(n)))
                        .scaled_right(t2);
    return int_pow(one_minus_t2, exponent) * study_det(inner);
}

ZetaReport check_identity(const Graph& g, const WeightAssignment& w,
                          Quaternion t, double tolerance) {
    ZetaReport report;
    report.t = t;
    report.tolerance = tolerance;
    report.near_pole = (Quaternion(1.0) - t * t).norm() < 1e-6;
    report.radius_warning =
        t.norm() * max_edge_weight_norm(g, w) >= convergence_guard_bound(g);

    try {
        report.hashimoto = reciprocal_hashimoto(g, w, t);
    } catch (const DomainError& e) {
        report.errors.push_back(std::string("hashimoto: ") + e.what());
    } catch (const NumericalError& e) {
        report.errors.push_back(std::string("hashimoto: ") + e.what());
    }
    try {
        report.bass = reciprocal_bass(g, w, t);
    } catch (const DomainError& e) {
        report.errors.push_back(std::string("bass: ") + e.what());
    } catch (const NumericalError& e) {
        report.errors.push_back(std::string("bass: ") + e.what());
    }

    if (report.hashimoto && report.bass) {
        const double a = *report.hashimoto;
        const double b = *report.bass;
        report.discrepancy = std::abs(a - b) / std::max({1.0, a, b});
        report.pass = *report.discrepancy <= tolerance;
    }
    return report;
}

ComplexZetaPair reciprocal_complex(const Graph& g, const WeightAssignment& w,
                                   cplx t) {
    require_complex_weights(w, "reciprocal_complex");
    const int n = g.vertex_count();
    const int exponent = g.edge_count() - n;
    const cplx one_minus_t2 = 1.0 - t * t;
    if (exponent < 0 && std::abs(one_minus_t2) <= kPoleFloor) {
        throw DomainError("reciprocal_complex: pole 1 - t^2 ~ 0 on a tree");
    }

    const ComplexWeighted cw = complex_weighted(g, w);
    ComplexZetaPair out;

    CMatrix inner = CMatrix::identity(static_cast<std::size_t>(n)) -
                    t * cw.vertex_weight +
                    (t * t) * (cw.out_weight -
                               CMatrix::identity(static_cast<std::size_t>(n)));
    out.bass = int_pow(one_minus_t2, exponent) * det(inner);

    const std::size_t a2m = static_cast<std::size_t>(g.arc_count());
    out.hashimoto = det(CMatrix::identity(a2m) - t * cw.edge);
    return out;
}

CharpolyPair charpoly_identity(const Graph& g, const WeightAssignment& w,
                               cplx lambda) {
    require_complex_weights(w, "charpoly_identity");
    if (std::abs(lambda) == 0.0) {
        throw DomainError("charpoly_identity: lambda must be nonzero");
    }
    const int n = g.vertex_count();
    const int exponent = g.edge_count() - n;
    const cplx l2m1 = lambda * lambda - 1.0;
    if (exponent < 0 && std::abs(l2m1) <= kPoleFloor) {
        throw DomainError("charpoly_identity: lambda^2 = 1 pole on a tree");
    }

    const ComplexWeighted cw = complex_weighted(g, w);
    const std::size_t a2m = static_cast<std::size_t>(g.arc_count());

    CharpolyPair out;
    out.left = det(lambda * CMatrix::identity(a2m) - cw.edge);
    CMatrix inner = (lambda * lambda) *
                        CMatrix::identity(static_cast<std::size_t>(n)) -
                    lambda * cw.vertex_weight +
                    (cw.out_weight -
                     CMatrix::identity(static_cast<std::size_t>(n)));
    out.right = int_pow(l2m1, exponent) * det(inner);
    return out;
}

double ihara_reciprocal(const Graph& g, double t) {
    const int n = g.vertex_count();
    const int exponent = g.edge_count() - n;
    const double one_minus_t2 = 1.0 - t * t;
    if (exponent < 0 && std::abs(one_minus_t2) <= kPoleFloor) {
        throw DomainError("ihara_reciprocal: pole 1 - t^2 ~ 0 on a tree");
    }
    const ClassicMatrices cm = matrices_classic(g);
    CMatrix inner = CMatrix::identity(static_cast<std::size_t>(n)) -
                    cplx(t) * cm.adjacency +
                    cplx(t * t) * (cm.degree -
                                   CMatrix::identity(static_cast<std::size_t>(n)));
    return int_pow(one_minus_t2, exponent) * det(inner).real();
}

} // namespace qzeta
