#include "doctest.h"

#include "qzeta/oracle.hpp"
#include "qzeta/qmatrix.hpp"
#include "test_support.hpp"

using namespace qzeta;
using namespace qzeta::testing;

namespace {
const Quaternion qi = Quaternion::unit_i();
const Quaternion qj = Quaternion::unit_j();
const Quaternion qk = Quaternion::unit_k();
} // namespace

TEST_CASE("complex adjoint fixtures") {
    CHECK(complex_adjoint(QMatrix{{qj}}) ==
          CMatrix{{0.0, -1.0}, {1.0, 0.0}});

    const Quaternion z(2, 3, 0, 0); // purely complex entry
    CHECK(complex_adjoint(QMatrix{{z}}) ==
          CMatrix{{cplx(2, 3), 0.0}, {0.0, cplx(2, -3)}});
}

TEST_CASE("complex adjoint is multiplicative") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const QMatrix M = random_qmatrix(rng, 2, 3);
        const QMatrix N = random_qmatrix(rng, 3, 2);
        const CMatrix lhs = complex_adjoint(M * N);
        const CMatrix rhs = complex_adjoint(M) * complex_adjoint(N);
        CHECK(max_abs(lhs - rhs) <= 1e-12);
    }
}

TEST_CASE("quaternionic matmul") {
    std::mt19937_64 rng(13);
    const QMatrix M = random_qmatrix(rng, 3, 3);
    CHECK(M * QMatrix::identity(3) == M);
    CHECK(QMatrix{{qi}} * QMatrix{{qj}} == QMatrix{{qk}});
    CHECK_THROWS_AS(random_qmatrix(rng, 2, 3) * random_qmatrix(rng, 2, 3),
                    ShapeError);
}

TEST_CASE("study determinant fixtures") {
    CHECK(study_det(QMatrix{{qj, Quaternion()}, {Quaternion(), qk}}) ==
          doctest::Approx(1.0).epsilon(1e-12));

    const Quaternion alpha(1, 1, 1, 1);
    const QMatrix scaled = QMatrix::identity(2).scaled_left(alpha);
    CHECK(study_det(scaled) == doctest::Approx(16.0).epsilon(1e-12));

    CHECK(study_det(QMatrix{{Quaternion(1.0), Quaternion(1.0)},
                            {Quaternion(1.0), Quaternion(1.0)}}) == 0.0);

    CHECK(study_det(QMatrix(0, 0)) == 1.0);
    CHECK_THROWS_AS(study_det(QMatrix(2, 3)), ShapeError);
}

TEST_CASE("triangular study determinant") {
    std::mt19937_64 rng(23);
    SUBCASE("diagonal") {
        QMatrix d(4, 4);
        double expect = 1.0;
        for (std::size_t i = 0; i < 4; ++i) {
            const Quaternion q = random_quaternion(rng);
            d(i, i) = q;
            expect *= q.norm_sq();
        }
        CHECK(study_det_triangular(d) == doctest::Approx(expect).epsilon(1e-12));
    }
    SUBCASE("unit diagonal upper") {
        QMatrix u = QMatrix::identity(3);
        u(0, 2) = random_quaternion(rng);
        u(1, 2) = random_quaternion(rng);
        CHECK(study_det_triangular(u) == doctest::Approx(1.0).epsilon(1e-12));
    }
    SUBCASE("agrees with the generic path") {
        for (int trial = 0; trial < 20; ++trial) {
            QMatrix u(4, 4);
            for (std::size_t r = 0; r < 4; ++r)
                for (std::size_t c = r; c < 4; ++c)
                    u(r, c) = random_quaternion(rng);
            CHECK(rel_err(study_det_triangular(u), study_det(u)) <= 1e-10);
            CHECK(rel_err(study_det_triangular(u.transpose()),
                          study_det(u.transpose())) <= 1e-10);
        }
    }
    SUBCASE("rejects non-triangular input") {
        QMatrix m = QMatrix::identity(3);
        m(0, 2) = qj;
        m(2, 0) = qi;
        CHECK_THROWS_AS(study_det_triangular(m), StructureError);
    }
}

TEST_CASE("study determinant axioms on random matrices") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 2 + static_cast<std::size_t>(trial % 3);
        const QMatrix M = random_qmatrix(rng, n, n);
        const QMatrix N = random_qmatrix(rng, n, n);
        const double sM = study_det(M);
        const double sN = study_det(N);

        CHECK(sM >= 0.0);
        // multiplicativity
        CHECK(rel_err(study_det(M * N), sM * sN) <= 1e-9);

        // adding a left multiple of one row to another keeps Sdet
        QMatrix rowop = M;
        const Quaternion q = random_quaternion(rng);
        for (std::size_t c = 0; c < n; ++c)
            rowop(0, c) += q * M(n - 1, c);
        CHECK(rel_err(study_det(rowop), sM) <= 1e-9);

        // scalar law with exponent 2n
        const Quaternion alpha = random_quaternion(rng);
        const double scale = std::pow(alpha.norm_sq(), static_cast<double>(n));
        CHECK(rel_err(study_det(M.scaled_left(alpha)), scale * sM) <= 1e-9);
        CHECK(rel_err(study_det(M.scaled_right(alpha)), scale * sM) <= 1e-9);
    }
}

TEST_CASE("sliding identity Sdet(I - AB) = Sdet(I - BA)") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 40; ++trial) {
        const QMatrix A = random_qmatrix(rng, 2, 4);
        const QMatrix B = random_qmatrix(rng, 4, 2);
        const double lhs = study_det(QMatrix::identity(2) - A * B);
        const double rhs = study_det(QMatrix::identity(4) - B * A);
        CHECK(rel_err(lhs, rhs) <= 1e-9);
    }
}

TEST_CASE("complex entries reduce to |det|^2") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 20; ++trial) {
        QMatrix M(3, 3);
        std::uniform_real_distribution<double> d(-1.0, 1.0);
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t c = 0; c < 3; ++c)
                M(r, c) = Quaternion(d(rng), d(rng), 0, 0);
        const cplx dc = det(M.simplex_part());
        CHECK(rel_err(study_det(M), std::norm(dc)) <= 1e-10);
    }
}

TEST_CASE("transpose can change the study determinant") {
    // Frozen witness from a randomized search over small integer entries.
    const QMatrix M{{Quaternion(0, 1, -1, -1), Quaternion(-1, -1, -1, 1)},
                    {Quaternion(1, -1, -1, 1), Quaternion(0, -1, 1, -1)}};
    const double direct = study_det(M);
    const double transposed = study_det(M.transpose());
    CHECK(direct == doctest::Approx(33.0).epsilon(1e-10));
    CHECK(transposed == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(std::abs(direct - transposed) > 1.0);
}

TEST_CASE("symplectic part round trip") {
    std::mt19937_64 rng(47);
    const QMatrix M = random_qmatrix(rng, 3, 5);
    const CMatrix S = M.simplex_part();
    const CMatrix P = M.perplex_part();
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 5; ++c)
            CHECK(Quaternion::from_symplectic(S(r, c), P(r, c)) == M(r, c));
}
