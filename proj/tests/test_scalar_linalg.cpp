#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "numrange/scalar_linalg.hpp"
#include "test_util.hpp"

using namespace numrange;
using namespace numrange::testutil;

TEST_CASE("eigenvalues2 on diagonal, nilpotent and rotation matrices") {
    auto eig = eigenvalues2({1.0, 0.0, 0.0, 2.0});
    CHECK(eig[0] == Complex(1.0, 0.0));
    CHECK(eig[1] == Complex(2.0, 0.0));

    eig = eigenvalues2({0.0, 1.0, 0.0, 0.0});
    CHECK(eig[0] == Complex(0.0, 0.0));
    CHECK(eig[1] == Complex(0.0, 0.0));

    eig = eigenvalues2({0.0, 1.0, -1.0, 0.0});
    CHECK(std::abs(eig[0] - Complex(0.0, -1.0)) < 1e-15);
    CHECK(std::abs(eig[1] - Complex(0.0, 1.0)) < 1e-15);
}

TEST_CASE("eigenvalues2 reproduces trace and determinant") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 2000; ++i) {
        const Matrix2 a = random_matrix(rng);
        const auto [l1, l2] = eigenvalues2(a);
        const double tol = 1e-12 * (1.0 + a.frobenius_norm());
        CHECK(std::abs(l1 + l2 - a.trace()) <= tol);
        CHECK(std::abs(l1 * l2 - a.det()) <= tol);
    }
}

TEST_CASE("operator_norm2 closed form") {
    CHECK(operator_norm2({1.0, 0.0, 0.0, 1.0}) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(operator_norm2({0.0, 2.0, 0.0, 0.0}) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(operator_norm2({1.0, 1.0, 0.0, 0.0}) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("operator_norm2 dominates |Ax| over random unit vectors") {
    std::mt19937_64 rng(11);
    for (int m = 0; m < 20; ++m) {
        const Matrix2 a = random_matrix(rng);
        const double nrm = operator_norm2(a);
        double best = 0.0;
        for (int i = 0; i < 10000; ++i) {
            const UnitVec v = random_unit_vector(rng);
            const Complex y1 = a.a11 * v.x1 + a.a12 * v.x2;
            const Complex y2 = a.a21 * v.x1 + a.a22 * v.x2;
            best = std::max(best, std::sqrt(std::norm(y1) + std::norm(y2)));
        }
        CHECK(best <= nrm + 1e-9);
        CHECK(best >= nrm - 1e-3);  // 1e4 samples get close to the sup
    }
}

TEST_CASE("lambda_max_hermitian2 closed form and dominance") {
    CHECK(lambda_max_hermitian2({1.0, 0.0, 0.0, 0.0}) == doctest::Approx(1.0));
    CHECK(lambda_max_hermitian2({1.0, 0.5, 0.5, 0.0}) ==
          doctest::Approx(0.5 * (1.0 + std::sqrt(2.0))).epsilon(1e-14));
    CHECK(lambda_max_hermitian2({0.0, Complex(0, 1), Complex(0, -1), 0.0}) ==
          doctest::Approx(1.0).epsilon(1e-14));

    CHECK_THROWS_AS(lambda_max_hermitian2({1.0, 1.0, 0.0, 0.0}), std::invalid_argument);

    std::mt19937_64 rng(13);
    for (int m = 0; m < 50; ++m) {
        const Matrix2 r = random_matrix(rng);
        const Matrix2 h{r.a11.real(), r.a12, std::conj(r.a12), r.a22.real()};
        const double lmax = lambda_max_hermitian2(h);
        for (int i = 0; i < 200; ++i) {
            const UnitVec v = random_unit_vector(rng);
            CHECK(quad_form(h, v).real() <= lmax + 1e-12);
        }
    }
}

TEST_CASE("real_roots_quadratic") {
    CHECK(real_roots_quadratic(1, 0, -1) == std::vector<double>{-1.0, 1.0});
    CHECK(real_roots_quadratic(1, 0, 1).empty());
    CHECK(real_roots_quadratic(1, -2, 1) == std::vector<double>{1.0});
    CHECK(real_roots_quadratic(0, 2, -4) == std::vector<double>{2.0});
    CHECK_THROWS_AS(real_roots_quadratic(0, 0, 0), std::invalid_argument);
    CHECK(real_roots_quadratic(0, 0, 5).empty());
}

TEST_CASE("real_roots_cubic worked roots") {
    auto r = real_roots_cubic(1, 0, -1, 0);
    REQUIRE(r.size() == 3);
    CHECK(r[0] == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(r[1] == doctest::Approx(0.0));
    CHECK(r[2] == doctest::Approx(1.0).epsilon(1e-12));

    r = real_roots_cubic(4, 0, -2.25, 0);
    REQUIRE(r.size() == 3);
    CHECK(r[0] == doctest::Approx(-0.75).epsilon(1e-12));
    CHECK(r[1] == doctest::Approx(0.0));
    CHECK(r[2] == doctest::Approx(0.75).epsilon(1e-12));

    r = real_roots_cubic(1, 0, 1, 0);
    REQUIRE(r.size() == 1);
    CHECK(r[0] == doctest::Approx(0.0));

    CHECK_THROWS_AS(real_roots_cubic(0, 0, 0, 0), std::invalid_argument);
}

TEST_CASE("polynomial root residuals on random coefficients") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> d(-10.0, 10.0);
    for (int i = 0; i < 2000; ++i) {
        const double c3 = d(rng), c2 = d(rng), c1 = d(rng), c0 = d(rng);
        const double maxc = std::max({std::abs(c3), std::abs(c2), std::abs(c1), std::abs(c0)});
        for (const double r : real_roots_cubic(c3, c2, c1, c0)) {
            const double p = ((c3 * r + c2) * r + c1) * r + c0;
            const double bound =
                1e-9 * std::max(1.0, maxc) * std::pow(std::max(1.0, std::abs(r)), 3);
            CHECK(std::abs(p) <= bound);
        }
        for (const double r : real_roots_quadratic(c2, c1, c0)) {
            const double p = (c2 * r + c1) * r + c0;
            CHECK(std::abs(p) <=
                  1e-9 * std::max(1.0, maxc) * std::pow(std::max(1.0, std::abs(r)), 3));
        }
    }
}

TEST_CASE("principal_sqrt branch") {
    CHECK(principal_sqrt(Complex(-1.0, 0.0)) == Complex(0.0, 1.0));
    CHECK(principal_sqrt(Complex(-1.0, -0.0)) == Complex(0.0, 1.0));
    CHECK(principal_sqrt(Complex(4.0, 0.0)) == Complex(2.0, 0.0));
    std::mt19937_64 rng(3);
    for (int i = 0; i < 500; ++i) {
        const Complex z = random_complex(rng, -5.0, 5.0);
        const Complex s = principal_sqrt(z);
        CHECK(s.real() >= 0.0);
        CHECK(std::abs(s * s - z) <= 1e-12 * (1.0 + std::abs(z)));
    }
}
