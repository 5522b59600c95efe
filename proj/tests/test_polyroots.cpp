#include "doctest.h"

#include <random>

#include "lisbon/polyroots.hpp"

using namespace lisbon;

TEST_CASE("p_eval") {
    SigmaPoint pt{3.0, 2.0};
    CHECK(std::abs(p_eval(pt, 1.0, 0)) < 1e-14);
    CHECK(std::abs(p_eval(pt, 1.0, 1) - std::complex<double>(-1.0)) < 1e-14);
    SigmaPoint zero{0.0, 0.0, 0.0};
    CHECK(std::abs(p_eval(zero, 2.0, 0) - 8.0) < 1e-14);
}

TEST_CASE("radius bound") {
    CHECK(radius_bound(SigmaPoint{0.0, 0.0}) == 2.0);
    CHECK(radius_bound(SigmaPoint{3.0, 2.0}) == 8.0);
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> unif(-10, 10);
    for (int t = 0; t < 20; ++t) {
        SigmaPoint pt{Eigen::VectorXcd::Zero(3)};
        for (int i = 0; i < 3; ++i) pt.sigma(i) = {unif(rng), unif(rng)};
        double R = radius_bound(pt);
        for (auto z : roots(pt)) CHECK(std::abs(z) < R);
    }
}

TEST_CASE("roots") {
    auto z = roots(SigmaPoint{3.0, 2.0});
    REQUIRE(z.size() == 2);
    CHECK(std::abs(z[0] - 1.0) < 1e-10);
    CHECK(std::abs(z[1] - 2.0) < 1e-10);

    auto z0 = roots(SigmaPoint{0.0, 0.0, 0.0});
    for (auto r : z0) CHECK(std::abs(r) < 1e-3);  // triple root, linear convergence

    // P = z^4 - 1: sigma_4 = (-1)^3 * -1... coefficient of z^0 is (-1)^4 s4 = -1
    SigmaPoint unity{0.0, 0.0, 0.0, -1.0};
    auto z4 = roots(unity);
    for (auto r : z4) CHECK(std::abs(std::abs(r) - 1.0) < 1e-10);
    CHECK(std::abs(z4[0] + 1.0) < 1e-10);  // sorted: -1 first
}

TEST_CASE("vieta round trip") {
    std::mt19937 rng(9);
    std::uniform_real_distribution<double> unif(-10, 10);
    for (int k = 2; k <= 6; ++k)
        for (int t = 0; t < 10; ++t) {
            SigmaPoint pt{Eigen::VectorXcd::Zero(k)};
            for (int i = 0; i < k; ++i) pt.sigma(i) = {unif(rng), unif(rng)};
            auto z = roots(pt);
            // elementary symmetric functions of the roots reproduce sigma
            std::vector<std::complex<double>> e(k + 1, 0.0);
            e[0] = 1.0;
            for (int i = 0; i < k; ++i)
                for (int j = std::min(i + 1, k); j >= 1; --j) e[j] += z[i] * e[j - 1];
            for (int h = 1; h <= k; ++h)
                CHECK(std::abs(e[h] - pt[h]) < 1e-9 * (1.0 + std::abs(pt[h])));
        }
}

TEST_CASE("discriminant") {
    CHECK(std::abs(discriminant(SigmaPoint{3.0, 2.0}) - 1.0) < 1e-9);
    CHECK(std::abs(discriminant(SigmaPoint{0.0, 0.0})) < 1e-6);
    std::mt19937 rng(13);
    std::uniform_real_distribution<double> unif(-5, 5);
    for (int t = 0; t < 20; ++t) {
        std::complex<double> s1{unif(rng), unif(rng)}, s2{unif(rng), unif(rng)};
        SigmaPoint pt{s1, s2};
        CHECK(std::abs(discriminant(pt) - (s1 * s1 - 4.0 * s2)) < 1e-8);
    }
}

TEST_CASE("simple root guard") {
    CHECK_THROWS_AS(require_simple_roots(SigmaPoint{0.0, 0.0}), DegenerateRoots);
    CHECK_NOTHROW(require_simple_roots(SigmaPoint{3.0, 2.0}));
}

TEST_CASE("companion matrix layout") {
    SigmaPoint pt{3.0, 2.0};
    Eigen::MatrixXcd A = companion(pt);
    CHECK(A(0, 0) == std::complex<double>(0.0));
    CHECK(A(0, 1) == std::complex<double>(1.0));
    CHECK(A(1, 0) == std::complex<double>(-2.0));
    CHECK(A(1, 1) == std::complex<double>(3.0));
    // eigenvalues match the roots
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(A);
    auto ev = es.eigenvalues();
    CHECK(std::abs((ev(0) - 1.0) * (ev(0) - 2.0)) < 1e-9);
    CHECK(std::abs((ev(1) - 1.0) * (ev(1) - 2.0)) < 1e-9);

    PolyMatrix S = companion_symbolic(3);
    CHECK(S.at(2, 0) == SigmaPoly::variable(3, 3));
    CHECK(S.at(2, 1) == GaussianRational(-1L) * SigmaPoly::variable(3, 2));
    CHECK(S.at(2, 2) == SigmaPoly::variable(3, 1));
}

TEST_CASE("gamma powers") {
    CHECK(gamma_power(2, 0) == PolyMatrix::identity(2, 2));
    // Gamma_1 is the transpose of the companion layout
    CHECK(gamma_power(2, 1) == companion_symbolic(2).transpose());
    for (int k = 2; k <= 4; ++k)
        for (int i = 0; i <= 3; ++i)
            for (int j = 0; i + j <= 6; ++j)
                CHECK(gamma_power(k, i) * gamma_power(k, j) == gamma_power(k, i + j));
}

TEST_CASE("line equality of matrix powers") {
    for (int k = 2; k <= 5; ++k)
        for (int p = 1; p <= k; ++p)
            for (int q = 1; q <= k; ++q) {
                PolyMatrix gp = gamma_power(k, k - p);
                PolyMatrix gq = gamma_power(k, k - q);
                // With columns holding the reductions of z^{v+j}, column
                // (k-q) of Gamma_{k-p} and column (k-p) of Gamma_{k-q} are
                // both the coefficient vector of z^{2k-p-q}.
                for (int c = 0; c < k; ++c)
                    CHECK(gp.at(c, k - q) == gq.at(c, k - p));
            }
}

TEST_CASE("companion derivative identity") {
    for (int k = 2; k <= 5; ++k) {
        Report rep = companion_derivative_identity_check(k);
        CHECK(rep.pass);
    }
}
