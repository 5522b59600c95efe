#include "doctest.h"

#include <cmath>

#include "lisbon/contour.hpp"
#include "lisbon/traces.hpp"

using namespace lisbon;
using cplx = std::complex<double>;

TEST_CASE("circle integral picks out residues") {
    auto one_over = [](cplx z) { return 1.0 / z; };
    CHECK(std::abs(circle_integral(one_over, 2.0) - 1.0) < 1e-12);
    CHECK(std::abs(circle_integral(one_over, 7.5) - 1.0) < 1e-12);

    for (int n : {-3, -2, 0, 1, 2}) {
        auto g = [n](cplx z) { return std::pow(z, n); };
        CHECK(std::abs(circle_integral(g, 2.0)) < 1e-10);
    }

    cplx a{0.3, -1.1};
    auto pole = [a](cplx z) { return std::exp(z) / (z - a); };
    CHECK(std::abs(circle_integral(pole, 3.0) - std::exp(a)) < 1e-10);
}

TEST_CASE("quadrature cap raises") {
    // A pole very close to the contour defeats a tiny node budget.
    auto g = [](cplx z) { return 1.0 / (z - cplx(1.9999, 0.0)); };
    QuadratureSpec tight;
    tight.m_cap = 128;
    CHECK_THROWS_AS(circle_integral(g, 2.0, tight), QuadratureNoConvergence);
}

TEST_CASE("lisbon F equals the trace on split sigma") {
    SigmaPoint pt{3.0, 2.0};  // roots 1, 2
    for (int n = 0; n <= 6; ++n) {
        double expected = 1.0 + std::pow(2.0, n);
        CHECK(std::abs(lisbon_F(EntireFn::power(n), pt) - expected) < 1e-9);
    }
    double e = std::exp(1.0);
    CHECK(std::abs(lisbon_F(EntireFn::exponential(1.0), pt) - (e + e * e)) < 1e-9);
}

TEST_CASE("lisbon Ftilde equals the trace form") {
    SigmaPoint pt{3.0, 2.0};  // P'(1) = -1, P'(2) = 1
    CHECK(std::abs(lisbon_Ftilde(EntireFn::power(3), pt) - 7.0) < 1e-9);
    double e = std::exp(1.0);
    CHECK(std::abs(lisbon_Ftilde(EntireFn::exponential(1.0), pt) - (e * e - e)) < 1e-9);
}

TEST_CASE("lisbon Phi moments") {
    // f = 1: component h is DN_{h-k+1}, so (0, ..., 0, 1).
    SigmaPoint pt{1.0, 1.0, 1.0};
    Eigen::VectorXcd phi = lisbon_Phi(EntireFn::constant(GaussianRational(1)), pt);
    REQUIRE(phi.size() == 3);
    CHECK(std::abs(phi(0)) < 1e-9);
    CHECK(std::abs(phi(1)) < 1e-9);
    CHECK(std::abs(phi(2) - 1.0) < 1e-9);

    // Components agree with the vector trace for exp.
    SigmaPoint split{3.0, 2.0};
    Eigen::VectorXcd p2 = lisbon_Phi(EntireFn::exponential(1.0), split);
    Eigen::VectorXcd vt = vector_trace(EntireFn::exponential(1.0), split);
    CHECK((p2 - vt).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("logarithmic route agrees with the kernel route") {
    SigmaPoint pts[] = {SigmaPoint{3.0, 2.0}, SigmaPoint{cplx(1.0, 1.0), cplx(0.0, -2.0)},
                        SigmaPoint{0.5, -1.0, 2.0}};
    for (const auto& pt : pts) {
        for (int n = 0; n <= 4; ++n) {
            EntireFn f = EntireFn::power(n);
            CHECK(std::abs(lisbon_F_log(f, pt) - lisbon_F(f, pt)) < 1e-8);
        }
        EntireFn e = EntireFn::exponential(cplx(0.7, 0.2));
        CHECK(std::abs(lisbon_F_log(e, pt) - lisbon_F(e, pt)) < 1e-8);
    }
}

TEST_CASE("sigma partials via Cauchy circles") {
    SigmaPoint pt{3.0, 2.0};
    SigmaFunctional f = [](const SigmaPoint& s) { return s[1] * s[1]; };
    CHECK(std::abs(sigma_partial(f, pt, 1) - 6.0) < 1e-8);
    CHECK(std::abs(sigma_partial(f, pt, 2)) < 1e-8);
    CHECK(std::abs(sigma_partial2(f, pt, 1, 1) - 2.0) < 1e-7);
    CHECK(std::abs(sigma_partial2(f, pt, 1, 2)) < 1e-7);

    SigmaFunctional g = [](const SigmaPoint& s) { return s[1] * s[2]; };
    CHECK(std::abs(sigma_partial2(g, pt, 1, 2) - 1.0) < 1e-7);
    CHECK(std::abs(sigma_partial2(g, pt, 2, 1) - 1.0) < 1e-7);

    // d_1 T(z^2) = d_1 N_2 = 2 sigma_1.
    SigmaFunctional trace = [](const SigmaPoint& s) { return trace_T(EntireFn::power(2), s); };
    CHECK(std::abs(sigma_partial(trace, pt, 1) - 6.0) < 1e-7);
    CHECK(std::abs(sigma_partial(trace, pt, 2) + 2.0) < 1e-7);
}
