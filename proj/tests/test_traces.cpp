#include "doctest.h"

#include <cmath>
#include <random>

#include "lisbon/contour.hpp"
#include "lisbon/systems.hpp"
#include "lisbon/traces.hpp"

using namespace lisbon;
using cplx = std::complex<double>;

TEST_CASE("trace over roots") {
    SigmaPoint pt{3.0, 2.0};
    CHECK(std::abs(trace_T(EntireFn::power(1), pt) - 3.0) < 1e-12);
    CHECK(std::abs(trace_T(EntireFn::power(0), pt) - 2.0) < 1e-12);
    double e = std::exp(1.0);
    CHECK(std::abs(trace_T(EntireFn::exponential(1.0), pt) - (e + e * e)) < 1e-10);
}

TEST_CASE("trace form requires simple roots") {
    SigmaPoint pt{3.0, 2.0};
    CHECK(std::abs(trace_form(EntireFn::power(3), pt) - 7.0) < 1e-10);
    CHECK_THROWS_AS(trace_form(EntireFn::power(1), SigmaPoint{2.0, 1.0}), DegenerateRoots);
}

TEST_CASE("vector trace components") {
    SigmaPoint pt{cplx(1.0, 0.5), cplx(-2.0, 0.25)};
    EntireFn f = EntireFn::exponential(cplx(0.5, 0.1));
    Eigen::VectorXcd vt = vector_trace(f, pt);
    REQUIRE(vt.size() == 2);
    for (int h = 0; h < 2; ++h)
        CHECK(std::abs(vt(h) - trace_form(f.shifted_by_power(h), pt)) < 1e-12);
}

TEST_CASE("newton polynomials") {
    CHECK(newton_symbolic(2, 0) == SigmaPoly::constant(2, GaussianRational(2)));
    CHECK(newton_symbolic(2, 1) == parse_sigma_poly("s1", 2));
    CHECK(newton_symbolic(2, 2) == parse_sigma_poly("s1^2 - 2*s2", 2));
    CHECK(newton_symbolic(3, 3) == parse_sigma_poly("s1^3 - 3*s1*s2 + 3*s3", 3));
    // Truncation above k: N_3 for k=2 drops the sigma_3 term.
    CHECK(newton_symbolic(2, 3) == parse_sigma_poly("s1^3 - 3*s1*s2", 2));

    // Numeric oracle: power sums of the actual roots.
    std::mt19937 rng(61);
    std::uniform_real_distribution<double> unif(-3, 3);
    for (int k = 2; k <= 4; ++k)
        for (int t = 0; t < 5; ++t) {
            SigmaPoint pt{Eigen::VectorXcd::Zero(k)};
            for (int i = 0; i < k; ++i) pt.sigma(i) = {unif(rng), unif(rng)};
            for (int m = 0; m <= 6; ++m) {
                cplx sum = 0.0;
                for (auto z : roots(pt)) sum += std::pow(z, m);
                CHECK(std::abs(newton_symbolic(k, m).eval(pt) - sum) < 1e-7 * (1.0 + std::abs(sum)));
            }
        }
}

TEST_CASE("derived newton polynomials") {
    CHECK(derived_newton_symbolic(2, -1).is_zero());
    CHECK(derived_newton_symbolic(2, 0) == SigmaPoly::constant(2, GaussianRational(1)));
    CHECK(derived_newton_symbolic(2, 1) == parse_sigma_poly("s1", 2));
    CHECK(derived_newton_symbolic(2, 2) == parse_sigma_poly("s1^2 - s2", 2));
    CHECK(derived_newton_symbolic(3, -2).is_zero());
    CHECK(derived_newton_symbolic(3, 0) == SigmaPoly::constant(3, GaussianRational(1)));

    // DN_m = Ttilde(z^{m+k-1}) against the trace-form oracle.
    std::mt19937 rng(67);
    std::uniform_real_distribution<double> unif(-2, 2);
    for (int k = 2; k <= 4; ++k)
        for (int t = 0; t < 5; ++t) {
            SigmaPoint pt{Eigen::VectorXcd::Zero(k)};
            for (int i = 0; i < k; ++i) pt.sigma(i) = {unif(rng), unif(rng)};
            if (std::abs(discriminant(pt)) < 1e-3) continue;
            for (int m = -k + 1; m <= 5; ++m) {
                cplx oracle = trace_form(EntireFn::power(m + k - 1), pt);
                CHECK(std::abs(derived_newton_symbolic(k, m).eval(pt) - oracle) <
                      1e-6 * (1.0 + std::abs(oracle)));
            }
        }
}

TEST_CASE("symbolic trace of polynomial input") {
    // f = z: T-trace is N_1, Ttilde-trace is DN_{2-k}.
    EntireFn f = EntireFn::power(1);
    CHECK(trace_poly_symbolic(f, 2, TraceKind::T) == newton_symbolic(2, 1));
    CHECK(trace_poly_symbolic(f, 2, TraceKind::Ttilde) == derived_newton_symbolic(2, 0));
    // Mixed coefficients, cross-checked numerically.
    EntireFn g = EntireFn::polynomial({GaussianRational(2), GaussianRational(0),
                                       GaussianRational(Rational(-1, 2)), GaussianRational(1)});
    SigmaPoint pt{3.0, 2.0};
    CHECK(std::abs(trace_poly_symbolic(g, 2, TraceKind::T).eval(pt) - trace_T(g, pt)) < 1e-9);
    CHECK(std::abs(trace_poly_symbolic(g, 2, TraceKind::Ttilde).eval(pt) - trace_form(g, pt)) <
          1e-9);
}

TEST_CASE("lagrange interpolation") {
    SigmaPoint pt{3.0, 2.0};  // roots 1, 2
    // f of degree < k reproduces itself.
    EntireFn lin = EntireFn::polynomial({GaussianRational(5), GaussianRational(-2)});
    InterpolationPolynomial p = lagrange_interp(lin, pt);
    REQUIRE(p.k() == 2);
    CHECK(std::abs(p.coeffs(0) - 5.0) < 1e-9);
    CHECK(std::abs(p.coeffs(1) + 2.0) < 1e-9);
    // f = z^2 interpolates (1,1), (2,4): Pi = 3z - 2.
    InterpolationPolynomial q = lagrange_interp(EntireFn::power(2), pt);
    CHECK(std::abs(q.coeffs(0) + 2.0) < 1e-9);
    CHECK(std::abs(q.coeffs(1) - 3.0) < 1e-9);
    // Interpolation property at the roots for exp.
    EntireFn e = EntireFn::exponential(1.0);
    InterpolationPolynomial r = lagrange_interp(e, pt);
    for (auto z : roots(pt)) CHECK(std::abs(r.eval(z) - e.eval(z)) < 1e-9);
}

TEST_CASE("euclidean division by P") {
    SigmaPoint pt{3.0, 2.0};
    // z^2 = Pi + P * Q with Q = 1.
    CHECK(std::abs(quotient_eval(EntireFn::power(2), pt, cplx(0.3, 0.4)) - 1.0) < 1e-9);
    // Division identity at interior points for exp.
    EntireFn e = EntireFn::exponential(1.0);
    InterpolationPolynomial pi = lagrange_interp(e, pt);
    for (cplx z : {cplx(0.0, 0.0), cplx(1.5, 0.5), cplx(-2.0, 1.0)}) {
        cplx lhs = e.eval(z) - pi.eval(z) - p_eval(pt, z) * quotient_eval(e, pt, z);
        CHECK(std::abs(lhs) < 1e-9);
    }
}

TEST_CASE("phi to pi and back") {
    std::mt19937 rng(71);
    auto samples = make_sigma_samples(3, 4, 71);
    EntireFn e = EntireFn::exponential(1.0);
    for (const auto& pt : samples) {
        Eigen::VectorXcd phi = lisbon_Phi(e, pt);
        InterpolationPolynomial pi = phi_to_pi(pt, phi);
        // Eq. (5): the moment vector encodes the interpolation polynomial.
        InterpolationPolynomial direct = lagrange_interp(e, pt);
        CHECK((pi.coeffs - direct.coeffs).cwiseAbs().maxCoeff() < 1e-8);
        // Unit-triangular round trip.
        Eigen::VectorXcd back = pi_to_phi(pt, pi);
        CHECK((back - phi).cwiseAbs().maxCoeff() < 1e-12);
    }
}
