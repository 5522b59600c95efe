#include "doctest.h"

#include <cmath>

#include "lisbon/systems.hpp"

using namespace lisbon;
using cplx = std::complex<double>;

namespace {

// a == c*b for some nonzero Gaussian-rational scalar c.
bool proportional(const SigmaPoly& a, const SigmaPoly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    if (a.terms().size() != b.terms().size()) return false;
    GaussianRational ratio = a.terms().begin()->second / b.terms().begin()->second;
    for (const auto& [expo, coeff] : b.terms()) {
        auto it = a.terms().find(expo);
        if (it == a.terms().end() || it->second != ratio * coeff) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("system generator inventories") {
    OperatorSystem s0 = make_S0(3), s1 = make_S1(3), s2 = make_S2(3);
    CHECK(s0.generators.size() == 2);   // T(2), T(3)
    CHECK(s1.generators.size() == 6);   // + A(p,q), p in {1,2}, q in {2,3}
    CHECK(s2.generators.size() == 6);
    CHECK(s0.name == "S0");
    for (const auto& [label, op] : s1.generators) CHECK(make_generator(3, label) == op);
}

TEST_CASE("symbolic annihilation") {
    for (int k = 2; k <= 3; ++k) {
        OperatorSystem s1 = make_S1(k), s2 = make_S2(k);
        for (int m = 0; m <= 6; ++m) {
            CHECK(check_system_symbolic(s1, newton_symbolic(k, m)).pass);
            CHECK(check_system_symbolic(s2, derived_newton_symbolic(k, m)).pass);
        }
    }
    // Counterexample: Ttilde(2)[sigma_2] = 2 for k = 2.
    Report bad = check_system_symbolic(make_S2(2), SigmaPoly::variable(2, 2));
    CHECK(!bad.pass);
    // The offending generator leaves the exact residual Ttilde(2)[sigma_2] = 2.
    CHECK(bad.params.at("residual_Ttilde(2)") == "2");
}

TEST_CASE("numeric annihilation of the exponential trace") {
    auto samples = make_sigma_samples(2, 3, 11);
    SigmaFunctional trF = [](const SigmaPoint& s) {
        return lisbon_F(EntireFn::exponential(1.0), s);
    };
    CHECK(check_system_numeric(make_S1(2), trF, samples, 1e-6).pass);
    SigmaFunctional trFt = [](const SigmaPoint& s) {
        return lisbon_Ftilde(EntireFn::exponential(1.0), s);
    };
    CHECK(check_system_numeric(make_S2(2), trFt, samples, 1e-6).pass);
    // sigma_2 itself is not a trace form.
    SigmaFunctional s2fn = [](const SigmaPoint& s) { return s[2]; };
    CHECK(!check_system_numeric(make_S2(2), s2fn, samples, 1e-6).pass);
}

TEST_CASE("S3 numeric for the exponential moments") {
    for (int k = 2; k <= 3; ++k) {
        auto samples = make_sigma_samples(k, 3, 17);
        VectorFunctional phi = [](const SigmaPoint& s) {
            return lisbon_Phi(EntireFn::exponential(1.0), s);
        };
        CHECK(check_S3(phi, samples, 1e-6).pass);
        // A(sigma) Phi is again a solution (system stability).
        VectorFunctional aphi = [](const SigmaPoint& s) {
            return Eigen::VectorXcd(companion(s) * lisbon_Phi(EntireFn::exponential(1.0), s));
        };
        CHECK(check_S3(aphi, samples, 1e-5).pass);
    }
}

TEST_CASE("S3 symbolic for power moments and constants") {
    for (int k = 2; k <= 3; ++k) {
        for (int n = 0; n <= 5; ++n) CHECK(check_S3_symbolic(phi_symbolic_power(k, n)).pass);
        // Constant V = (0, ..., 0, 1).
        std::vector<SigmaPoly> v(k, SigmaPoly(k));
        v[k - 1] = SigmaPoly::constant(k, GaussianRational(1));
        CHECK(check_S3_symbolic(v).pass);
        // A Phi stays a solution, exactly.
        PolyMatrix A = companion_symbolic(k);
        CHECK(check_S3_symbolic(A.apply(phi_symbolic_power(k, 3))).pass);
        // A generic constant vector is not a solution for k >= 2.
        std::vector<SigmaPoly> w(k, SigmaPoly::constant(k, GaussianRational(1)));
        CHECK(!check_S3_symbolic(w).pass);
    }
}

TEST_CASE("graded kernels") {
    KernelBasis b = graded_kernel(make_S2(2), 2);
    REQUIRE(b.basis.size() == 1);
    CHECK(proportional(b.basis[0], derived_newton_symbolic(2, 2)));
    KernelBasis c = graded_kernel(make_S0(2), 2);
    REQUIRE(c.basis.size() == 1);
    CHECK(proportional(c.basis[0], newton_symbolic(2, 2)));
    KernelBasis z = graded_kernel(make_S2(2), 0);
    REQUIRE(z.basis.size() == 1);
    CHECK(proportional(z.basis[0], SigmaPoly::constant(2, GaussianRational(1))));

    for (int k = 2; k <= 3; ++k)
        for (long w = 1; w <= 5; ++w) {
            KernelBasis s2b = graded_kernel(make_S2(k), w);
            REQUIRE(s2b.basis.size() == 1);
            CHECK(proportional(s2b.basis[0], derived_newton_symbolic(k, static_cast<int>(w))));
            KernelBasis s0b = graded_kernel(make_S0(k), w);
            REQUIRE(s0b.basis.size() == 1);
            CHECK(proportional(s0b.basis[0], newton_symbolic(k, static_cast<int>(w))));
            KernelBasis s1b = graded_kernel(make_S1(k), w);
            REQUIRE(s1b.basis.size() == 1);
            CHECK(proportional(s1b.basis[0], newton_symbolic(k, static_cast<int>(w))));
        }
}

TEST_CASE("U-1 power kernel on the weight-m piece") {
    // m = 1 is injective: U_{-1}[lambda sigma_1] = k lambda.
    for (int k = 1; k <= 4; ++k) CHECK(u_minus1_injectivity(k, 1).pass);
    CHECK(u_minus1_injectivity(1, 2).pass);
    // For k >= 2, m >= 2 the kernel is nontrivial: the translation
    // invariant sigma_1^2 - 4 sigma_2 (k = 2) is killed by U_{-1} itself.
    SigmaPoly inv = parse_sigma_poly("s1^2 - 4*s2", 2);
    CHECK(weyl_apply(make_U_minus1(2), inv).is_zero());
    Report r = u_minus1_injectivity(2, 2);
    CHECK(!r.pass);
    CHECK(r.params.at("kernel_dim") == "1");
}

TEST_CASE("constant solutions of S3") {
    for (int k = 1; k <= 4; ++k) {
        auto sols = constant_S3_solutions(k);
        REQUIRE(sols.size() == 1);
        for (int i = 0; i < k; ++i)
            CHECK(sols[0][i] == (i == k - 1 ? Rational(1) : Rational(0)));
    }
}

TEST_CASE("closedness of the moment one-form") {
    for (int k = 2; k <= 3; ++k)
        for (int n = 0; n <= 4; ++n)
            CHECK(closedness_check_symbolic(phi_symbolic_power(k, n)).pass);
    auto samples = make_sigma_samples(2, 2, 29);
    VectorFunctional phi = [](const SigmaPoint& s) {
        return lisbon_Phi(EntireFn::exponential(1.0), s);
    };
    CHECK(closedness_check(phi, samples, 1e-6).pass);
}

TEST_CASE("trace reconstruction from the moment vector") {
    for (int k = 2; k <= 3; ++k)
        for (int n = 0; n <= 4; ++n) CHECK(reconstruct_trace_symbolic(k, n).pass);
    auto samples = make_sigma_samples(2, 2, 31);
    CHECK(reconstruct_trace_from_phi(EntireFn::constant(GaussianRational(1)), samples, 1e-6).pass);
    CHECK(reconstruct_trace_from_phi(EntireFn::exponential(1.0), samples, 1e-6).pass);
}

TEST_CASE("sample grids are seeded and guarded") {
    auto a = make_sigma_samples(3, 5, 42);
    auto b = make_sigma_samples(3, 5, 42);
    auto c = make_sigma_samples(3, 5, 43);
    REQUIRE(a.size() == 5);
    bool identical = true, differs = false;
    for (int i = 0; i < 5; ++i) {
        identical = identical && (a[i].sigma - b[i].sigma).norm() == 0.0;
        differs = differs || (a[i].sigma - c[i].sigma).norm() != 0.0;
    }
    CHECK(identical);
    CHECK(differs);
    for (const auto& pt : a) {
        for (int h = 1; h <= 3; ++h) CHECK(std::abs(pt[h]) <= 5.0);
        CHECK(std::abs(discriminant(pt)) > 1e-4);
    }
}

TEST_CASE("rational nullspace") {
    // x + 2y - z = 0; 2x + 4y - 2z = 0 (dependent) -> dim 2.
    std::vector<std::vector<Rational>> m = {{1, 2, -1}, {2, 4, -2}};
    auto ns = rational_nullspace(m, 3);
    REQUIRE(ns.size() == 2);
    for (const auto& v : ns) CHECK(v[0] + 2 * v[1] - v[2] == 0);
    // Echelon normalization: each leading coordinate is 1.
    auto leading = [](const std::vector<Rational>& v) {
        for (const auto& x : v)
            if (x != 0) return x;
        return Rational(0);
    };
    CHECK(leading(ns[0]) == 1);
    CHECK(leading(ns[1]) == 1);
    // Full-rank system has empty nullspace.
    std::vector<std::vector<Rational>> id = {{1, 0}, {0, 1}};
    CHECK(rational_nullspace(id, 2).empty());
}
