#include "lisbon/contour.hpp"

#include <cmath>
#include <numbers>

namespace lisbon {

namespace {

using cplxl = std::complex<long double>;

// Extended-precision core: on large contours the integrand exceeds the
// result by many orders of magnitude, and double-precision node sums hit
// a roundoff floor above the advertised tolerances.
cplxl circle_integral_l(const std::function<cplxl(cplxl)>& g, double R,
                        const QuadratureSpec& spec) {
    constexpr long double two_pi = 6.283185307179586476925286766559005768L;
    auto estimate = [&](int m) {
        cplxl acc = 0.0L;
        for (int j = 0; j < m; ++j) {
            long double theta = two_pi * j / m;
            cplxl zeta = static_cast<long double>(R) * cplxl(std::cos(theta), std::sin(theta));
            acc += g(zeta) * zeta;
        }
        return acc / static_cast<long double>(m);
    };
    cplxl prev = estimate(spec.m_start);
    for (int m = 2 * spec.m_start; m <= spec.m_cap; m *= 2) {
        cplxl cur = estimate(m);
        if (std::abs(cur - prev) < spec.tol * (1.0L + std::abs(cur))) return cur;
        prev = cur;
    }
    throw QuadratureNoConvergence("circle_integral: node cap reached at R=" + std::to_string(R));
}

std::complex<double> narrow(cplxl z) {
    return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

}  // namespace

std::complex<double> circle_integral(const Integrand& g, double R, const QuadratureSpec& spec) {
    // (1/2i pi) \oint g dzeta = (1/M) sum_j g(zeta_j) zeta_j on
    // equispaced nodes; summation in index order for reproducibility.
    auto estimate = [&](int m) {
        std::complex<double> acc = 0.0;
        for (int j = 0; j < m; ++j) {
            double theta = 2.0 * std::numbers::pi * j / m;
            std::complex<double> zeta = R * std::complex<double>(std::cos(theta), std::sin(theta));
            acc += g(zeta) * zeta;
        }
        return acc / static_cast<double>(m);
    };
    std::complex<double> prev = estimate(spec.m_start);
    for (int m = 2 * spec.m_start; m <= spec.m_cap; m *= 2) {
        std::complex<double> cur = estimate(m);
        if (std::abs(cur - prev) < spec.tol * (1.0 + std::abs(cur))) return cur;
        prev = cur;
    }
    throw QuadratureNoConvergence("circle_integral: node cap reached at R=" + std::to_string(R));
}

std::complex<double> lisbon_F(const EntireFn& f, const SigmaPoint& sigma,
                              const QuadratureSpec& spec) {
    double R = radius_bound(sigma);
    return narrow(circle_integral_l(
        [&](cplxl z) { return f.eval_l(z) * p_eval_l(sigma, z, 1) / p_eval_l(sigma, z, 0); }, R,
        spec));
}

std::complex<double> lisbon_Ftilde(const EntireFn& f, const SigmaPoint& sigma,
                                   const QuadratureSpec& spec) {
    double R = radius_bound(sigma);
    return narrow(circle_integral_l(
        [&](cplxl z) { return f.eval_l(z) / p_eval_l(sigma, z, 0); }, R, spec));
}

Eigen::VectorXcd lisbon_Phi(const EntireFn& f, const SigmaPoint& sigma,
                            const QuadratureSpec& spec) {
    int k = sigma.k();
    double R = radius_bound(sigma);
    Eigen::VectorXcd phi(k);
    for (int h = 0; h < k; ++h) {
        phi(h) = narrow(circle_integral_l(
            [&](cplxl z) {
                cplxl zh = 1.0L;
                for (int t = 0; t < h; ++t) zh *= z;
                return f.eval_l(z) * zh / p_eval_l(sigma, z, 0);
            },
            R, spec));
    }
    return phi;
}

std::complex<double> lisbon_F_log(const EntireFn& f, const SigmaPoint& sigma,
                                  const QuadratureSpec& spec) {
    int k = sigma.k();
    double R = radius_bound(sigma);
    EntireFn fp = f.derivative();
    // |P/z^k - 1| <= 1/2 on the contour, so the principal branch applies.
    cplxl integral = circle_integral_l(
        [&](cplxl z) {
            cplxl zk = 1.0L;
            for (int t = 0; t < k; ++t) zk *= z;
            return fp.eval_l(z) * std::log(p_eval_l(sigma, z, 0) / zk);
        },
        R, spec);
    return narrow(-integral) + static_cast<double>(k) * f(0.0);
}

std::complex<double> sigma_partial(const SigmaFunctional& fn, const SigmaPoint& sigma, int h,
                                   const QuadratureSpec& spec) {
    if (h < 1 || h > sigma.k()) throw IndexOutOfRange("sigma_partial: slot out of range");
    double r = 0.1 * (1.0 + std::abs(sigma[h]));
    return circle_integral(
        [&](std::complex<double> u) {
            SigmaPoint moved = sigma;
            moved.sigma(h - 1) += u;
            return fn(moved) / (u * u);
        },
        r, spec);
}

std::complex<double> sigma_partial2(const SigmaFunctional& fn, const SigmaPoint& sigma, int h,
                                    int q, const QuadratureSpec& spec) {
    if (h < 1 || h > sigma.k() || q < 1 || q > sigma.k())
        throw IndexOutOfRange("sigma_partial2: slot out of range");
    if (h == q) {
        // f''(a) = (2!/2i pi) \oint f(t)/(t-a)^3 dt on one circle.
        double r = 0.1 * (1.0 + std::abs(sigma[h]));
        return 2.0 * circle_integral(
                         [&](std::complex<double> u) {
                             SigmaPoint moved = sigma;
                             moved.sigma(h - 1) += u;
                             return fn(moved) / (u * u * u);
                         },
                         r, spec);
    }
    return sigma_partial(
        [&](const SigmaPoint& s) { return sigma_partial(fn, s, h, spec); }, sigma, q, spec);
}

}  // namespace lisbon
