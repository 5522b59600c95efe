#pragma once

#include <Eigen/Dense>

#include <complex>
#include <functional>

#include "lisbon/entire_fn.hpp"
#include "lisbon/polyroots.hpp"
#include "lisbon/sigma_poly.hpp"

namespace lisbon {

struct QuadratureSpec {
    double tol = 1e-11;
    int m_start = 64;    // power of two
    int m_cap = 1 << 20;  // power of two
};

using Integrand = std::function<std::complex<double>(std::complex<double>)>;
using SigmaFunctional = std::function<std::complex<double>(const SigmaPoint&)>;

/// (1/2i pi) times the contour integral of g over |zeta| = R, trapezoidal
/// rule with node doubling until two successive estimates agree to
/// tol * (1 + |estimate|).
std::complex<double> circle_integral(const Integrand& g, double R, const QuadratureSpec& spec = {});

/// (1/2i pi) contour integral of f(z) P'/P over |z| = radius_bound(sigma).
std::complex<double> lisbon_F(const EntireFn& f, const SigmaPoint& sigma,
                              const QuadratureSpec& spec = {});

/// Kernel 1/P.
std::complex<double> lisbon_Ftilde(const EntireFn& f, const SigmaPoint& sigma,
                                   const QuadratureSpec& spec = {});

/// Moment vector (phi_0, ..., phi_{k-1}) with kernels z^h / P.
Eigen::VectorXcd lisbon_Phi(const EntireFn& f, const SigmaPoint& sigma,
                            const QuadratureSpec& spec = {});

/// Logarithmic route: -(1/2i pi) contour integral of f'(z) Log(P/z^k)
/// plus k f(0); agrees with lisbon_F.
std::complex<double> lisbon_F_log(const EntireFn& f, const SigmaPoint& sigma,
                                  const QuadratureSpec& spec = {});

/// Cauchy-formula first derivative d_h Fn(sigma), circle radius
/// 0.1 * (1 + |sigma_h|).
std::complex<double> sigma_partial(const SigmaFunctional& fn, const SigmaPoint& sigma, int h,
                                   const QuadratureSpec& spec = {});

/// Nested second derivative d_h d_q Fn(sigma); uses the one-circle
/// second-order kernel when h == q.
std::complex<double> sigma_partial2(const SigmaFunctional& fn, const SigmaPoint& sigma, int h,
                                    int q, const QuadratureSpec& spec = {});

}  // namespace lisbon
