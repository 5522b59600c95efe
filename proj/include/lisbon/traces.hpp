#pragma once

#include <Eigen/Dense>

#include <complex>

#include "lisbon/contour.hpp"
#include "lisbon/entire_fn.hpp"
#include "lisbon/polyroots.hpp"
#include "lisbon/sigma_poly.hpp"

namespace lisbon {

/// Degree <= k-1 polynomial in z, coefficient of z^h at index h.
struct InterpolationPolynomial {
    Eigen::VectorXcd coeffs;

    int k() const { return static_cast<int>(coeffs.size()); }
    std::complex<double> eval(std::complex<double> z) const;
};

/// T(f)(sigma) = sum_j f(z_j) over the roots with multiplicity.
std::complex<double> trace_T(const EntireFn& f, const SigmaPoint& sigma);

/// Ttilde(f)(sigma) = sum_j f(z_j)/P'(z_j); requires simple roots.
std::complex<double> trace_form(const EntireFn& f, const SigmaPoint& sigma);

/// Component h is Ttilde(z^h f), h in [0, k-1].
Eigen::VectorXcd vector_trace(const EntireFn& f, const SigmaPoint& sigma);

/// Power sum N_m = sum_j z_j^m as an exact polynomial in sigma (Newton
/// identities); N_0 = k.
SigmaPoly newton_symbolic(int k, int m);

/// DN_m = Ttilde(z^{m+k-1}) via the coefficient recurrence of the
/// 1/P expansion at infinity; zero for m in [-k+1, -1].
SigmaPoly derived_newton_symbolic(int k, int m);

enum class TraceKind { T, Ttilde };

/// Exact trace of a polynomial input: sum of coefficients times N_j
/// (kind T) or DN_{j-k+1} (kind Ttilde).
SigmaPoly trace_poly_symbolic(const EntireFn& f, int k, TraceKind kind);

/// Lagrange interpolation polynomial of f at the roots of P_sigma,
/// coefficients extracted one contour integral each.
InterpolationPolynomial lagrange_interp(const EntireFn& f, const SigmaPoint& sigma,
                                        const QuadratureSpec& spec = {});

/// Q_f(sigma, z) with f = Pi_f + P_sigma * Q_f; requires |z| inside the
/// contour.
std::complex<double> quotient_eval(const EntireFn& f, const SigmaPoint& sigma,
                                   std::complex<double> z, const QuadratureSpec& spec = {});

/// Pi_h = sum_{p=0}^{k-h-1} (-1)^p sigma_p Phi_{k-p-h-1}, sigma_0 = 1.
InterpolationPolynomial phi_to_pi(const SigmaPoint& sigma, const Eigen::VectorXcd& phi);

/// Back-substitution inverse of phi_to_pi (unit-triangular system).
Eigen::VectorXcd pi_to_phi(const SigmaPoint& sigma, const InterpolationPolynomial& pi);

}  // namespace lisbon
