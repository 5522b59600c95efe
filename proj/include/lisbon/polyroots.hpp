#pragma once

#include <Eigen/Dense>

#include <complex>
#include <vector>

#include "lisbon/report.hpp"
#include "lisbon/sigma_poly.hpp"

namespace lisbon {

/// Dense k x k matrix with exact SigmaPoly entries.
class PolyMatrix {
  public:
    PolyMatrix() : k_(0), n_(0) {}
    PolyMatrix(int k, int n) : k_(k), n_(n), entries_(n * n, SigmaPoly(k)) {}

    static PolyMatrix identity(int k, int n);

    int k() const { return k_; }
    int n() const { return n_; }
    SigmaPoly& at(int i, int j) { return entries_[i * n_ + j]; }
    const SigmaPoly& at(int i, int j) const { return entries_[i * n_ + j]; }

    PolyMatrix transpose() const;
    PolyMatrix partial(int h) const;

    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

    std::vector<SigmaPoly> apply(const std::vector<SigmaPoly>& v) const;

    Eigen::MatrixXcd eval(const SigmaPoint& at) const;

  private:
    int k_;
    int n_;
    std::vector<SigmaPoly> entries_;
};

/// P_sigma(z) for order 0, P'_sigma(z) for order 1; Horner evaluation.
std::complex<double> p_eval(const SigmaPoint& sigma, std::complex<double> z, int order = 0);

/// Extended-precision variant used inside the contour quadratures, where
/// the integrand can be many orders of magnitude larger than the result.
std::complex<long double> p_eval_l(const SigmaPoint& sigma, std::complex<long double> z,
                                   int order = 0);

/// Smallest R = 2^m (1 + max|sigma_h|), m >= 1, with
/// sum_h |sigma_h| R^{-h} <= 1/2. All roots lie in |z| < R and
/// |P_sigma(zeta)/zeta^k - 1| <= 1/2 on |zeta| = R.
double radius_bound(const SigmaPoint& sigma);

/// Durand-Kerner iteration; output sorted by real then imaginary part.
std::vector<std::complex<double>> roots(const SigmaPoint& sigma, double tol = 1e-12);

/// prod_{i<j} (z_i - z_j)^2 from the computed roots.
std::complex<double> discriminant(const SigmaPoint& sigma);

/// Minimum pairwise distance of the computed roots (infinity for k = 1).
double min_root_separation(const SigmaPoint& sigma);

/// Ensures the simple-root guard min distance > 1e-8 * radius_bound, else
/// throws DegenerateRoots.
void require_simple_roots(const SigmaPoint& sigma);

/// Matrix A of the first-order vector system: ones on the superdiagonal,
/// last row (s~_k, ..., s~_1) with s~_h = (-1)^{h-1} sigma_h.
Eigen::MatrixXcd companion(const SigmaPoint& sigma);
PolyMatrix companion_symbolic(int k);

/// Matrix of multiplication by z^j in the basis 1, z, ..., z^{k-1} of
/// C[sigma, z]/(P); Gamma_0 = I.
PolyMatrix gamma_power(int k, int j);

/// Exact verification of (-1)^{k+h} d_h(A) = (d_k A) A^{k-h} for
/// h in [1, k-1].
Report companion_derivative_identity_check(int k);

}  // namespace lisbon
