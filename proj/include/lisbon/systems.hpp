#pragma once

#include <Eigen/Dense>

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "lisbon/contour.hpp"
#include "lisbon/entire_fn.hpp"
#include "lisbon/polyroots.hpp"
#include "lisbon/report.hpp"
#include "lisbon/traces.hpp"
#include "lisbon/weyl.hpp"

namespace lisbon {

struct OperatorSystem {
    int k;
    std::string name;
    std::vector<std::pair<std::string, WeylOp>> generators;
};

/// S0 = {T(m)}, S1 = S0 + {A(p,q)}, S2 = {Ttilde(m)} + {A(p,q)} over the
/// index ranges p in [1,k-1], q in [2,k], m in [2,k].
OperatorSystem make_S0(int k);
OperatorSystem make_S1(int k);
OperatorSystem make_S2(int k);

struct KernelBasis {
    int k;
    long w;
    std::vector<SigmaPoly> basis;  // pure weight w, echelon-normalized
};

using VectorFunctional = std::function<Eigen::VectorXcd(const SigmaPoint&)>;

/// Exact residuals weyl_apply(G, g) per generator; pass iff all zero.
Report check_system_symbolic(const OperatorSystem& sys, const SigmaPoly& g);

/// Evaluates each generator on Fn via Cauchy-formula derivatives at the
/// samples; pass iff every |residual| < tol.
Report check_system_numeric(const OperatorSystem& sys, const SigmaFunctional& fn,
                            const std::vector<SigmaPoint>& samples, double tol = 1e-6,
                            const QuadratureSpec& spec = {});

/// Applies one operator to a sigma-functional numerically (operators of
/// differential order <= 2).
std::complex<double> apply_weyl_numeric(const WeylOp& op, const SigmaFunctional& fn,
                                        const SigmaPoint& sigma, const QuadratureSpec& spec = {});

/// (-1)^{k-h} d_h Phi = d_k (A^{k-h} Phi) for h in [1, k-1], numeric.
Report check_S3(const VectorFunctional& phi, const std::vector<SigmaPoint>& samples,
                double tol = 1e-6, const QuadratureSpec& spec = {});

/// Same system, exact SigmaPoly entries.
Report check_S3_symbolic(const std::vector<SigmaPoly>& phi);

/// Basis of the pure-weight-w polynomials annihilated by every generator,
/// exact rational elimination, deterministic echelon form.
KernelBasis graded_kernel(const OperatorSystem& sys, long w);

/// Exact kernel of U_{-1}^m restricted to the pure-weight-m space; the
/// report records the kernel dimension and passes iff it is zero.
Report u_minus1_injectivity(int k, int m);

/// Exact solution space of d_k(A^p Phi) = 0, p in [1,k-1], over constant
/// vectors; each basis vector has rational entries, index 0 first.
std::vector<std::vector<Rational>> constant_S3_solutions(int k);

/// (i) rows 1..k-1 of dA vanish structurally; (ii) the weighted 1-form
/// sum_h (-1)^{k-h-1} Phi_{k-h} dsigma_h is closed, numeric version.
Report closedness_check(const VectorFunctional& phi, const std::vector<SigmaPoint>& samples,
                        double tol = 1e-6, const QuadratureSpec& spec = {});

Report closedness_check_symbolic(const std::vector<SigmaPoly>& phi);

/// Checks d_h T(g) = (-1)^{k-h-1} Phi(f)_{k-h} with g the primitive of
/// (-1)^k f vanishing at 0.
Report reconstruct_trace_from_phi(const EntireFn& f, const std::vector<SigmaPoint>& samples,
                                  double tol = 1e-6, const QuadratureSpec& spec = {});

/// Exact variant of the same pipeline for f = z^n.
Report reconstruct_trace_symbolic(int k, int n);

/// Vector Lisbon integral of z^n as exact polynomials: component h is
/// DN_{n+h-k+1}.
std::vector<SigmaPoly> phi_symbolic_power(int k, int n);

/// Seeded sample grid with |sigma_h| <= max_mod and |Delta| > min_disc.
std::vector<SigmaPoint> make_sigma_samples(int k, int count, unsigned seed, double max_mod = 5.0,
                                           double min_disc = 1e-4);

/// Nullspace of an exact rational matrix (rows x cols), echelon basis,
/// first nonzero coordinate normalized to 1.
std::vector<std::vector<Rational>> rational_nullspace(std::vector<std::vector<Rational>> m,
                                                      int cols);

}  // namespace lisbon
