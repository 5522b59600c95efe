#include "lisbon/traces.hpp"

namespace lisbon {

std::complex<double> InterpolationPolynomial::eval(std::complex<double> z) const {
    std::complex<double> acc = 0.0;
    for (Eigen::Index i = coeffs.size(); i-- > 0;) acc = acc * z + coeffs(i);
    return acc;
}

std::complex<double> trace_T(const EntireFn& f, const SigmaPoint& sigma) {
    std::complex<double> acc = 0.0;
    for (auto z : roots(sigma)) acc += f(z);
    return acc;
}

std::complex<double> trace_form(const EntireFn& f, const SigmaPoint& sigma) {
    require_simple_roots(sigma);
    std::complex<double> acc = 0.0;
    for (auto z : roots(sigma)) acc += f(z) / p_eval(sigma, z, 1);
    return acc;
}

Eigen::VectorXcd vector_trace(const EntireFn& f, const SigmaPoint& sigma) {
    require_simple_roots(sigma);
    int k = sigma.k();
    auto zs = roots(sigma);
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(k);
    for (auto z : zs) {
        std::complex<double> base = f(z) / p_eval(sigma, z, 1);
        std::complex<double> zh = 1.0;
        for (int h = 0; h < k; ++h) {
            out(h) += base * zh;
            zh *= z;
        }
    }
    return out;
}

SigmaPoly newton_symbolic(int k, int m) {
    if (m < 0) throw IndexOutOfRange("newton_symbolic: m must be >= 0");
    // N_0 = k; N_m = sum_{i=1}^{m-1} (-1)^{i-1} s_i N_{m-i} + (-1)^{m-1} m s_m,
    // with s_i = 0 for i > k.
    std::vector<SigmaPoly> N;
    N.push_back(SigmaPoly::constant(k, GaussianRational(k)));
    for (int n = 1; n <= m; ++n) {
        SigmaPoly acc(k);
        for (int i = 1; i < n && i <= k; ++i) {
            GaussianRational sign(i % 2 ? 1L : -1L);
            acc += sign * (SigmaPoly::variable(k, i) * N[n - i]);
        }
        if (n <= k) {
            GaussianRational c(n % 2 ? static_cast<long>(n) : static_cast<long>(-n));
            acc += c * SigmaPoly::variable(k, n);
        }
        N.push_back(std::move(acc));
    }
    return N[m];
}

SigmaPoly derived_newton_symbolic(int k, int m) {
    if (m < -k + 1) throw IndexOutOfRange("derived_newton_symbolic: m must be >= -k+1");
    if (m < 0) return SigmaPoly(k);
    // c_0 = 1, c_j = -sum_{h=1}^{min(j,k)} (-1)^h s_h c_{j-h}; DN_m = c_m.
    std::vector<SigmaPoly> c;
    c.push_back(SigmaPoly::constant(k, GaussianRational(1)));
    for (int j = 1; j <= m; ++j) {
        SigmaPoly acc(k);
        for (int h = 1; h <= j && h <= k; ++h) {
            GaussianRational sign(h % 2 ? 1L : -1L);  // -(-1)^h
            acc += sign * (SigmaPoly::variable(k, h) * c[j - h]);
        }
        c.push_back(std::move(acc));
    }
    return c[m];
}

SigmaPoly trace_poly_symbolic(const EntireFn& f, int k, TraceKind kind) {
    if (!f.is_exact_polynomial())
        throw std::invalid_argument("trace_poly_symbolic: f must be the exact polynomial variant");
    SigmaPoly out(k);
    const auto& coeffs = f.poly_coeffs();
    for (size_t j = 0; j < coeffs.size(); ++j) {
        if (coeffs[j].is_zero()) continue;
        SigmaPoly base = (kind == TraceKind::T)
                             ? newton_symbolic(k, static_cast<int>(j))
                             : derived_newton_symbolic(k, static_cast<int>(j) - k + 1);
        out += coeffs[j] * base;
    }
    return out;
}

InterpolationPolynomial lagrange_interp(const EntireFn& f, const SigmaPoint& sigma,
                                        const QuadratureSpec& spec) {
    int k = sigma.k();
    double R = radius_bound(sigma);
    InterpolationPolynomial pi;
    pi.coeffs = Eigen::VectorXcd::Zero(k);
    for (int h = 0; h < k; ++h) {
        // gamma_h(zeta) = sum_{p=0}^{k-h-1} (-1)^p sigma_p zeta^{k-p-h-1}
        pi.coeffs(h) = circle_integral(
            [&](std::complex<double> zeta) {
                std::complex<double> gamma = 0.0;
                for (int p = 0; p <= k - h - 1; ++p) {
                    std::complex<double> sp = (p == 0) ? 1.0 : sigma[p];
                    std::complex<double> zp = 1.0;
                    for (int t = 0; t < k - p - h - 1; ++t) zp *= zeta;
                    gamma += (p % 2 ? -1.0 : 1.0) * sp * zp;
                }
                return f(zeta) * gamma / p_eval(sigma, zeta, 0);
            },
            R, spec);
    }
    return pi;
}

std::complex<double> quotient_eval(const EntireFn& f, const SigmaPoint& sigma,
                                   std::complex<double> z, const QuadratureSpec& spec) {
    double R = radius_bound(sigma);
    if (std::abs(z) >= R)
        throw std::invalid_argument("quotient_eval: z must lie inside the contour");
    return circle_integral(
        [&](std::complex<double> zeta) { return f(zeta) / ((zeta - z) * p_eval(sigma, zeta, 0)); },
        R, spec);
}

InterpolationPolynomial phi_to_pi(const SigmaPoint& sigma, const Eigen::VectorXcd& phi) {
    int k = sigma.k();
    InterpolationPolynomial pi;
    pi.coeffs = Eigen::VectorXcd::Zero(k);
    for (int h = 0; h < k; ++h) {
        std::complex<double> acc = 0.0;
        for (int p = 0; p <= k - h - 1; ++p) {
            std::complex<double> sp = (p == 0) ? 1.0 : sigma[p];
            acc += (p % 2 ? -1.0 : 1.0) * sp * phi(k - p - h - 1);
        }
        pi.coeffs(h) = acc;
    }
    return pi;
}

Eigen::VectorXcd pi_to_phi(const SigmaPoint& sigma, const InterpolationPolynomial& pi) {
    int k = sigma.k();
    Eigen::VectorXcd phi = Eigen::VectorXcd::Zero(k);
    // Pi_{k-j-1} = Phi_j + sum_{p=1}^{j} (-1)^p sigma_p Phi_{j-p}.
    for (int j = 0; j < k; ++j) {
        std::complex<double> acc = pi.coeffs(k - j - 1);
        for (int p = 1; p <= j; ++p) acc -= (p % 2 ? -1.0 : 1.0) * sigma[p] * phi(j - p);
        phi(j) = acc;
    }
    return phi;
}

}  // namespace lisbon
