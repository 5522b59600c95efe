#include "lisbon/polyroots.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

namespace lisbon {

PolyMatrix PolyMatrix::identity(int k, int n) {
    PolyMatrix m(k, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = SigmaPoly::constant(k, GaussianRational(1));
    return m;
}

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix r(k_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r.at(j, i) = at(i, j);
    return r;
}

PolyMatrix PolyMatrix::partial(int h) const {
    PolyMatrix r(k_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r.at(i, j) = at(i, j).partial(h);
    return r;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    require_same_arity(a.k_, b.k_, "PolyMatrix mul");
    PolyMatrix r(a.k_, a.n_);
    for (int i = 0; i < a.n_; ++i)
        for (int j = 0; j < a.n_; ++j) {
            SigmaPoly acc(a.k_);
            for (int t = 0; t < a.n_; ++t) acc += a.at(i, t) * b.at(t, j);
            r.at(i, j) = std::move(acc);
        }
    return r;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
    PolyMatrix r(a.k_, a.n_);
    for (int i = 0; i < a.n_; ++i)
        for (int j = 0; j < a.n_; ++j) r.at(i, j) = a.at(i, j) - b.at(i, j);
    return r;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.k_ != b.k_ || a.n_ != b.n_) return false;
    return a.entries_ == b.entries_;
}

std::vector<SigmaPoly> PolyMatrix::apply(const std::vector<SigmaPoly>& v) const {
    std::vector<SigmaPoly> out(n_, SigmaPoly(k_));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) out[i] += at(i, j) * v[j];
    return out;
}

Eigen::MatrixXcd PolyMatrix::eval(const SigmaPoint& at_pt) const {
    Eigen::MatrixXcd m(n_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) m(i, j) = at(i, j).eval(at_pt);
    return m;
}

std::complex<double> p_eval(const SigmaPoint& sigma, std::complex<double> z, int order) {
    int k = sigma.k();
    // Coefficient of z^{k-h} is (-1)^h sigma_h, sigma_0 = 1.
    if (order == 0) {
        std::complex<double> acc = 1.0;
        for (int h = 1; h <= k; ++h) acc = acc * z + (h % 2 ? -1.0 : 1.0) * sigma[h];
        return acc;
    }
    std::complex<double> acc = static_cast<double>(k);
    for (int h = 1; h <= k - 1; ++h)
        acc = acc * z + static_cast<double>(k - h) * (h % 2 ? -1.0 : 1.0) * sigma[h];
    return acc;
}

std::complex<long double> p_eval_l(const SigmaPoint& sigma, std::complex<long double> z,
                                   int order) {
    int k = sigma.k();
    auto coeff = [&](int h) {
        std::complex<double> s = sigma[h];
        return std::complex<long double>(s.real(), s.imag());
    };
    if (order == 0) {
        std::complex<long double> acc = 1.0L;
        for (int h = 1; h <= k; ++h) acc = acc * z + (h % 2 ? -1.0L : 1.0L) * coeff(h);
        return acc;
    }
    std::complex<long double> acc = static_cast<long double>(k);
    for (int h = 1; h <= k - 1; ++h)
        acc = acc * z + static_cast<long double>(k - h) * (h % 2 ? -1.0L : 1.0L) * coeff(h);
    return acc;
}

double radius_bound(const SigmaPoint& sigma) {
    int k = sigma.k();
    double maxmod = 0.0;
    for (int h = 1; h <= k; ++h) maxmod = std::max(maxmod, std::abs(sigma[h]));
    double R = 2.0 * (1.0 + maxmod);
    for (;;) {
        double s = 0.0;
        double p = 1.0;
        for (int h = 1; h <= k; ++h) {
            p /= R;
            s += std::abs(sigma[h]) * p;
        }
        if (s <= 0.5) return R;
        R *= 2.0;
    }
}

std::vector<std::complex<double>> roots(const SigmaPoint& sigma, double tol) {
    int k = sigma.k();
    double R = radius_bound(sigma);
    std::vector<std::complex<double>> z(k);
    std::complex<double> seed(0.4, 0.9);
    std::complex<double> p = 1.0;
    for (int j = 0; j < k; ++j) {
        p *= seed;
        z[j] = 0.5 * R * p;
    }
    const int cap = 500;
    bool converged = false;
    for (int it = 0; it < cap && !converged; ++it) {
        double max_step = 0.0;
        for (int i = 0; i < k; ++i) {
            std::complex<double> denom = 1.0;
            for (int j = 0; j < k; ++j)
                if (j != i) denom *= z[i] - z[j];
            std::complex<double> step = p_eval(sigma, z[i]) / denom;
            z[i] -= step;
            max_step = std::max(max_step, std::abs(step));
        }
        converged = max_step < 1e-13 * R;
    }
    double bound = tol * std::pow(std::max(1.0, R), k);
    for (int i = 0; i < k; ++i)
        if (!(std::abs(p_eval(sigma, z[i])) <= bound))
            throw NoConvergence("root iteration did not reach the residual bound");
    std::sort(z.begin(), z.end(), [](std::complex<double> a, std::complex<double> b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return z;
}

std::complex<double> discriminant(const SigmaPoint& sigma) {
    auto z = roots(sigma);
    std::complex<double> d = 1.0;
    for (size_t i = 0; i < z.size(); ++i)
        for (size_t j = i + 1; j < z.size(); ++j) {
            std::complex<double> diff = z[i] - z[j];
            d *= diff * diff;
        }
    return d;
}

double min_root_separation(const SigmaPoint& sigma) {
    auto z = roots(sigma);
    double m = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < z.size(); ++i)
        for (size_t j = i + 1; j < z.size(); ++j) m = std::min(m, std::abs(z[i] - z[j]));
    return m;
}

void require_simple_roots(const SigmaPoint& sigma) {
    if (sigma.k() < 2) return;
    if (min_root_separation(sigma) <= 1e-8 * radius_bound(sigma))
        throw DegenerateRoots("near-multiple roots: trace form is ill-conditioned");
}

Eigen::MatrixXcd companion(const SigmaPoint& sigma) {
    int k = sigma.k();
    Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(k, k);
    for (int i = 0; i + 1 < k; ++i) A(i, i + 1) = 1.0;
    for (int j = 0; j < k; ++j) {
        int h = k - j;
        A(k - 1, j) = (h % 2 ? 1.0 : -1.0) * sigma[h];
    }
    return A;
}

PolyMatrix companion_symbolic(int k) {
    PolyMatrix A(k, k);
    for (int i = 0; i + 1 < k; ++i) A.at(i, i + 1) = SigmaPoly::constant(k, GaussianRational(1));
    for (int j = 0; j < k; ++j) {
        int h = k - j;  // entry (k-1, j) holds s~_{k-j}
        A.at(k - 1, j) = GaussianRational(h % 2 ? 1L : -1L) * SigmaPoly::variable(k, h);
    }
    return A;
}

PolyMatrix gamma_power(int k, int j) {
    // Column v of Gamma_j is the reduction of z^{v+j} modulo P in the
    // basis 1, z, ..., z^{k-1}. Reduce with z^k = sum_h s~_h z^{k-h}.
    std::vector<std::vector<SigmaPoly>> zpow;  // zpow[n][u] = coeff of z^u in z^n mod P
    zpow.reserve(k + j);
    for (int n = 0; n < k; ++n) {
        std::vector<SigmaPoly> e(k, SigmaPoly(k));
        e[n] = SigmaPoly::constant(k, GaussianRational(1));
        zpow.push_back(std::move(e));
    }
    for (int n = k; n < k + j; ++n) {
        const auto& prev = zpow[n - 1];
        std::vector<SigmaPoly> cur(k, SigmaPoly(k));
        // multiply by z: shift, then reduce the overflow prev[k-1]*z^k
        for (int u = 1; u < k; ++u) cur[u] = prev[u - 1];
        for (int h = 1; h <= k; ++h)
            cur[k - h] += (GaussianRational(h % 2 ? 1L : -1L) * SigmaPoly::variable(k, h)) * prev[k - 1];
        zpow.push_back(std::move(cur));
    }
    PolyMatrix G(k, k);
    for (int v = 0; v < k; ++v)
        for (int u = 0; u < k; ++u) G.at(u, v) = zpow[v + j][u];
    return G;
}

Report companion_derivative_identity_check(int k) {
    auto start = std::chrono::steady_clock::now();
    Report rep;
    rep.check = "companion_derivative_identity";
    rep.params["k"] = std::to_string(k);
    PolyMatrix A = companion_symbolic(k);
    PolyMatrix dkA = A.partial(k);
    bool ok = true;
    PolyMatrix Apow = PolyMatrix::identity(k, k);  // A^0
    std::vector<PolyMatrix> powers{Apow};
    for (int p = 1; p <= k - 1; ++p) {
        Apow = Apow * A;
        powers.push_back(Apow);
    }
    for (int h = 1; h <= k - 1; ++h) {
        PolyMatrix lhs = A.partial(h);
        if (((k + h) % 2) != 0) {
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) lhs.at(i, j) = -lhs.at(i, j);
        }
        PolyMatrix rhs = dkA * powers[k - h];
        bool match = lhs == rhs;
        rep.params["h" + std::to_string(h)] = match ? "pass" : "fail";
        ok = ok && match;
    }
    rep.residual = ok ? 0.0 : 1.0;
    rep.tolerance = 0.0;
    rep.pass = ok;
    rep.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return rep;
}

}  // namespace lisbon
