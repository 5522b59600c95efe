#pragma once

#include <Eigen/Dense>

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lisbon/gaussian_rational.hpp"

namespace lisbon {

using Exponents = std::vector<int>;

/// weight(sigma^gamma) = sum_h h*gamma_h (variables indexed from 1).
long exponent_weight(const Exponents& gamma);

/// Graded-lex order: lower weight first, then ascending lexicographic on
/// the exponent vector. Fixes rendering, hashing and evaluation order.
struct GradedLexLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

/// A point sigma in C^k, the coefficients of the monic polynomial
/// P_sigma(z) = sum_{h=0}^k (-1)^h sigma_h z^{k-h} with sigma_0 = 1.
struct SigmaPoint {
    Eigen::VectorXcd sigma;

    SigmaPoint() = default;
    explicit SigmaPoint(Eigen::VectorXcd v) : sigma(std::move(v)) {}
    SigmaPoint(std::initializer_list<std::complex<double>> v);

    int k() const { return static_cast<int>(sigma.size()); }
    std::complex<double> operator[](int h) const { return sigma(h - 1); }  // 1-based
};

/// Sparse exact polynomial in sigma_1..sigma_k over Q(i).
class SigmaPoly {
  public:
    using TermMap = std::map<Exponents, GaussianRational, GradedLexLess>;

    SigmaPoly() : k_(0) {}
    explicit SigmaPoly(int k) : k_(k) {}

    static SigmaPoly constant(int k, GaussianRational c);
    /// The variable sigma_h, 1 <= h <= k.
    static SigmaPoly variable(int k, int h);
    static SigmaPoly monomial(int k, Exponents gamma, GaussianRational c);

    int k() const { return k_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    /// Adds c * sigma^gamma, erasing the slot if the sum cancels.
    void add_term(const Exponents& gamma, const GaussianRational& c);

    SigmaPoly operator-() const;
    SigmaPoly& operator+=(const SigmaPoly& o);
    SigmaPoly& operator-=(const SigmaPoly& o);
    friend SigmaPoly operator+(SigmaPoly a, const SigmaPoly& b) { return a += b; }
    friend SigmaPoly operator-(SigmaPoly a, const SigmaPoly& b) { return a -= b; }
    friend SigmaPoly operator*(const SigmaPoly& a, const SigmaPoly& b);
    friend SigmaPoly operator*(const GaussianRational& c, SigmaPoly p);

    friend bool operator==(const SigmaPoly& a, const SigmaPoly& b) {
        return a.k_ == b.k_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const SigmaPoly& a, const SigmaPoly& b) { return !(a == b); }

    /// Formal partial derivative with respect to sigma_h, 1 <= h <= k.
    SigmaPoly partial(int h) const;

    /// Splits into pure-weight components, weights strictly increasing.
    std::vector<std::pair<long, SigmaPoly>> weight_decompose() const;

    /// The weight shared by all terms, or nullopt for mixed (0 is pure of any weight).
    std::optional<long> pure_weight() const;

    std::complex<double> eval(const SigmaPoint& at) const;

    std::string to_string() const;

  private:
    int k_;
    TermMap terms_;
};

/// All monomials of weight w in k variables, ascending lexicographic on gamma.
std::vector<SigmaPoly> monomial_basis(int k, long w);

/// Exponent vectors of monomial_basis in the same order.
std::vector<Exponents> weight_exponents(int k, long w);

/// Parses the canonical rendering of SigmaPoly::to_string (terms like
/// "2*s1^2*s3", "-1/2*s2", "i*s1").
SigmaPoly parse_sigma_poly(const std::string& text, int k);

void require_same_arity(int ka, int kb, const char* where);

}  // namespace lisbon
