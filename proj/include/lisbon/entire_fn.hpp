#pragma once

#include <complex>
#include <string>
#include <vector>

#include "lisbon/gaussian_rational.hpp"

namespace lisbon {

/// Closed test-function family on C: an exact polynomial part (Gaussian
/// rational coefficients), a numeric polynomial correction, and a sum of
/// c * e^{a z} terms. Closed under d/dz and under the antiderivative
/// normalized by g(0) = 0.
class EntireFn {
  public:
    struct ExpTerm {
        std::complex<double> coeff;
        std::complex<double> rate;  // z -> coeff * z^power * e^{rate * z}, rate != 0
        int power = 0;
    };

    EntireFn() = default;

    static EntireFn polynomial(std::vector<GaussianRational> coeffs);
    /// z -> z^n.
    static EntireFn power(int n);
    /// z -> e^{a z}.
    static EntireFn exponential(std::complex<double> a);
    static EntireFn constant(GaussianRational c) { return polynomial({std::move(c)}); }

    /// Parses CLI f-specs "poly:c0,c1,..." (exact coefficients) or "exp:a".
    static EntireFn parse(const std::string& spec);

    bool is_exact_polynomial() const { return exps_.empty() && poly_num_.empty(); }
    const std::vector<GaussianRational>& poly_coeffs() const { return poly_; }

    std::complex<double> eval(std::complex<double> z) const;
    std::complex<double> operator()(std::complex<double> z) const { return eval(z); }

    /// Extended-precision evaluation for the contour quadratures.
    std::complex<long double> eval_l(std::complex<long double> z) const;

    EntireFn derivative() const;
    /// The primitive vanishing at 0.
    EntireFn antiderivative() const;

    EntireFn& operator+=(const EntireFn& o);
    friend EntireFn operator+(EntireFn a, const EntireFn& b) { return a += b; }
    friend EntireFn operator*(std::complex<double> c, EntireFn f);

    /// z -> z^n * f(z).
    EntireFn shifted_by_power(int n) const;

    std::string describe() const;

  private:
    std::vector<GaussianRational> poly_;       // exact track
    std::vector<std::complex<double>> poly_num_;  // numeric track
    std::vector<ExpTerm> exps_;

    void trim();
};

}  // namespace lisbon
