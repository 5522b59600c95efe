#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <string>

#include "lisbon/errors.hpp"

namespace lisbon {

using Rational = boost::multiprecision::cpp_rational;

/// Exact element of Q(i). cpp_rational keeps every component in lowest
/// terms with a positive denominator, so no extra normalization is needed.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(long n) : re(n) {}  // NOLINT: implicit by design
    GaussianRational(Rational r) : re(std::move(r)) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    std::complex<double> to_complex() const {
        return {static_cast<double>(re), static_cast<double>(im)};
    }

    GaussianRational operator-() const { return {-re, -im}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }

    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        Rational n = b.re * b.re + b.im * b.im;
        if (n == 0) throw std::domain_error("GaussianRational: division by zero");
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
};

std::string to_string(const Rational& r);

/// Renders "2", "-1/3", "i", "-2/5*i" or "(a+b*i)" for mixed values.
std::string to_string(const GaussianRational& c);

/// Parses the rendering produced by to_string. Accepts an optional leading
/// sign, "p", "p/q", "i", "p*i", "p/q*i" and the parenthesized mixed form.
GaussianRational parse_gaussian_rational(const std::string& text);

}  // namespace lisbon
