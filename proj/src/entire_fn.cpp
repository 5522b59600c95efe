#include "lisbon/entire_fn.hpp"

#include <cmath>
#include <sstream>

namespace lisbon {

namespace {

std::complex<double> pow_int(std::complex<double> z, int n) {
    std::complex<double> r = 1.0;
    for (int i = 0; i < n; ++i) r *= z;
    return r;
}

std::complex<long double> pow_int_l(std::complex<long double> z, int n) {
    std::complex<long double> r = 1.0L;
    for (int i = 0; i < n; ++i) r *= z;
    return r;
}

std::complex<long double> widen(std::complex<double> z) {
    return {static_cast<long double>(z.real()), static_cast<long double>(z.imag())};
}

}  // namespace

void EntireFn::trim() {
    while (!poly_.empty() && poly_.back().is_zero()) poly_.pop_back();
    while (!poly_num_.empty() && std::abs(poly_num_.back()) == 0.0) poly_num_.pop_back();
    std::vector<ExpTerm> keep;
    for (const auto& t : exps_)
        if (std::abs(t.coeff) != 0.0) keep.push_back(t);
    exps_ = std::move(keep);
}

EntireFn EntireFn::polynomial(std::vector<GaussianRational> coeffs) {
    EntireFn f;
    f.poly_ = std::move(coeffs);
    f.trim();
    return f;
}

EntireFn EntireFn::power(int n) {
    std::vector<GaussianRational> c(n + 1);
    c[n] = GaussianRational(1);
    return polynomial(std::move(c));
}

EntireFn EntireFn::exponential(std::complex<double> a) {
    EntireFn f;
    f.exps_.push_back({1.0, a, 0});
    return f;
}

EntireFn EntireFn::parse(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos) throw ParseError("f-spec must be 'poly:c0,c1,...' or 'exp:a'");
    std::string kind = spec.substr(0, colon);
    std::string body = spec.substr(colon + 1);
    if (kind == "poly") {
        std::vector<GaussianRational> coeffs;
        std::stringstream ss(body);
        std::string tok;
        while (std::getline(ss, tok, ',')) coeffs.push_back(parse_gaussian_rational(tok));
        return polynomial(std::move(coeffs));
    }
    if (kind == "exp") {
        GaussianRational a = parse_gaussian_rational(body);
        return exponential(a.to_complex());
    }
    throw ParseError("unknown f-spec kind '" + kind + "'");
}

std::complex<double> EntireFn::eval(std::complex<double> z) const {
    std::complex<double> acc = 0.0;
    // Horner on each polynomial track.
    for (size_t i = poly_.size(); i-- > 0;) acc = acc * z + poly_[i].to_complex();
    std::complex<double> accn = 0.0;
    for (size_t i = poly_num_.size(); i-- > 0;) accn = accn * z + poly_num_[i];
    acc += accn;
    for (const auto& t : exps_) acc += t.coeff * pow_int(z, t.power) * std::exp(t.rate * z);
    return acc;
}

std::complex<long double> EntireFn::eval_l(std::complex<long double> z) const {
    std::complex<long double> acc = 0.0L;
    for (size_t i = poly_.size(); i-- > 0;)
        acc = acc * z + std::complex<long double>(static_cast<long double>(poly_[i].re),
                                                  static_cast<long double>(poly_[i].im));
    std::complex<long double> accn = 0.0L;
    for (size_t i = poly_num_.size(); i-- > 0;) accn = accn * z + widen(poly_num_[i]);
    acc += accn;
    for (const auto& t : exps_)
        acc += widen(t.coeff) * pow_int_l(z, t.power) * std::exp(widen(t.rate) * z);
    return acc;
}

EntireFn EntireFn::derivative() const {
    EntireFn d;
    if (poly_.size() > 1) {
        d.poly_.resize(poly_.size() - 1);
        for (size_t i = 1; i < poly_.size(); ++i)
            d.poly_[i - 1] = GaussianRational(static_cast<long>(i)) * poly_[i];
    }
    if (poly_num_.size() > 1) {
        d.poly_num_.resize(poly_num_.size() - 1);
        for (size_t i = 1; i < poly_num_.size(); ++i)
            d.poly_num_[i - 1] = static_cast<double>(i) * poly_num_[i];
    }
    for (const auto& t : exps_) {
        d.exps_.push_back({t.coeff * t.rate, t.rate, t.power});
        if (t.power > 0) d.exps_.push_back({t.coeff * static_cast<double>(t.power), t.rate, t.power - 1});
    }
    d.trim();
    return d;
}

EntireFn EntireFn::antiderivative() const {
    EntireFn g;
    g.poly_.resize(poly_.size() + 1);
    for (size_t i = 0; i < poly_.size(); ++i)
        g.poly_[i + 1] = poly_[i] / GaussianRational(static_cast<long>(i + 1));
    g.poly_num_.resize(poly_num_.empty() ? 0 : poly_num_.size() + 1);
    for (size_t i = 0; i < poly_num_.size(); ++i)
        g.poly_num_[i + 1] = poly_num_[i] / static_cast<double>(i + 1);
    // int z^p e^{az} dz = z^p e^{az}/a - (p/a) int z^{p-1} e^{az} dz
    for (auto t : exps_) {
        std::complex<double> c = t.coeff;
        for (int p = t.power; p >= 0; --p) {
            g.exps_.push_back({c / t.rate, t.rate, p});
            c = -c * static_cast<double>(p) / t.rate;
        }
    }
    // Normalize g(0) = 0 by a numeric constant when exponentials are present.
    std::complex<double> at0 = 0.0;
    for (const auto& t : g.exps_)
        if (t.power == 0) at0 += t.coeff;
    if (std::abs(at0) != 0.0) {
        if (g.poly_num_.empty()) g.poly_num_.resize(1, 0.0);
        g.poly_num_[0] -= at0;
    }
    g.trim();
    return g;
}

EntireFn& EntireFn::operator+=(const EntireFn& o) {
    if (poly_.size() < o.poly_.size()) poly_.resize(o.poly_.size());
    for (size_t i = 0; i < o.poly_.size(); ++i) poly_[i] += o.poly_[i];
    if (poly_num_.size() < o.poly_num_.size()) poly_num_.resize(o.poly_num_.size());
    for (size_t i = 0; i < o.poly_num_.size(); ++i) poly_num_[i] += o.poly_num_[i];
    exps_.insert(exps_.end(), o.exps_.begin(), o.exps_.end());
    trim();
    return *this;
}

EntireFn operator*(std::complex<double> c, EntireFn f) {
    EntireFn r;
    // Scaling by an arbitrary complex number moves the exact track to the
    // numeric one.
    r.poly_num_.resize(std::max(f.poly_.size(), f.poly_num_.size()), 0.0);
    for (size_t i = 0; i < f.poly_.size(); ++i) r.poly_num_[i] += c * f.poly_[i].to_complex();
    for (size_t i = 0; i < f.poly_num_.size(); ++i) r.poly_num_[i] += c * f.poly_num_[i];
    for (auto t : f.exps_) {
        t.coeff *= c;
        r.exps_.push_back(t);
    }
    r.trim();
    return r;
}

EntireFn EntireFn::shifted_by_power(int n) const {
    EntireFn r;
    if (!poly_.empty()) {
        r.poly_.resize(poly_.size() + n);
        for (size_t i = 0; i < poly_.size(); ++i) r.poly_[i + n] = poly_[i];
    }
    if (!poly_num_.empty()) {
        r.poly_num_.assign(poly_num_.size() + n, 0.0);
        for (size_t i = 0; i < poly_num_.size(); ++i) r.poly_num_[i + n] = poly_num_[i];
    }
    for (auto t : exps_) {
        t.power += n;
        r.exps_.push_back(t);
    }
    return r;
}

std::string EntireFn::describe() const {
    std::ostringstream os;
    os << "poly[";
    for (size_t i = 0; i < poly_.size(); ++i) {
        if (i) os << ",";
        os << to_string(poly_[i]);
    }
    os << "]";
    for (size_t i = 0; i < poly_num_.size(); ++i) os << " + num c" << i << "=" << poly_num_[i];
    for (const auto& t : exps_)
        os << " + " << t.coeff << "*z^" << t.power << "*exp(" << t.rate << "*z)";
    return os.str();
}

}  // namespace lisbon
