#include "lisbon/sigma_poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace lisbon {

long exponent_weight(const Exponents& gamma) {
    long w = 0;
    for (size_t h = 0; h < gamma.size(); ++h) w += static_cast<long>(h + 1) * gamma[h];
    return w;
}

bool GradedLexLess::operator()(const Exponents& a, const Exponents& b) const {
    long wa = exponent_weight(a);
    long wb = exponent_weight(b);
    if (wa != wb) return wa < wb;
    return a < b;
}

SigmaPoint::SigmaPoint(std::initializer_list<std::complex<double>> v)
    : sigma(static_cast<Eigen::Index>(v.size())) {
    Eigen::Index i = 0;
    for (auto c : v) sigma(i++) = c;
}

void require_same_arity(int ka, int kb, const char* where) {
    if (ka != kb)
        throw MismatchedArity(std::string(where) + ": arity mismatch (" + std::to_string(ka) +
                              " vs " + std::to_string(kb) + ")");
}

SigmaPoly SigmaPoly::constant(int k, GaussianRational c) {
    SigmaPoly p(k);
    p.add_term(Exponents(k, 0), c);
    return p;
}

SigmaPoly SigmaPoly::variable(int k, int h) {
    if (h < 1 || h > k)
        throw IndexOutOfRange("SigmaPoly::variable: index " + std::to_string(h) +
                              " outside [1," + std::to_string(k) + "]");
    Exponents g(k, 0);
    g[h - 1] = 1;
    return monomial(k, g, GaussianRational(1));
}

SigmaPoly SigmaPoly::monomial(int k, Exponents gamma, GaussianRational c) {
    SigmaPoly p(k);
    p.add_term(gamma, c);
    return p;
}

void SigmaPoly::add_term(const Exponents& gamma, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(gamma);
    if (it == terms_.end()) {
        terms_.emplace(gamma, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SigmaPoly SigmaPoly::operator-() const {
    SigmaPoly r(k_);
    for (const auto& [g, c] : terms_) r.terms_.emplace(g, -c);
    return r;
}

SigmaPoly& SigmaPoly::operator+=(const SigmaPoly& o) {
    require_same_arity(k_, o.k_, "poly add");
    for (const auto& [g, c] : o.terms_) add_term(g, c);
    return *this;
}

SigmaPoly& SigmaPoly::operator-=(const SigmaPoly& o) {
    require_same_arity(k_, o.k_, "poly sub");
    for (const auto& [g, c] : o.terms_) add_term(g, -c);
    return *this;
}

SigmaPoly operator*(const SigmaPoly& a, const SigmaPoly& b) {
    require_same_arity(a.k_, b.k_, "poly mul");
    SigmaPoly r(a.k_);
    for (const auto& [ga, ca] : a.terms_)
        for (const auto& [gb, cb] : b.terms_) {
            Exponents g(ga);
            for (int i = 0; i < a.k_; ++i) g[i] += gb[i];
            r.add_term(g, ca * cb);
        }
    return r;
}

SigmaPoly operator*(const GaussianRational& c, SigmaPoly p) {
    if (c.is_zero()) return SigmaPoly(p.k());
    SigmaPoly r(p.k());
    for (const auto& [g, v] : p.terms_) r.add_term(g, c * v);
    return r;
}

SigmaPoly SigmaPoly::partial(int h) const {
    if (h < 1 || h > k_)
        throw IndexOutOfRange("partial: index " + std::to_string(h) + " outside [1," +
                              std::to_string(k_) + "]");
    SigmaPoly r(k_);
    for (const auto& [g, c] : terms_) {
        int e = g[h - 1];
        if (e == 0) continue;
        Exponents d(g);
        --d[h - 1];
        r.add_term(d, GaussianRational(e) * c);
    }
    return r;
}

std::vector<std::pair<long, SigmaPoly>> SigmaPoly::weight_decompose() const {
    std::map<long, SigmaPoly> parts;
    for (const auto& [g, c] : terms_) {
        long w = exponent_weight(g);
        auto [it, fresh] = parts.try_emplace(w, SigmaPoly(k_));
        (void)fresh;
        it->second.add_term(g, c);
    }
    std::vector<std::pair<long, SigmaPoly>> out;
    out.reserve(parts.size());
    for (auto& [w, p] : parts) out.emplace_back(w, std::move(p));
    return out;
}

std::optional<long> SigmaPoly::pure_weight() const {
    std::optional<long> w;
    for (const auto& [g, c] : terms_) {
        long tw = exponent_weight(g);
        if (!w)
            w = tw;
        else if (*w != tw)
            return std::nullopt;
    }
    return w;
}

std::complex<double> SigmaPoly::eval(const SigmaPoint& at) const {
    require_same_arity(k_, at.k(), "poly eval");
    std::complex<double> acc = 0.0;
    for (const auto& [g, c] : terms_) {
        std::complex<double> t = c.to_complex();
        for (int h = 0; h < k_; ++h)
            for (int e = 0; e < g[h]; ++e) t *= at.sigma(h);
        acc += t;
    }
    return acc;
}

std::string SigmaPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [g, c] : terms_) {
        std::string cs = lisbon::to_string(c);
        bool negated = cs[0] == '-';
        if (first) {
            if (negated) {
                os << "-";
                cs = cs.substr(1);
            }
        } else {
            os << (negated ? " - " : " + ");
            if (negated) cs = cs.substr(1);
        }
        first = false;
        bool constant_term = std::all_of(g.begin(), g.end(), [](int e) { return e == 0; });
        bool unit = cs == "1";
        if (unit && constant_term) {
            os << "1";
        } else {
            bool wrote = false;
            if (!unit || constant_term) {
                os << cs;
                wrote = true;
            }
            for (int h = 0; h < k_; ++h) {
                if (g[h] == 0) continue;
                if (wrote) os << "*";
                os << "s" << (h + 1);
                if (g[h] > 1) os << "^" << g[h];
                wrote = true;
            }
        }
    }
    return os.str();
}

std::vector<Exponents> weight_exponents(int k, long w) {
    std::vector<Exponents> out;
    Exponents g(k, 0);
    // Enumerate gamma in ascending lex order directly: recurse on position.
    auto rec = [&](auto&& self, int pos, long rem) -> void {
        if (pos == k) {
            if (rem == 0) out.push_back(g);
            return;
        }
        long step = pos + 1;
        for (long e = 0; e * step <= rem; ++e) {
            g[pos] = static_cast<int>(e);
            self(self, pos + 1, rem - e * step);
        }
        g[pos] = 0;
    };
    rec(rec, 0, w);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SigmaPoly> monomial_basis(int k, long w) {
    std::vector<SigmaPoly> out;
    for (const auto& g : weight_exponents(k, w))
        out.push_back(SigmaPoly::monomial(k, g, GaussianRational(1)));
    return out;
}

namespace {

// Splits "a + b - c" into signed chunks at top level (no parens nesting
// beyond coefficient groups).
std::vector<std::string> split_terms(const std::string& s) {
    std::vector<std::string> chunks;
    std::string cur;
    int depth = 0;
    for (size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (depth == 0 && (c == '+' || c == '-') && !cur.empty() && i > 0) {
            // A sign following '*', '^', '/' or another sign belongs to the term.
            char prev = cur.back();
            if (prev != '*' && prev != '^' && prev != '/' && prev != '+' && prev != '-') {
                chunks.push_back(cur);
                cur.clear();
            }
        }
        cur += c;
    }
    if (!cur.empty()) chunks.push_back(cur);
    return chunks;
}

}  // namespace

SigmaPoly parse_sigma_poly(const std::string& text, int k) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    SigmaPoly p(k);
    if (s.empty() || s == "0") return p;
    for (const std::string& chunk : split_terms(s)) {
        GaussianRational coeff(1);
        Exponents g(k, 0);
        size_t pos = 0;
        if (chunk[pos] == '+') ++pos;
        else if (chunk[pos] == '-') {
            coeff = -coeff;
            ++pos;
        }
        bool expect_factor = true;
        while (pos < chunk.size()) {
            if (chunk[pos] == '*') {
                ++pos;
                expect_factor = true;
                continue;
            }
            if (!expect_factor) throw ParseError("malformed term '" + chunk + "'");
            if (chunk[pos] == 's') {
                size_t j = pos + 1;
                while (j < chunk.size() && std::isdigit(static_cast<unsigned char>(chunk[j]))) ++j;
                int h = std::stoi(chunk.substr(pos + 1, j - pos - 1));
                if (h < 1 || h > k) throw ParseError("variable s" + std::to_string(h) + " out of range");
                int e = 1;
                pos = j;
                if (pos < chunk.size() && chunk[pos] == '^') {
                    size_t m = pos + 1;
                    while (m < chunk.size() && std::isdigit(static_cast<unsigned char>(chunk[m]))) ++m;
                    e = std::stoi(chunk.substr(pos + 1, m - pos - 1));
                    pos = m;
                }
                g[h - 1] += e;
            } else {
                // Coefficient factor: digits, 'i', or parenthesized group.
                size_t j = pos;
                if (chunk[j] == '(') {
                    int depth = 0;
                    do {
                        if (chunk[j] == '(') ++depth;
                        if (chunk[j] == ')') --depth;
                        ++j;
                    } while (j < chunk.size() && depth > 0);
                } else {
                    while (j < chunk.size() && chunk[j] != '*') ++j;
                }
                coeff *= parse_gaussian_rational(chunk.substr(pos, j - pos));
                pos = j;
            }
            expect_factor = false;
        }
        p.add_term(g, coeff);
    }
    return p;
}

}  // namespace lisbon
