#include "lisbon/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace lisbon {

WeylOp WeylOp::identity(int k) {
    WeylOp op(k);
    op.add_term(Exponents(k, 0), Exponents(k, 0), GaussianRational(1));
    return op;
}

WeylOp WeylOp::partial(int k, int h) {
    if (h < 1 || h > k)
        throw IndexOutOfRange("WeylOp::partial: index " + std::to_string(h) + " outside [1," +
                              std::to_string(k) + "]");
    WeylOp op(k);
    Exponents beta(k, 0);
    beta[h - 1] = 1;
    op.add_term(Exponents(k, 0), beta, GaussianRational(1));
    return op;
}

WeylOp WeylOp::sigma(int k, int h) {
    if (h < 1 || h > k)
        throw IndexOutOfRange("WeylOp::sigma: index " + std::to_string(h) + " outside [1," +
                              std::to_string(k) + "]");
    WeylOp op(k);
    Exponents alpha(k, 0);
    alpha[h - 1] = 1;
    op.add_term(alpha, Exponents(k, 0), GaussianRational(1));
    return op;
}

WeylOp WeylOp::from_poly(const SigmaPoly& p) {
    WeylOp op(p.k());
    Exponents none(p.k(), 0);
    for (const auto& [g, c] : p.terms()) op.add_term(g, none, c);
    return op;
}

void WeylOp::add_term(const Exponents& alpha, const Exponents& beta, const GaussianRational& c) {
    if (c.is_zero()) return;
    Key key{alpha, beta};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

WeylOp WeylOp::operator-() const {
    WeylOp r(k_);
    for (const auto& [key, c] : terms_) r.terms_.emplace(key, -c);
    return r;
}

WeylOp& WeylOp::operator+=(const WeylOp& o) {
    require_same_arity(k_, o.k_, "weyl add");
    for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, c);
    return *this;
}

WeylOp& WeylOp::operator-=(const WeylOp& o) {
    require_same_arity(k_, o.k_, "weyl sub");
    for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, -c);
    return *this;
}

WeylOp operator*(const GaussianRational& c, WeylOp p) {
    WeylOp r(p.k_);
    if (c.is_zero()) return r;
    for (const auto& [key, v] : p.terms_) r.add_term(key.first, key.second, c * v);
    return r;
}

std::optional<long> WeylOp::pure_weight() const {
    std::optional<long> w;
    for (const auto& [key, c] : terms_) {
        long tw = exponent_weight(key.first) - exponent_weight(key.second);
        if (!w)
            w = tw;
        else if (*w != tw)
            return std::nullopt;
    }
    return w;
}

namespace {

// C(n, j) * j! * C(m, j) = binom(n,j) * fallingfactorial(m,j) as exact value.
Rational reorder_coeff(int n, int m, int j) {
    Rational c = 1;
    for (int t = 0; t < j; ++t) c *= Rational(n - t) * Rational(m - t) / Rational(t + 1);
    return c;
}

}  // namespace

WeylOp weyl_compose(const WeylOp& P, const WeylOp& Q) {
    require_same_arity(P.k(), Q.k(), "weyl compose");
    int k = P.k();
    WeylOp out(k);
    for (const auto& [kp, cp] : P.terms()) {
        const auto& [alpha, beta] = kp;
        for (const auto& [kq, cq] : Q.terms()) {
            const auto& [gamma, delta] = kq;
            // d^beta sigma^gamma = sum_j prod_h binom(beta_h,j_h)*ff(gamma_h,j_h)
            //                      sigma^{gamma-j} d^{beta-j}
            Exponents j(k, 0);
            auto rec = [&](auto&& self, int pos, const GaussianRational& acc) -> void {
                if (pos == k) {
                    Exponents a(k, 0), b(k, 0);
                    for (int h = 0; h < k; ++h) {
                        a[h] = alpha[h] + gamma[h] - j[h];
                        b[h] = beta[h] - j[h] + delta[h];
                    }
                    out.add_term(a, b, acc);
                    return;
                }
                int cap = std::min(beta[pos], gamma[pos]);
                for (int e = 0; e <= cap; ++e) {
                    j[pos] = e;
                    GaussianRational c = acc * GaussianRational(reorder_coeff(beta[pos], gamma[pos], e));
                    self(self, pos + 1, c);
                }
                j[pos] = 0;
            };
            rec(rec, 0, cp * cq);
        }
    }
    return out;
}

WeylOp commutator(const WeylOp& P, const WeylOp& Q) {
    return weyl_compose(P, Q) - weyl_compose(Q, P);
}

SigmaPoly weyl_apply(const WeylOp& P, const SigmaPoly& g) {
    require_same_arity(P.k(), g.k(), "weyl apply");
    int k = P.k();
    SigmaPoly out(k);
    for (const auto& [key, c] : P.terms()) {
        const auto& [alpha, beta] = key;
        SigmaPoly d(g);
        for (int h = 0; h < k; ++h)
            for (int e = 0; e < beta[h]; ++e) d = d.partial(h + 1);
        if (d.is_zero()) continue;
        out += c * (SigmaPoly::monomial(k, alpha, GaussianRational(1)) * d);
    }
    return out;
}

WeylOp make_A(int k, int p, int q) {
    if (p < 1 || p > k - 1 || q < 2 || q > k)
        throw IndexOutOfRange("A(p,q): need p in [1,k-1], q in [2,k]");
    WeylOp dp = WeylOp::partial(k, p);
    WeylOp dq = WeylOp::partial(k, q);
    WeylOp dp1 = WeylOp::partial(k, p + 1);
    WeylOp dq1 = WeylOp::partial(k, q - 1);
    return weyl_compose(dp, dq) - weyl_compose(dp1, dq1);
}

WeylOp make_E(int k) {
    WeylOp op(k);
    for (int h = 1; h <= k; ++h) {
        Exponents a(k, 0), b(k, 0);
        a[h - 1] = 1;
        b[h - 1] = 1;
        op.add_term(a, b, GaussianRational(1));
    }
    return op;
}

WeylOp make_T(int k, int m) {
    if (m < 2 || m > k) throw IndexOutOfRange("T(m): need m in [2,k]");
    return weyl_compose(WeylOp::partial(k, 1), WeylOp::partial(k, m - 1)) +
           weyl_compose(WeylOp::partial(k, m), make_E(k));
}

WeylOp make_Ttilde(int k, int m) {
    if (m < 2 || m > k) throw IndexOutOfRange("Ttilde(m): need m in [2,k]");
    return make_T(k, m) + WeylOp::partial(k, m);
}

WeylOp make_U0(int k) {
    WeylOp op(k);
    for (int h = 1; h <= k; ++h) {
        Exponents a(k, 0), b(k, 0);
        a[h - 1] = 1;
        b[h - 1] = 1;
        op.add_term(a, b, GaussianRational(h));
    }
    return op;
}

WeylOp make_U_minus1(int k) {
    // sum_{h=0}^{k-1} (k-h) sigma_h d_{h+1}, with sigma_0 = 1.
    WeylOp op(k);
    for (int h = 0; h <= k - 1; ++h) {
        Exponents a(k, 0), b(k, 0);
        if (h >= 1) a[h - 1] = 1;
        b[h] = 1;
        op.add_term(a, b, GaussianRational(k - h));
    }
    return op;
}

WeylOp make_generator(int k, const std::string& label) {
    if (label == "E") return make_E(k);
    if (label == "U0") return make_U0(k);
    if (label == "U-1") return make_U_minus1(k);
    auto args_of = [&](size_t open) {
        if (label.back() != ')') throw ParseError("bad generator label '" + label + "'");
        std::string inner = label.substr(open + 1, label.size() - open - 2);
        std::vector<int> args;
        std::stringstream ss(inner);
        std::string tok;
        while (std::getline(ss, tok, ',')) args.push_back(std::stoi(tok));
        return args;
    };
    if (label.rfind("A(", 0) == 0) {
        auto a = args_of(1);
        if (a.size() != 2) throw ParseError("A(p,q) takes two indices");
        return make_A(k, a[0], a[1]);
    }
    if (label.rfind("Ttilde(", 0) == 0) {
        auto a = args_of(6);
        if (a.size() != 1) throw ParseError("Ttilde(m) takes one index");
        return make_Ttilde(k, a[0]);
    }
    if (label.rfind("T(", 0) == 0) {
        auto a = args_of(1);
        if (a.size() != 1) throw ParseError("T(m) takes one index");
        return make_T(k, a[0]);
    }
    throw ParseError("unknown generator label '" + label + "'");
}

std::string WeylOp::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        const auto& [alpha, beta] = key;
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
        bool identity_term =
            std::all_of(alpha.begin(), alpha.end(), [](int e) { return e == 0; }) &&
            std::all_of(beta.begin(), beta.end(), [](int e) { return e == 0; });
        bool unit = cs == "1";
        bool wrote = false;
        if (!unit || identity_term) {
            os << cs;
            wrote = true;
        }
        auto emit = [&](const Exponents& exps, const char* sym) {
            for (size_t h = 0; h < exps.size(); ++h) {
                if (exps[h] == 0) continue;
                if (wrote) os << "*";
                os << sym << (h + 1);
                if (exps[h] > 1) os << "^" << exps[h];
                wrote = true;
            }
        };
        emit(alpha, "s");
        emit(beta, "d");
    }
    return os.str();
}

WeylOp parse_weyl_op(const std::string& text, int k) {
    // Reuse the polynomial parser by mapping d_h to auxiliary variables
    // s_{k+h} in a 2k-variable polynomial, then split the exponents.
    std::string mapped;
    for (size_t i = 0; i < text.size(); ++i) {
        if (text[i] == 'd' && i + 1 < text.size() && std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
            size_t j = i + 1;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            int h = std::stoi(text.substr(i + 1, j - i - 1));
            if (h < 1 || h > k) throw ParseError("d" + std::to_string(h) + " out of range");
            mapped += "s" + std::to_string(k + h);
            i = j - 1;
        } else {
            mapped += text[i];
        }
    }
    SigmaPoly flat = parse_sigma_poly(mapped, 2 * k);
    WeylOp op(k);
    for (const auto& [g, c] : flat.terms()) {
        Exponents alpha(g.begin(), g.begin() + k);
        Exponents beta(g.begin() + k, g.end());
        op.add_term(alpha, beta, c);
    }
    return op;
}

}  // namespace lisbon
