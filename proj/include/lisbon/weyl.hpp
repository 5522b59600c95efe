#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lisbon/sigma_poly.hpp"

namespace lisbon {

/// Normal-ordered element of C[sigma_1..sigma_k]<d_1..d_k>: a sparse sum
/// of c * sigma^alpha * d^beta with every sigma to the left of every d.
class WeylOp {
  public:
    using Key = std::pair<Exponents, Exponents>;
    struct KeyLess {
        bool operator()(const Key& a, const Key& b) const {
            GradedLexLess lt;
            if (lt(a.first, b.first)) return true;
            if (lt(b.first, a.first)) return false;
            return lt(a.second, b.second);
        }
    };
    using TermMap = std::map<Key, GaussianRational, KeyLess>;

    WeylOp() : k_(0) {}
    explicit WeylOp(int k) : k_(k) {}

    static WeylOp zero(int k) { return WeylOp(k); }
    static WeylOp identity(int k);
    /// d_h, 1 <= h <= k.
    static WeylOp partial(int k, int h);
    /// sigma_h as a multiplication operator.
    static WeylOp sigma(int k, int h);
    static WeylOp from_poly(const SigmaPoly& p);

    int k() const { return k_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    void add_term(const Exponents& alpha, const Exponents& beta, const GaussianRational& c);

    WeylOp operator-() const;
    WeylOp& operator+=(const WeylOp& o);
    WeylOp& operator-=(const WeylOp& o);
    friend WeylOp operator+(WeylOp a, const WeylOp& b) { return a += b; }
    friend WeylOp operator-(WeylOp a, const WeylOp& b) { return a -= b; }
    friend WeylOp operator*(const GaussianRational& c, WeylOp p);

    friend bool operator==(const WeylOp& a, const WeylOp& b) {
        return a.k_ == b.k_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const WeylOp& a, const WeylOp& b) { return !(a == b); }

    /// Weight shared by all terms (w(alpha) - w(beta)), or nullopt if mixed.
    std::optional<long> pure_weight() const;

    std::string to_string() const;

  private:
    int k_;
    TermMap terms_;
};

/// Product P*Q brought back to normal order via d^n sigma^m expansion.
WeylOp weyl_compose(const WeylOp& P, const WeylOp& Q);

WeylOp commutator(const WeylOp& P, const WeylOp& Q);

/// Exact action of the operator on a polynomial.
SigmaPoly weyl_apply(const WeylOp& P, const SigmaPoly& g);

/// System generators. Index ranges: A(p,q) needs p in [1,k-1], q in [2,k];
/// T/Ttilde need m in [2,k].
WeylOp make_A(int k, int p, int q);
WeylOp make_T(int k, int m);
WeylOp make_Ttilde(int k, int m);
WeylOp make_E(int k);
WeylOp make_U0(int k);
WeylOp make_U_minus1(int k);

/// Builds a generator from its label: "A(p,q)", "T(m)", "Ttilde(m)", "E",
/// "U0", "U-1".
WeylOp make_generator(int k, const std::string& label);

/// Parses the canonical rendering of WeylOp::to_string (factors "s1^2",
/// "d3", coefficient first).
WeylOp parse_weyl_op(const std::string& text, int k);

}  // namespace lisbon
