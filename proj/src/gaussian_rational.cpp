#include "lisbon/gaussian_rational.hpp"

#include <cctype>
#include <sstream>

namespace lisbon {

std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

std::string to_string(const GaussianRational& c) {
    if (c.im == 0) return to_string(c.re);
    auto imag_part = [&](const Rational& v) -> std::string {
        if (v == 1) return "i";
        if (v == -1) return "-i";
        return to_string(v) + "*i";
    };
    if (c.re == 0) return imag_part(c.im);
    std::string s = "(" + to_string(c.re);
    std::string im = imag_part(c.im);
    if (im[0] != '-') s += "+";
    return s + im + ")";
}

namespace {

// Reads a signed rational "p" or "p/q" starting at pos; advances pos.
Rational read_rational(const std::string& s, size_t& pos) {
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos < s.size() && s[pos] == '/') {
        ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
        throw ParseError("expected rational number in '" + s + "' at " + std::to_string(start));
    std::string token = s.substr(start, pos - start);
    if (token.front() == '+') token.erase(0, 1);  // cpp_rational rejects a leading '+'
    return Rational(token);
}

// One of "r", "r*i", "i", "-i" starting at pos.
GaussianRational read_component(const std::string& s, size_t& pos) {
    int sign = 1;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        if (s[pos] == '-') sign = -1;
        if (pos + 1 < s.size() && s[pos + 1] == 'i') {
            pos += 2;
            return {Rational(0), Rational(sign)};
        }
    }
    if (pos < s.size() && s[pos] == 'i') {
        ++pos;
        return {Rational(0), Rational(1)};
    }
    Rational r = read_rational(s, pos);
    if (pos + 1 < s.size() && s[pos] == '*' && s[pos + 1] == 'i') {
        pos += 2;
        return {Rational(0), r};
    }
    if (pos < s.size() && s[pos] == 'i') {
        ++pos;
        return {Rational(0), r};
    }
    return {r, Rational(0)};
}

}  // namespace

GaussianRational parse_gaussian_rational(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ParseError("empty Gaussian rational");
    bool parens = s.front() == '(';
    if (parens) {
        if (s.back() != ')') throw ParseError("unbalanced parentheses in '" + text + "'");
        s = s.substr(1, s.size() - 2);
    }
    size_t pos = 0;
    GaussianRational v = read_component(s, pos);
    while (pos < s.size()) {
        if (s[pos] != '+' && s[pos] != '-')
            throw ParseError("unexpected character in '" + text + "' at " + std::to_string(pos));
        v += read_component(s, pos);
    }
    return v;
}

}  // namespace lisbon
