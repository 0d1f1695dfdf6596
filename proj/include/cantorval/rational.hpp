#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <limits>
#include <ostream>
#include <string>

#include "cantorval/errors.hpp"

namespace cantorval {

using Int = boost::multiprecision::cpp_int;

// Exact rational scalar. cpp_rational keeps values in lowest terms with a
// positive denominator, which is exactly the invariant we need; every
// arithmetic operation is exact.
using Rat = boost::multiprecision::cpp_rational;

inline Int numerator(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int denominator(const Rat& q) { return boost::multiprecision::denominator(q); }

// Decimal integer literal. cpp_int's own parser reads a leading 0 as an
// octal prefix; here "0333" must stay three hundred thirty-three.
inline Int parse_int_literal(const std::string& text) {
    size_t i = 0;
    bool neg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) neg = text[i++] == '-';
    if (i >= text.size()) throw ParseError("bad-rational", "empty integer literal");
    for (size_t j = i; j < text.size(); ++j)
        if (text[j] < '0' || text[j] > '9')
            throw ParseError("bad-rational", "non-digit in integer literal '" + text + "'");
    while (i + 1 < text.size() && text[i] == '0') ++i;
    Int v(text.substr(i));
    return neg ? Int(-v) : v;
}

// Parses "p/q" or "p" (optionally signed). Whitespace is not accepted.
inline Rat parse_rat(const std::string& text) {
    if (text.empty()) throw ParseError("bad-rational", "empty rational literal");
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rat(parse_int_literal(text));
    Int num = parse_int_literal(text.substr(0, slash));
    Int den = parse_int_literal(text.substr(slash + 1));
    if (den <= 0) throw ParseError("bad-rational", "denominator must be positive in '" + text + "'");
    return Rat(num, den);
}

// Renders "p/q", or just "p" for integers.
inline std::string rat_to_string(const Rat& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) s += "/" + denominator(q).str();
    return s;
}

inline double rat_to_double(const Rat& q) { return q.template convert_to<double>(); }

// Rational extended with +/-infinity, used for the empty-band sentinels
// of the delta/Delta band extrema (min over an empty set is +inf, max is
// -inf). Arithmetic is only defined where one operand is finite.
class Ext {
public:
    enum Tag { NegInf = -1, Finite = 0, PosInf = 1 };

    Ext() : tag_(Finite) {}
    Ext(Rat v) : tag_(Finite), v_(std::move(v)) {}
    Ext(int v) : tag_(Finite), v_(v) {}

    static Ext pos_inf() { Ext e; e.tag_ = PosInf; return e; }
    static Ext neg_inf() { Ext e; e.tag_ = NegInf; return e; }

    bool is_finite() const { return tag_ == Finite; }
    bool is_pos_inf() const { return tag_ == PosInf; }
    bool is_neg_inf() const { return tag_ == NegInf; }

    const Rat& value() const {
        if (!is_finite()) throw StructuralError("not-finite", "infinite sentinel has no rational value");
        return v_;
    }

    friend bool operator==(const Ext& a, const Ext& b) {
        if (a.tag_ != b.tag_) return false;
        return a.tag_ != Finite || a.v_ == b.v_;
    }
    friend bool operator<(const Ext& a, const Ext& b) {
        if (a.tag_ != b.tag_) return a.tag_ < b.tag_;
        return a.tag_ == Finite && a.v_ < b.v_;
    }
    friend bool operator<=(const Ext& a, const Ext& b) { return a < b || a == b; }
    friend bool operator>(const Ext& a, const Ext& b) { return b < a; }
    friend bool operator>=(const Ext& a, const Ext& b) { return b <= a; }

    friend Ext operator-(const Ext& a, const Rat& b) {
        if (!a.is_finite()) return a;
        return Ext(a.v_ - b);
    }
    friend Ext operator*(const Rat& a, const Ext& b) {
        if (!b.is_finite()) {
            if (a == 0) throw StructuralError("indeterminate", "0 * infinity");
            return (a > 0) == b.is_pos_inf() ? pos_inf() : neg_inf();
        }
        return Ext(a * b.v_);
    }

    static Ext min(const Ext& a, const Ext& b) { return a < b ? a : b; }
    static Ext max(const Ext& a, const Ext& b) { return a < b ? b : a; }

    std::string str() const {
        if (is_pos_inf()) return "+inf";
        if (is_neg_inf()) return "-inf";
        return rat_to_string(v_);
    }

    friend std::ostream& operator<<(std::ostream& os, const Ext& e) { return os << e.str(); }

private:
    Tag tag_;
    Rat v_;
};

}  // namespace cantorval
