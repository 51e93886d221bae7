#pragma once

#include <cassert>
#include <cmath>
#include <optional>
#include <string>
#include <utility>

#include "reinhardt/errors.hpp"
#include "reinhardt/rational.hpp"

namespace reinhardt {

// Element a + b*sqrt(d) of Q or of a real quadratic field Q(sqrt(d)).
//
// Canonical form (everything in the library relies on it):
//   * d >= 1 and squarefree;
//   * b == 0  <=>  d == 1   (rationals carry the trivial radicand).
// Two values compare equal iff their components are identical, so == is
// genuine equality of real numbers.
struct QuadExt {
    Rat a{};
    Rat b{};
    BigInt d{1};

    QuadExt() = default;
    QuadExt(const Rat& rational) : a(rational) {}  // NOLINT: implicit by design
    QuadExt(int rational) : a(rational) {}         // NOLINT
    QuadExt(const Rat& a_, const Rat& b_, const BigInt& d_) : a(a_), b(b_), d(d_) {
        assert(d >= 1);
        assert((b == 0) == (d == 1));
    }

    bool is_rational() const { return b == 0; }
    bool is_zero() const { return a == 0 && b == 0; }

    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        return x.a == y.a && x.b == y.b && x.d == y.d;
    }
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }
};

// Builds the canonical form of a + b*sqrt(dRaw) for any rational dRaw >= 0:
// extracts the square part of the radicand into b and folds rational results
// (square radicand, or b == 0) down to d = 1.
inline QuadExt quad_normalize(const Rat& a, const Rat& b, const Rat& dRaw) {
    if (dRaw < 0) throw Error("negative radicand");
    if (b == 0 || dRaw == 0) return QuadExt(a);
    // sqrt(n/m) = sqrt(n*m)/m
    BigInt nm = numerator(dRaw) * denominator(dRaw);
    BigInt s, m;
    squarefree_decompose(nm, s, m);
    if (m == 1) return QuadExt(a + b * Rat(s, denominator(dRaw)));
    return QuadExt(a, b * Rat(s, denominator(dRaw)), m);
}

inline QuadExt quad_sqrt(const Rat& dRaw) { return quad_normalize(0, 1, dRaw); }

namespace detail {
// The common field of two canonical values; rationals join any field.
inline BigInt field_join(const QuadExt& x, const QuadExt& y) {
    if (x.d == y.d) return x.d;
    if (x.d == 1) return y.d;
    if (y.d == 1) return x.d;
    throw MixedFieldError("cannot combine sqrt(" + x.d.str() + ") with sqrt(" + y.d.str() + ")");
}

inline QuadExt collapse(const Rat& a, const Rat& b, const BigInt& d) {
    if (b == 0) return QuadExt(a);
    return QuadExt(a, b, d);
}
}  // namespace detail

inline QuadExt operator-(const QuadExt& x) { return detail::collapse(-x.a, -x.b, x.d); }

inline QuadExt operator+(const QuadExt& x, const QuadExt& y) {
    BigInt d = detail::field_join(x, y);
    return detail::collapse(x.a + y.a, x.b + y.b, d);
}

inline QuadExt operator-(const QuadExt& x, const QuadExt& y) { return x + (-y); }

inline QuadExt operator*(const QuadExt& x, const QuadExt& y) {
    BigInt d = detail::field_join(x, y);
    Rat a = x.a * y.a + x.b * y.b * Rat(d);
    Rat b = x.a * y.b + x.b * y.a;
    return detail::collapse(a, b, d);
}

inline QuadExt quad_conj(const QuadExt& x) { return detail::collapse(x.a, -x.b, x.d); }

// Field norm x * conj(x) = a^2 - b^2 d; rational, and zero only for x = 0.
inline Rat quad_norm(const QuadExt& x) { return x.a * x.a - x.b * x.b * Rat(x.d); }

inline QuadExt operator/(const QuadExt& x, const QuadExt& y) {
    if (y.is_zero()) throw DivisionByZeroError("division by zero");
    BigInt d = detail::field_join(x, y);
    (void)d;
    if (y.is_rational()) return detail::collapse(x.a / y.a, x.b / y.a, x.d);
    Rat n = quad_norm(y);
    assert(n != 0);  // nonzero because sqrt(d) is irrational
    QuadExt t = x * quad_conj(y);
    return detail::collapse(t.a / n, t.b / n, t.d);
}

inline QuadExt& operator+=(QuadExt& x, const QuadExt& y) { return x = x + y; }
inline QuadExt& operator-=(QuadExt& x, const QuadExt& y) { return x = x - y; }
inline QuadExt& operator*=(QuadExt& x, const QuadExt& y) { return x = x * y; }
inline QuadExt& operator/=(QuadExt& x, const QuadExt& y) { return x = x / y; }

// Exact sign, no floating point.  For mixed-sign components the comparison
// a^2 vs b^2 d decides; equality there would make d a rational square, which
// canonical form excludes.
inline int quad_sign(const QuadExt& x) {
    if (x.b == 0) return sign_of(x.a);
    if (x.a == 0) return sign_of(x.b);
    int sa = sign_of(x.a), sb = sign_of(x.b);
    if (sa == sb) return sa;
    Rat lhs = x.a * x.a, rhs = x.b * x.b * Rat(x.d);
    assert(lhs != rhs);
    return lhs > rhs ? sa : sb;
}

// Order operators require a common field (difference must be well defined).
inline bool operator<(const QuadExt& x, const QuadExt& y) { return quad_sign(x - y) < 0; }
inline bool operator>(const QuadExt& x, const QuadExt& y) { return quad_sign(x - y) > 0; }
inline bool operator<=(const QuadExt& x, const QuadExt& y) { return quad_sign(x - y) <= 0; }
inline bool operator>=(const QuadExt& x, const QuadExt& y) { return quad_sign(x - y) >= 0; }

inline double to_double(const QuadExt& x) {
    return to_double(x.a) + to_double(x.b) * std::sqrt(to_double(x.d));
}

// x written as p + sign * sqrt(q) with rational p, q (q > 0, not a rational
// square).  Defined exactly for the irrational values.
struct PSqrtQForm {
    Rat p;
    Rat q;
    int sgn;  // +1 or -1
};

inline std::optional<PSqrtQForm> as_p_sqrt_q(const QuadExt& x) {
    if (x.b == 0) return std::nullopt;
    return PSqrtQForm{x.a, x.b * x.b * Rat(x.d), sign_of(x.b)};
}

// Membership of gamma in the lattice Z + Z*beta for irrational beta;
// the representation gamma = k + l*beta is unique when it exists.
inline std::optional<std::pair<BigInt, BigInt>> lattice_member(const QuadExt& gamma,
                                                               const QuadExt& beta) {
    if (beta.is_rational()) throw RationalValueError("lattice base must be irrational");
    if (gamma.is_rational()) {
        if (!is_integer(gamma.a)) return std::nullopt;
        return std::make_pair(numerator(gamma.a), BigInt(0));
    }
    if (gamma.d != beta.d) return std::nullopt;
    Rat l = gamma.b / beta.b;
    if (!is_integer(l)) return std::nullopt;
    Rat k = gamma.a - l * beta.a;
    if (!is_integer(k)) return std::nullopt;
    return std::make_pair(numerator(k), numerator(l));
}

// Human-readable "a+b*sqrt(d)"; omits vanishing parts, e.g. "3-2*sqrt(2)",
// "sqrt(5)", "1/2".
inline std::string format_quad(const QuadExt& x) {
    if (x.b == 0) return format_rat(x.a);
    std::string radical = "sqrt(" + x.d.str() + ")";
    std::string irr;
    if (x.b == 1)
        irr = radical;
    else if (x.b == -1)
        irr = "-" + radical;
    else
        irr = format_rat(x.b) + "*" + radical;
    if (x.a == 0) return irr;
    std::string head = format_rat(x.a);
    if (x.b > 0) return head + "+" + irr;
    return head + irr;  // irr already carries the minus sign
}

}  // namespace reinhardt
