#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "reinhardt/errors.hpp"

namespace reinhardt {

using BigInt = boost::multiprecision::cpp_int;
// Always canonical: gcd(num, den) = 1 and den > 0, maintained by the backend.
using Rat = boost::multiprecision::cpp_rational;

inline BigInt num(const Rat& r) { return numerator(r); }
inline BigInt den(const Rat& r) { return denominator(r); }

// The backend's two-argument constructor insists on d > 0; this one accepts
// any nonzero d and moves the sign into the numerator.
inline Rat make_rat(const BigInt& n, const BigInt& d) {
    if (d == 0) throw DivisionByZeroError("rational with zero denominator");
    return d < 0 ? Rat(-n, -d) : Rat(n, d);
}

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

inline int sign_of(const BigInt& n) { return n.sign(); }
inline int sign_of(const Rat& r) { return r.sign(); }

// Floored quotient; cpp_int's operator/ truncates toward zero instead.
inline BigInt floor_div(const BigInt& n, const BigInt& d) {
    BigInt q = n / d;
    BigInt r = n % d;
    if (r != 0 && ((r < 0) != (d < 0))) --q;
    return q;
}

inline BigInt floor_rat(const Rat& r) { return floor_div(numerator(r), denominator(r)); }
inline BigInt ceil_rat(const Rat& r) { return -floor_rat(-r); }

inline BigInt isqrt(const BigInt& n) {
    if (n < 0) throw Error("isqrt of negative value");
    return sqrt(n);  // floor square root for cpp_int
}

inline bool is_perfect_square(const BigInt& n, BigInt* root = nullptr) {
    if (n < 0) return false;
    BigInt s = isqrt(n);
    if (s * s != n) return false;
    if (root) *root = s;
    return true;
}

inline bool is_rational_square(const Rat& r, Rat* root = nullptr) {
    if (r < 0) return false;
    BigInt sn, sd;
    if (!is_perfect_square(numerator(r), &sn)) return false;
    if (!is_perfect_square(denominator(r), &sd)) return false;
    if (root) *root = Rat(sn, sd);
    return true;
}

// Prime factorization by trial division; the values this library meets are
// denominator/radicand sized, not cryptographic.
inline std::vector<std::pair<BigInt, int>> factorize(BigInt n) {
    if (n < 1) throw Error("factorize needs n >= 1");
    std::vector<std::pair<BigInt, int>> out;
    for (BigInt p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

// n = s^2 * m with m squarefree, for n >= 1.
inline void squarefree_decompose(const BigInt& n, BigInt& s, BigInt& m) {
    s = 1;
    m = 1;
    for (const auto& [p, e] : factorize(n)) {
        for (int i = 0; i < e / 2; ++i) s *= p;
        if (e % 2 == 1) m *= p;
    }
}

inline double to_double(const Rat& r) { return r.convert_to<double>(); }
inline double to_double(const BigInt& n) { return n.convert_to<double>(); }

// "num/den" with den > 0, or just "num".  Whitespace is not tolerated:
// these strings travel through JSON and should be machine-canonical.
inline Rat parse_rat(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational literal");
    auto slash = text.find('/');
    auto check_int = [&](const std::string& part, bool allowSign) {
        if (part.empty()) throw ParseError("malformed rational '" + text + "'");
        std::size_t i = 0;
        if (allowSign && (part[0] == '-' || part[0] == '+')) i = 1;
        if (i == part.size()) throw ParseError("malformed rational '" + text + "'");
        for (; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9')
                throw ParseError("malformed rational '" + text + "'");
    };
    if (slash == std::string::npos) {
        check_int(text, true);
        return Rat(BigInt(text));
    }
    std::string numPart = text.substr(0, slash);
    std::string denPart = text.substr(slash + 1);
    check_int(numPart, true);
    check_int(denPart, false);
    BigInt d(denPart);
    if (d == 0) throw ParseError("zero denominator in '" + text + "'");
    return Rat(BigInt(numPart), d);
}

inline std::string format_rat(const Rat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

// gcd(a,b) along with x, y such that a*x + b*y = g (g >= 0).
inline BigInt extended_gcd(const BigInt& a, const BigInt& b, BigInt& x, BigInt& y) {
    BigInt oldR = a, r = b;
    BigInt oldX = 1, xx = 0;
    BigInt oldY = 0, yy = 1;
    while (r != 0) {
        BigInt q = oldR / r;  // truncated is fine: identity is preserved exactly
        BigInt t = oldR - q * r;
        oldR = r;
        r = t;
        t = oldX - q * xx;
        oldX = xx;
        xx = t;
        t = oldY - q * yy;
        oldY = yy;
        yy = t;
    }
    if (oldR < 0) {
        oldR = -oldR;
        oldX = -oldX;
        oldY = -oldY;
    }
    x = oldX;
    y = oldY;
    return oldR;
}

}  // namespace reinhardt
