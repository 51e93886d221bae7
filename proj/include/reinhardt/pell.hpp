#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "reinhardt/contfrac.hpp"
#include "reinhardt/errors.hpp"
#include "reinhardt/quadext.hpp"
#include "reinhardt/rational.hpp"

namespace reinhardt {

// Solution of x^2 - D y^2 = 1 with x, y >= 1; index 1 is the fundamental one.
struct PellSolution {
    BigInt D;
    BigInt x;
    BigInt y;
    std::size_t index = 1;
};

inline bool pell_check(const PellSolution& s) { return s.x * s.x - s.D * s.y * s.y == 1; }

// Smallest solution, read off the convergents of sqrt(D).  The fundamental
// solution appears within two periods of the expansion, so the loop is
// effectively bounded; the hard cap only guards against internal bugs.
inline PellSolution pell_fundamental(const BigInt& D) {
    if (D <= 0 || is_perfect_square(D))
        throw SquareInputError("Pell equation needs a positive non-square D, got " + D.str());
    SurdCF cf{quad_sqrt(Rat(D))};
    BigInt pPrev = 1, pPrev2 = 0, qPrev = 0, qPrev2 = 1;
    for (std::size_t i = 0; i < 1000000; ++i) {
        BigInt a = cf.next();
        BigInt p = a * pPrev + pPrev2;
        BigInt q = a * qPrev + qPrev2;
        if (p * p - D * q * q == 1) return PellSolution{D, p, q, 1};
        pPrev2 = pPrev;
        pPrev = p;
        qPrev2 = qPrev;
        qPrev = q;
    }
    throw Error("fundamental solution search did not terminate");  // unreachable
}

// fund, fund^2, ..., fund^count in the group of units: the recurrence
// (x', y') = (x1 x + D y1 y, x1 y + y1 x) multiplies by x1 + y1 sqrt(D).
inline std::vector<PellSolution> pell_iterate(const PellSolution& fund, std::size_t count) {
    if (!pell_check(fund))
        throw IncompatiblePellError("not a solution for D = " + fund.D.str());
    std::vector<PellSolution> out;
    out.reserve(count);
    BigInt x = fund.x, y = fund.y;
    for (std::size_t i = 1; i <= count; ++i) {
        out.push_back(PellSolution{fund.D, x, y, i});
        BigInt x2 = fund.x * x + fund.D * fund.y * y;
        BigInt y2 = fund.x * y + fund.y * x;
        x = x2;
        y = y2;
    }
    return out;
}

// alpha = p + sigma*sqrt(q) rewritten over one denominator:
// alpha = (pInt + sigma*sqrt(qInt)) / n with integer pInt, qInt and minimal
// n >= 1.  The Pell modulus attached to this slope is D = n^2 * qInt.
struct PNQData {
    BigInt pInt;
    BigInt qInt;
    BigInt n;

    BigInt pell_modulus() const { return n * n * qInt; }
};

inline PNQData alpha_to_pnq(const Rat& p, const Rat& q) {
    if (q <= 0) throw Error("radicand must be positive");
    if (is_rational_square(q)) throw RationalValueError("sqrt(" + format_rat(q) + ") is rational");
    // Per prime, n needs max(v(den p), ceil(v(den q)/2)) factors: enough for
    // n*p and n^2*q to be integers, and no fewer works.
    BigInt dp = denominator(p), dq = denominator(q);
    BigInt n = 1;
    auto fq = factorize(dq);
    for (const auto& [pr, eq] : fq) {
        int ep = 0;
        BigInt t = dp;
        while (t % pr == 0) {
            t /= pr;
            ++ep;
        }
        int e = std::max(ep, (eq + 1) / 2);
        for (int i = 0; i < e; ++i) n *= pr;
    }
    for (const auto& [pr, ep] : factorize(dp)) {
        if (dq % pr == 0) continue;  // already handled above
        for (int i = 0; i < ep; ++i) n *= pr;
    }
    PNQData out;
    out.n = n;
    out.pInt = numerator(Rat(p * n));
    out.qInt = numerator(Rat(q * n * n));
    return out;
}

// Exponent matrix (z1, z2) -> (z1^k1 z2^k2, z1^l1 z2^l2).
struct AutMatrix {
    BigInt k1, k2, l1, l2;
    std::size_t index = 1;  // which power of the fundamental unit produced it

    BigInt det() const { return k1 * l2 - k2 * l1; }
    BigInt trace() const { return k1 + l2; }
};

// The hyperbolic matrix attached to the slope alpha = (pInt +- sqrt(qInt))/n
// and a Pell solution (x, y) for D = n^2 qInt.  Both sign branches of alpha
// satisfy the same quadratic, so one matrix serves both; the constructor
// verifies the defining identities for each branch exactly.
inline AutMatrix matrix_from_pell(const PNQData& pnq, const PellSolution& sol) {
    if (sol.D != pnq.pell_modulus())
        throw IncompatiblePellError("solution modulus " + sol.D.str() + " does not match slope modulus " +
                                    pnq.pell_modulus().str());
    if (!pell_check(sol)) throw IncompatiblePellError("(x, y) fails the Pell equation");
    AutMatrix M;
    M.k1 = sol.x - pnq.pInt * pnq.n * sol.y;
    M.k2 = sol.y * (pnq.qInt - pnq.pInt * pnq.pInt);
    M.l1 = pnq.n * pnq.n * sol.y;
    M.l2 = sol.x + pnq.pInt * pnq.n * sol.y;
    M.index = sol.index;
    if (M.det() != 1) throw ConstraintViolationError("matrix determinant is not 1");
    if (M.trace() < 4) throw ConstraintViolationError("matrix trace below 4");
    for (int sgn : {+1, -1}) {
        QuadExt alpha =
            quad_normalize(Rat(pnq.pInt, pnq.n), Rat(sgn, pnq.n), Rat(pnq.qInt));
        // alpha must solve l1 a^2 + (k1 - l2) a - k2 = 0 with multiplier
        // k1 + l1 a > 0: exactly the condition that the strip of slope alpha
        // is preserved with orientation.
        QuadExt eig = QuadExt(Rat(M.l1)) * alpha * alpha +
                      QuadExt(Rat(M.k1 - M.l2)) * alpha - QuadExt(Rat(M.k2));
        if (!eig.is_zero()) throw ConstraintViolationError("slope is not an eigendirection");
        if (quad_sign(QuadExt(Rat(M.k1)) + QuadExt(Rat(M.l1)) * alpha) <= 0)
            throw ConstraintViolationError("eigenvalue multiplier not positive");
    }
    return M;
}

}  // namespace reinhardt
