#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "reinhardt/errors.hpp"
#include "reinhardt/quadext.hpp"
#include "reinhardt/rational.hpp"

namespace reinhardt {

// Existence of proper monomial maps f(z) = (a z1^k1 z2^k2, b z1^l1 z2^l2)
// between slope domains.  Writing u = |z1| |z2|^alpha for the source gauge,
// the target gauge pulls back to
//
//   |f1| |f2|^beta = |a| |b|^beta * |z1|^(k1 + beta l1) * |z2|^(k2 + beta l2),
//
// which is a power of u exactly when k2 + l2 beta = alpha (k1 + l1 beta); the
// exponent is then mu = k1 + l1 beta.  Every decision below reduces to finding
// integer matrices satisfying that identity together with a range condition
// on mu, so certificates are exact lattice data and refutations carry the
// reason the lattice has no usable point.

// Why a candidate fails.
enum class ProperRefutation {
    None,            // it does not: a map exists
    FieldMismatch,   // the exact data leaves the working quadratic field
    NoLatticePoint,  // the required value is not in Z + Z*beta (resp. not rational)
    SignObstruction, // the slopes have opposite signs; no gauge exponent works
};

inline std::string refutation_name(ProperRefutation r) {
    switch (r) {
        case ProperRefutation::None: return "None";
        case ProperRefutation::FieldMismatch: return "FieldMismatch";
        case ProperRefutation::NoLatticePoint: return "NoLatticePoint";
        case ProperRefutation::SignObstruction: return "SignObstruction";
    }
    return "?";
}

// Exponent matrix of the monomial map (z1, z2) -> (a z1^k1 z2^k2, b z1^l1 z2^l2).
// Unlike an automorphism matrix it need not be unimodular.
struct ExponentMatrix {
    BigInt k1{0}, k2{0}, l1{0}, l2{0};

    BigInt det() const { return k1 * l2 - k2 * l1; }

    ExponentMatrix negated() const { return ExponentMatrix{-k1, -k2, -l1, -l2}; }

    friend bool operator==(const ExponentMatrix& f, const ExponentMatrix& g) {
        return f.k1 == g.k1 && f.k2 == g.k2 && f.l1 == g.l1 && f.l2 == g.l2;
    }
    friend bool operator!=(const ExponentMatrix& f, const ExponentMatrix& g) {
        return !(f == g);
    }
};

struct ProperMapAnswer {
    bool exists = false;
    // All exponent matrices realizing a map, e.g. both orientation branches of
    // an annulus self-cover.  The scalars (a, b) then range over the torus
    // named by scalarConstraint; empty when the scalars are unconstrained.
    std::vector<ExponentMatrix> familyDescription;
    std::string scalarConstraint;
    // The primary matrix (minimal-height representative), when one exists.
    std::optional<ExponentMatrix> certificate;
    ProperRefutation refutation = ProperRefutation::None;
};

namespace detail {

// The defining identity shared by every case:
//   k2 + l2 beta == alpha (k1 + l1 beta).
inline bool slope_identity_holds(const QuadExt& alpha, const QuadExt& beta,
                                 const ExponentMatrix& m) {
    QuadExt lhs = QuadExt(Rat(m.k2)) + QuadExt(Rat(m.l2)) * beta;
    QuadExt rhs = alpha * (QuadExt(Rat(m.k1)) + QuadExt(Rat(m.l1)) * beta);
    return lhs == rhs;
}

inline void require_slope_identity(const QuadExt& alpha, const QuadExt& beta,
                                   const ExponentMatrix& m) {
    if (!slope_identity_holds(alpha, beta, m))
        throw ConstraintViolationError("proper-map certificate fails its defining identity");
}

// The gauge exponent mu = k1 + l1 beta of a candidate matrix.
inline QuadExt gauge_exponent(const QuadExt& beta, const ExponentMatrix& m) {
    return QuadExt(Rat(m.k1)) + QuadExt(Rat(m.l1)) * beta;
}

inline BigInt abs_big(const BigInt& n) { return n < 0 ? BigInt(-n) : n; }

// Selection key for competing certificates: smallest maximal entry, then
// smallest entry sum, then lexicographic on absolute entries (so vanishing
// exponents beat sign flips), then on the signed entries for determinism.
inline std::tuple<BigInt, BigInt, BigInt, BigInt, BigInt, BigInt, BigInt, BigInt, BigInt, BigInt>
matrix_key(const ExponentMatrix& m) {
    BigInt a1 = abs_big(m.k1), a2 = abs_big(m.k2), a3 = abs_big(m.l1), a4 = abs_big(m.l2);
    BigInt mx = std::max(std::max(a1, a2), std::max(a3, a4));
    BigInt sum = a1 + a2 + a3 + a4;
    return std::make_tuple(mx, sum, a1, a2, a3, a4, m.k1, m.k2, m.l1, m.l2);
}

inline BigInt matrix_height(const ExponentMatrix& m) { return std::get<0>(matrix_key(m)); }

}  // namespace detail

// Proper maps between two-sided slope domains: source slope alpha with the
// symmetric log shell (-logr, logr), target slope beta with (-logR, logR).
// A map exists iff the shell ratio gamma = logR/logr and the slope transport
// alpha*gamma both lie in Z + Z*beta; the two lattice representations are the
// columns of the exponent matrix, and negating it gives the
// orientation-reversing branch.
inline ProperMapAnswer proper_annuli(const QuadExt& alpha, const QuadExt& logr,
                                     const QuadExt& beta, const QuadExt& logR) {
    if (alpha.is_rational() || beta.is_rational())
        throw RationalValueError("slopes must be irrational");
    if (quad_sign(logr) <= 0 || quad_sign(logR) <= 0)
        throw ValidationError("shell log-radii must be positive");

    ProperMapAnswer ans;
    QuadExt gamma;
    try {
        gamma = logR / logr;
    } catch (const MixedFieldError&) {
        ans.refutation = ProperRefutation::FieldMismatch;
        return ans;
    }
    auto first = lattice_member(gamma, beta);
    if (!first) {
        ans.refutation = ProperRefutation::NoLatticePoint;
        return ans;
    }
    QuadExt transported;
    try {
        transported = alpha * gamma;
    } catch (const MixedFieldError&) {
        ans.refutation = ProperRefutation::FieldMismatch;
        return ans;
    }
    auto second = lattice_member(transported, beta);
    if (!second) {
        ans.refutation = ProperRefutation::NoLatticePoint;
        return ans;
    }
    ExponentMatrix m{first->first, second->first, first->second, second->second};
    detail::require_slope_identity(alpha, beta, m);
    if (detail::gauge_exponent(beta, m) != gamma)
        throw ConstraintViolationError("annulus certificate has the wrong gauge exponent");
    ans.exists = true;
    ans.certificate = m;
    ans.familyDescription = {m, m.negated()};
    ans.scalarConstraint = "|a|*|b|^beta = 1";
    return ans;
}

// Proper maps between punctured slope discs {0 < |z1||z2|^alpha < 1} and
// {0 < |z1||z2|^beta < 1}: solvability of alpha (k1 + l1 beta) = k2 + l2 beta
// in integers with k1 + l1 beta > 0.  Expanding over the basis {1, sqrt(d)}
// determines (k2, l2) as rational-linear functions of (k1, l1), so within one
// field the admissible (k1, l1) form a finite-index sublattice of Z^2 and a
// map always exists; across fields the expansion forces irrational
// coefficients and none exists.  Returns the minimal-height solution and
// cross-checks it against brute force over the box |k_i|, |l_i| <= searchBound.
inline ProperMapAnswer proper_pointed(const QuadExt& alpha, const QuadExt& beta,
                                      long long searchBound = 10) {
    if (alpha.is_rational() || beta.is_rational())
        throw RationalValueError("slopes must be irrational");
    if (searchBound < 1) throw ValidationError("search bound must be positive");

    ProperMapAnswer ans;
    if (alpha.d != beta.d) {
        ans.refutation = ProperRefutation::FieldMismatch;
        return ans;
    }

    const Rat a1 = alpha.a, b1 = alpha.b;
    const Rat a2 = beta.a, b2 = beta.b;
    const Rat dRat(alpha.d);
    // alpha (k1 + l1 beta) = k2 + l2 beta, matched on {1, sqrt(d)}:
    //   sqrt(d):  l2 b2 = b1 k1 + (a1 b2 + a2 b1) l1
    //   1:        k2 + l2 a2 = a1 k1 + (a1 a2 + b1 b2 d) l1
    auto derived = [&](const BigInt& k1, const BigInt& l1) -> std::optional<ExponentMatrix> {
        Rat l2 = (b1 * Rat(k1) + (a1 * b2 + a2 * b1) * Rat(l1)) / b2;
        if (!is_integer(l2)) return std::nullopt;
        Rat k2 = a1 * Rat(k1) + (a1 * a2 + b1 * b2 * dRat) * Rat(l1) - a2 * l2;
        if (!is_integer(k2)) return std::nullopt;
        ExponentMatrix m{k1, num(k2), l1, num(l2)};
        if (quad_sign(detail::gauge_exponent(beta, m)) <= 0) return std::nullopt;
        return m;
    };

    // Clearing both denominators at l1 = 0 always yields a solution, so its
    // height bounds the search.
    const BigInt k1Clear = lcm(den(b1 / b2), den((a1 * b2 - a2 * b1) / b2));
    auto fallback = derived(k1Clear, BigInt(0));
    if (!fallback) throw ConstraintViolationError("denominator clearing failed");

    // Any solution of full height h has |k1|, |l1| <= h, so scanning boxes of
    // growing side H and keeping solutions of full height <= H finds the
    // global minimum.
    std::optional<ExponentMatrix> best;
    for (BigInt H(1); H <= detail::matrix_height(*fallback) && !best; ++H) {
        for (BigInt k1 = -H; k1 <= H; ++k1) {
            for (BigInt l1 = -H; l1 <= H; ++l1) {
                auto m = derived(k1, l1);
                if (!m || detail::matrix_height(*m) > H) continue;
                if (!best || detail::matrix_key(*m) < detail::matrix_key(*best)) best = *m;
            }
        }
    }
    if (!best) best = fallback;
    detail::require_slope_identity(alpha, beta, *best);

    // Independent cross-check: the minimum over the brute-force box must agree
    // with the minimal-height solution whenever the box can see it.
    std::optional<ExponentMatrix> boxBest;
    const BigInt B(searchBound);
    for (BigInt k1 = -B; k1 <= B; ++k1) {
        for (BigInt l1 = -B; l1 <= B; ++l1) {
            auto m = derived(k1, l1);
            if (!m || detail::abs_big(m->k2) > B || detail::abs_big(m->l2) > B) continue;
            if (!boxBest || detail::matrix_key(*m) < detail::matrix_key(*boxBest)) boxBest = *m;
        }
    }
    if (detail::matrix_height(*best) <= B) {
        if (!boxBest || !(*boxBest == *best))
            throw ConstraintViolationError("minimal solution disagrees with brute force");
    } else if (boxBest) {
        throw ConstraintViolationError("brute force beat the minimal-height solution");
    }

    ans.exists = true;
    ans.certificate = best;
    ans.familyDescription = {*best};
    ans.scalarConstraint = "|a|*|b|^beta = 1";
    return ans;
}

// Proper maps between full slope domains {|z1||z2|^alpha < 1} and
// {|z1||z2|^beta < 1}.  The sign pattern of the slopes splits the answer:
// both positive needs alpha/beta = l/k in lowest terms and gives
// (z1, z2) -> (z1^k, z2^l); both negative needs alpha = p1 + p2 beta with
// rational p1, p2 and gives (z1, z2) -> (z1^k1 z2^k2, z2^l) with p1 = k2/k1,
// p2 = l/k1 at the least positive k1; mixed signs admit no map at all.
inline ProperMapAnswer proper_full(const QuadExt& alpha, const QuadExt& beta) {
    if (alpha.is_rational() || beta.is_rational())
        throw RationalValueError("slopes must be irrational");

    ProperMapAnswer ans;
    const int signA = quad_sign(alpha);
    const int signB = quad_sign(beta);
    if (signA != signB) {
        ans.refutation = ProperRefutation::SignObstruction;
        return ans;
    }

    if (signA > 0) {
        QuadExt ratio;
        try {
            ratio = alpha / beta;
        } catch (const MixedFieldError&) {
            ans.refutation = ProperRefutation::FieldMismatch;
            return ans;
        }
        if (!ratio.is_rational()) {
            ans.refutation = ProperRefutation::NoLatticePoint;
            return ans;
        }
        ExponentMatrix m{den(ratio.a), BigInt(0), BigInt(0), num(ratio.a)};
        detail::require_slope_identity(alpha, beta, m);
        ans.exists = true;
        ans.certificate = m;
        ans.familyDescription = {m};
        return ans;
    }

    if (alpha.d != beta.d) {
        ans.refutation = ProperRefutation::FieldMismatch;
        return ans;
    }
    // alpha = p1 + p2 beta with p2 = b1/b2 and p1 = a1 - p2 a2; the least
    // positive k1 clearing both denominators gives the minimal exponents.
    Rat p2 = alpha.b / beta.b;
    Rat p1 = alpha.a - p2 * beta.a;
    BigInt k1 = lcm(den(p1), den(p2));
    ExponentMatrix m{k1, num(p1 * Rat(k1)), BigInt(0), num(p2 * Rat(k1))};
    detail::require_slope_identity(alpha, beta, m);
    ans.exists = true;
    ans.certificate = m;
    ans.familyDescription = {m};
    return ans;
}

}  // namespace reinhardt
