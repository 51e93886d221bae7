#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "reinhardt/errors.hpp"
#include "reinhardt/quadext.hpp"
#include "reinhardt/rational.hpp"

namespace reinhardt {

// Exact continued-fraction engine for quadratic irrationals, written in the
// classical surd form x = (P + sqrt(D)) / Q with integers P, Q, D and the
// divisibility invariant Q | D - P^2 (D never a perfect square).  Each step
// is integer arithmetic only, so states repeat exactly and periodicity is
// detected by equality, not by tolerance.
class SurdCF {
  public:
    explicit SurdCF(const QuadExt& x) {
        if (x.is_rational()) throw RationalValueError("continued fraction input must be irrational");
        // Common denominator L: x = (Pn + Bn*sqrt(d)) / L.
        BigInt ad = denominator(x.a), bd = denominator(x.b);
        BigInt L = ad / gcd(ad, bd) * bd;
        BigInt Pn = numerator(x.a) * (L / ad);
        BigInt Bn = numerator(x.b) * (L / bd);
        if (Bn < 0) {  // (P - sqrt(D))/Q = (-P + sqrt(D))/(-Q)
            Pn = -Pn;
            Bn = -Bn;
            L = -L;
        }
        P_ = Pn;
        Q_ = L;
        D_ = Bn * Bn * x.d;
        if ((D_ - P_ * P_) % Q_ != 0) {  // rescale to restore the invariant
            BigInt f = abs(Q_);
            P_ *= f;
            D_ *= f * f;
            Q_ *= f;
        }
        sD_ = isqrt(D_);
    }

    // State uniquely determines the tail of the expansion.
    std::pair<BigInt, BigInt> state() const { return {P_, Q_}; }

    BigInt next() {
        BigInt a = Q_ > 0 ? floor_div(P_ + sD_, Q_) : floor_div(-P_ - sD_ - 1, -Q_);
        BigInt P2 = a * Q_ - P_;
        BigInt Q2 = (D_ - P2 * P2) / Q_;  // exact by the invariant
        P_ = P2;
        Q_ = Q2;
        return a;
    }

  private:
    BigInt P_, Q_, D_, sD_;
};

// Pre-period followed by exactly one full period of partial quotients.
struct CfExpansion {
    std::vector<BigInt> quotients;
    std::size_t preperiodLength = 0;
    std::size_t periodLength = 0;

    bool purely_periodic() const { return preperiodLength == 0; }

    BigInt quotient_at(std::size_t i) const {
        if (i < quotients.size()) return quotients[i];
        return quotients[preperiodLength + (i - preperiodLength) % periodLength];
    }
};

inline CfExpansion cf_expand(const QuadExt& x, std::size_t maxTerms = 100000) {
    if (x.is_rational()) throw RationalValueError("continued fraction input must be irrational");
    if (quad_sign(x) <= 0) throw Error("continued fraction input must be positive");
    SurdCF it(x);
    CfExpansion out;
    std::map<std::pair<BigInt, BigInt>, std::size_t> seen;
    for (std::size_t i = 0;; ++i) {
        auto st = it.state();
        auto found = seen.find(st);
        if (found != seen.end()) {
            out.preperiodLength = found->second;
            out.periodLength = i - found->second;
            return out;
        }
        if (i >= maxTerms)
            throw MaxTermsError("no period within " + std::to_string(maxTerms) + " terms");
        seen.emplace(st, i);
        out.quotients.push_back(it.next());
    }
}

// First `count` convergents p_i/q_i of the expansion (periodic extension).
inline std::vector<std::pair<BigInt, BigInt>> convergents(const CfExpansion& cf,
                                                          std::size_t count) {
    std::vector<std::pair<BigInt, BigInt>> out;
    out.reserve(count);
    BigInt pPrev = 1, pPrev2 = 0;  // p_{-1}, p_{-2}
    BigInt qPrev = 0, qPrev2 = 1;  // q_{-1}, q_{-2}
    for (std::size_t i = 0; i < count; ++i) {
        BigInt a = cf.quotient_at(i);
        BigInt p = a * pPrev + pPrev2;
        BigInt q = a * qPrev + qPrev2;
        out.emplace_back(p, q);
        pPrev2 = pPrev;
        pPrev = p;
        qPrev2 = qPrev;
        qPrev = q;
    }
    return out;
}

}  // namespace reinhardt
