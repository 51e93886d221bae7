#pragma once

#include <cassert>
#include <cstdlib>
#include <string>
#include <tuple>
#include <vector>

#include "reinhardt/domain.hpp"
#include "reinhardt/errors.hpp"
#include "reinhardt/quadext.hpp"
#include "reinhardt/rational.hpp"

namespace reinhardt {

enum class StripType { Rational, Irrational };

// A strip is a domain whose log image lies between two parallel lines (one
// may be at infinity).  Its type is decided by the slope of those lines.
inline StripType strip_type(const DomainDesc& input) {
    DomainDesc desc = canonicalize(input);
    validate(desc);
    if (desc.kind != DomainKind::MonomialPolyhedron || desc.constraints.empty() ||
        !contains_line(desc))
        throw NotAStripError("domain is not a strip");
    const auto& c = desc.constraints.front();
    if (c.alpha1.is_zero()) return StripType::Rational;  // vertical slope
    return c.alpha2.is_rational() ? StripType::Rational : StripType::Irrational;
}

// The classification target: every strip (and every full domain) is monomially
// equivalent to exactly one of these models.
struct NormalForm {
    enum class Tag { FormA, FormB, FormC, ProductD, FormE, FormF, Full };
    enum class Factor1 { Disc, PointedDisc, Annulus };
    enum class Factor2 { C, Cstar };

    Tag tag{};
    QuadExt beta;          // FormA / FormB / FormC slope
    QuadExt logR;          // FormC / annulus half-width (positive)
    BigInt p{0}, q{0};     // FormE / FormF exponents, coprime
    Factor1 factor1{};     // ProductD
    Factor2 factor2{};     // ProductD
    FullType fullType{};   // Full
    MonomialMap witness;   // transform(source, witness) == canonical
    DomainDesc canonical;  // the model description itself
    std::vector<std::string> steps;  // human-readable reduction trace
};

inline std::string normal_form_name(const NormalForm& nf) {
    switch (nf.tag) {
        case NormalForm::Tag::FormA:
            return "FormA(" + format_quad(nf.beta) + ")";
        case NormalForm::Tag::FormB:
            return "FormB(" + format_quad(nf.beta) + ")";
        case NormalForm::Tag::FormC:
            return "FormC(" + format_quad(nf.beta) + ", logR=" + format_quad(nf.logR) + ")";
        case NormalForm::Tag::FormE:
            return "FormE(" + nf.p.str() + ", " + nf.q.str() + ")";
        case NormalForm::Tag::FormF:
            return "FormF(" + nf.p.str() + ", " + nf.q.str() + ")";
        case NormalForm::Tag::ProductD: {
            std::string f1 = nf.factor1 == NormalForm::Factor1::Disc          ? "Disc"
                             : nf.factor1 == NormalForm::Factor1::PointedDisc ? "PointedDisc"
                                 : "Annulus(logR=" + format_quad(nf.logR) + ")";
            std::string f2 = nf.factor2 == NormalForm::Factor2::C ? "C" : "Cstar";
            return "Product(" + f1 + ", " + f2 + ")";
        }
        case NormalForm::Tag::Full:
            switch (nf.fullType) {
                case FullType::C2: return "Full(C^2)";
                case FullType::CxCstar: return "Full(C x C*)";
                case FullType::CstarxC: return "Full(C* x C)";
                case FullType::Cstar2: return "Full(C*^2)";
                case FullType::NotFull: break;
            }
            return "Full(?)";
    }
    return "?";
}

namespace detail {

// The Bezout companion of a positive rational slope p/q: the unimodular
// matrix [[q, p], [-m, n]] with pm + qn = 1 sends the slope-(p/q) strip to a
// vertical one.  Among all valid (m, n) pick the smallest matrix so witness
// output is reproducible: minimal max |entry|, then minimal sum |entries|,
// then lexicographically smallest (k1, k2, l1, l2).
inline MonomialMap bezout_map(const Rat& beta) {
    BigInt p = numerator(beta), q = denominator(beta);
    BigInt m0, n0;
    BigInt g = extended_gcd(p, q, m0, n0);
    assert(g == 1);
    (void)g;
    auto cand = [&](const BigInt& t) {
        MonomialMap mm;
        mm.k1 = q;
        mm.k2 = p;
        mm.l1 = -(m0 + q * t);
        mm.l2 = n0 - p * t;
        return mm;
    };
    auto key = [](const MonomialMap& mm) {
        BigInt entries[4] = {mm.k1, mm.k2, mm.l1, mm.l2};
        BigInt mx = 0, sum = 0;
        for (const auto& e : entries) {
            BigInt a = abs(e);
            if (a > mx) mx = a;
            sum += a;
        }
        return std::make_tuple(mx, sum, mm.k1, mm.k2, mm.l1, mm.l2);
    };
    // The minimum lies where |l1| and |l2| are balanced near zero; scan a
    // window certain to contain it.
    BigInt tLo = floor_div(-m0, q) - 2;
    BigInt tHi = floor_div(n0, p) + 2;
    if (tLo > tHi) std::swap(tLo, tHi);
    MonomialMap best = cand(tLo);
    for (BigInt t = tLo + 1; t <= tHi; ++t) {
        MonomialMap c = cand(t);
        if (key(c) < key(best)) best = c;
    }
    assert(best.det() == 1);
    return best;
}

}  // namespace detail

inline NormalForm rational_reduce(const NormalForm& abc);

// Reduce a strip to its normal form via an explicit monomial map.  The
// witness is accumulated step by step; by construction
// transform(source, witness) equals the returned canonical description, and
// this function checks that identity before returning.
inline NormalForm reduce_strip(const DomainDesc& input) {
    DomainDesc source = canonicalize(input);
    validate(source);
    if (source.kind == DomainKind::Parabolic)
        throw NotAStripError("parabolic log images contain no line");
    if (source.constraints.empty())
        throw NotAStripError("full domains have nothing to reduce");
    if (!contains_line(source)) throw NotAStripError("log image is not a strip");

    DomainDesc desc = source;
    MonomialMap witness = MonomialMap::identity();
    std::vector<std::string> steps;
    auto apply = [&](const MonomialMap& m, const std::string& label) {
        desc = transform(desc, m);
        witness = compose(m, witness);
        steps.push_back(label);
    };

    // Phase 1: orient the single slab so it reads 1*t + beta*s < finite top,
    // with the axis pattern in its reference position.
    for (int guard = 0;; ++guard) {
        if (guard > 8) throw Error("strip normalization failed to stabilize");
        const auto& c = desc.constraints.front();
        if (c.alpha1.is_zero()) {
            apply(swap_map(), "swap");
            continue;
        }
        if (!c.upperLog) {
            apply(invert_z1(), "invert-z1");
            continue;
        }
        int bs = quad_sign(c.alpha2);
        bool a1 = desc.axis1Included, a2 = desc.axis2Included;
        if (!a1 && a2 && bs != 0) {
            apply(swap_map(), "swap");
            continue;
        }
        if (a1 && !a2 && bs > 0) {
            apply(flip_z2(), "flip-z2");
            continue;
        }
        if (!a1 && !a2 && bs < 0) {
            apply(flip_z2(), "flip-z2");
            continue;
        }
        break;
    }

    // Phase 2: move the slab to its reference position (top at 0, or
    // symmetric around 0 when both bounds are finite).
    {
        const auto& c = desc.constraints.front();
        if (!c.lowerLog) {
            if (!c.upperLog->is_zero()) apply(modulus_shift(-*c.upperLog, 0), "shift");
        } else {
            QuadExt delta = -(*c.lowerLog + *c.upperLog) / QuadExt(2);
            if (!delta.is_zero()) apply(modulus_shift(delta, 0), "center");
        }
    }

    const auto& c = desc.constraints.front();
    QuadExt beta = c.alpha2;
    bool a1 = desc.axis1Included, a2 = desc.axis2Included;
    bool lowerInf = !c.lowerLog.has_value();

    NormalForm nf;
    nf.witness = witness;
    nf.canonical = desc;
    nf.steps = steps;

    if (!a1 && a2) {
        // Slice pattern {annulus or pointed disc} x C; slope is 0 here.
        assert(beta.is_zero());
        nf.tag = NormalForm::Tag::ProductD;
        nf.factor2 = NormalForm::Factor2::C;
        nf.factor1 =
            lowerInf ? NormalForm::Factor1::PointedDisc : NormalForm::Factor1::Annulus;
        if (!lowerInf) nf.logR = *c.upperLog;
    } else if (a1) {
        nf.tag = NormalForm::Tag::FormA;
        nf.beta = beta;
        assert(lowerInf);
    } else if (lowerInf) {
        nf.tag = NormalForm::Tag::FormB;
        nf.beta = beta;
        assert(quad_sign(beta) >= 0);
    } else {
        nf.tag = NormalForm::Tag::FormC;
        nf.beta = beta;
        nf.logR = *c.upperLog;
        assert(quad_sign(nf.logR) > 0);
    }

    NormalForm out = (nf.tag != NormalForm::Tag::ProductD && beta.is_rational())
                         ? rational_reduce(nf)
                         : nf;
    if (!desc_equal(transform(source, out.witness), out.canonical))
        throw ConstraintViolationError("reduction witness does not reproduce the normal form");
    return out;
}

// Second half of the reduction for rational slopes: an A/B/C shape with
// rational beta always simplifies further, to a product or an exponent model.
inline NormalForm rational_reduce(const NormalForm& abc) {
    if (abc.tag != NormalForm::Tag::FormA && abc.tag != NormalForm::Tag::FormB &&
        abc.tag != NormalForm::Tag::FormC)
        throw Error("rational_reduce expects an A/B/C form");
    if (!abc.beta.is_rational()) throw Error("rational_reduce expects a rational slope");

    Rat beta = abc.beta.a;
    DomainDesc desc = abc.canonical;
    MonomialMap witness = abc.witness;
    std::vector<std::string> steps = abc.steps;
    auto apply = [&](const MonomialMap& m, const std::string& label) {
        desc = transform(desc, m);
        witness = compose(m, witness);
        steps.push_back(label);
    };

    NormalForm nf;
    nf.tag = NormalForm::Tag::ProductD;  // default; overwritten below as needed

    switch (abc.tag) {
        case NormalForm::Tag::FormA:
            if (beta > 0) {
                nf.tag = NormalForm::Tag::FormE;
                nf.p = denominator(beta);
                nf.q = numerator(beta);
            } else if (beta == 0) {
                nf.factor1 = NormalForm::Factor1::Disc;
                nf.factor2 = desc.axis2Included ? NormalForm::Factor2::C
                                                : NormalForm::Factor2::Cstar;
            } else {
                BigInt qt = -numerator(beta), pt = denominator(beta);  // beta = -qt/pt
                if (pt == 1) {
                    apply(shear_map(-qt), "shear");
                    nf.factor1 = NormalForm::Factor1::Disc;
                    nf.factor2 = NormalForm::Factor2::Cstar;
                } else {
                    apply(flip_z2(), "flip-z2");
                    apply(swap_map(), "swap");
                    nf.tag = NormalForm::Tag::FormF;
                    nf.p = qt;
                    nf.q = pt;
                }
            }
            break;
        case NormalForm::Tag::FormB:
            if (beta != 0) apply(detail::bezout_map(beta), "bezout");
            nf.factor1 = NormalForm::Factor1::PointedDisc;
            nf.factor2 = NormalForm::Factor2::Cstar;
            break;
        case NormalForm::Tag::FormC:
            if (beta != 0) apply(detail::bezout_map(beta), "bezout");
            nf.factor1 = NormalForm::Factor1::Annulus;
            nf.factor2 = NormalForm::Factor2::Cstar;
            nf.logR = *desc.constraints.front().upperLog;
            break;
        default:
            break;  // unreachable
    }

    nf.witness = witness;
    nf.canonical = desc;
    nf.steps = steps;
    return nf;
}

// Entry point covering full domains as well; everything else must be a strip.
inline NormalForm classify_normal_form(const DomainDesc& input) {
    DomainDesc desc = canonicalize(input);
    validate(desc);
    FullType ft = full_type(desc);
    if (ft != FullType::NotFull) {
        NormalForm nf;
        nf.tag = NormalForm::Tag::Full;
        nf.fullType = ft;
        nf.witness = MonomialMap::identity();
        nf.canonical = desc;
        return nf;
    }
    return reduce_strip(desc);
}

}  // namespace reinhardt
