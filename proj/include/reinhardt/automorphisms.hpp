#pragma once

#include <optional>
#include <string>
#include <vector>

#include "reinhardt/domain.hpp"
#include "reinhardt/errors.hpp"
#include "reinhardt/normal_form.hpp"
#include "reinhardt/pell.hpp"

namespace reinhardt {

// Shear automorphism (z1, z2) -> (a z1 z2^k, b z2^eps).  Phases are dropped
// throughout (every decision here is modulus-based), so only log|a|, log|b|
// are stored.
struct ShearAut {
    QuadExt logA;
    QuadExt logB;
    BigInt k{0};
    int epsilon = 1;
};

inline MonomialMap shear_as_map(const ShearAut& phi) {
    MonomialMap m;
    m.k1 = 1;
    m.k2 = phi.k;
    m.l1 = 0;
    m.l2 = phi.epsilon;
    m.logModulus1 = phi.logA;
    m.logModulus2 = phi.logB;
    return m;
}

// Closed form for the n-th iterate of an epsilon = +1 shear; negative n gives
// the inverse.  Flips (epsilon = -1) square to shears, so iterate those by
// composing pairs first.
inline ShearAut iterate_shear(const ShearAut& phi, const BigInt& n) {
    if (phi.epsilon != 1)
        throw FlipIterateError("iteration in closed form needs epsilon = +1");
    ShearAut out;
    out.epsilon = 1;
    out.k = n * phi.k;
    out.logB = QuadExt(Rat(n)) * phi.logB;
    out.logA = QuadExt(Rat(n)) * phi.logA +
               QuadExt(Rat(phi.k * n * (n - 1)) / 2) * phi.logB;
    return out;
}

// One family of automorphisms of a normal-form model.  Every family carries
// an implicit rotation torus (z1, z2) -> (e^{i u} z1, e^{i v} z2) on top of
// what is listed; rotations are invisible to modulus-based data.
struct AutFamily {
    enum class Tag {
        TorusScaling,        // (a z1, b z2) with log|a| + alpha log|b| = 0
        TorusWithFlip,       // the scalings plus (a/z1, b/z2), same relation
        MonomialHyperbolic,  // scalings plus the Pell-generated matrix group
        FunctionalFamily,    // function-parameter families of rational models
        Shear,               // (a z1 z2^k, b z2^eps) solving the slope equation
    };

    Tag tag{};
    QuadExt alpha;          // scaling relation coefficient (torus tags)
    AutMatrix generator{};  // MonomialHyperbolic: infinite-order generator
    int caseId = 0;         // FunctionalFamily: which rational model, 1-4
    ShearAut shear;         // Shear: canonical representative
    std::string note;
};

// The automorphism family list of the domain's normal-form model.  Domains
// outside the classified shapes (full, hyperbolic, or no-line polyhedra with
// torus-only groups) have no finite family list here.
inline std::vector<AutFamily> aut_group(const DomainDesc& input) {
    DomainDesc desc = canonicalize(input);
    validate(desc);

    if (desc.kind == DomainKind::Parabolic) {
        // The slope equation psi(s + B) - psi(s) = logA + k s pins B = k/(2a)
        // for every nonzero integer k; freeze the representative with
        // B = den(2a), k = num(2a).
        Rat twoA = 2 * desc.parabola.a;
        Rat B(denominator(twoA));
        AutFamily fam;
        fam.tag = AutFamily::Tag::Shear;
        fam.shear.k = numerator(twoA);
        fam.shear.logB = QuadExt(B);
        fam.shear.logA = QuadExt(desc.parabola.a * B * B + desc.parabola.b * B);
        fam.shear.epsilon = 1;
        fam.note = "shears (a z1 z2^k, b z2^eps) solving the slope equation";
        return {fam};
    }

    NormalForm nf;
    try {
        nf = classify_normal_form(desc);
    } catch (const NotAStripError&) {
        throw UnclassifiedError(
            "no family list: domain is neither a strip, a parabolic model, nor full");
    }

    AutFamily fam;
    switch (nf.tag) {
        case NormalForm::Tag::Full:
            throw UnclassifiedError(
                "full domains carry function-sized automorphism groups with no family list");
        case NormalForm::Tag::FormA:
            fam.tag = AutFamily::Tag::TorusScaling;
            fam.alpha = nf.beta;
            fam.note = "scalings (a z1, b z2) with log|a| + alpha log|b| = 0";
            break;
        case NormalForm::Tag::FormB: {
            fam.tag = AutFamily::Tag::MonomialHyperbolic;
            fam.alpha = nf.beta;
            auto ps = as_p_sqrt_q(nf.beta);
            PNQData pnq = alpha_to_pnq(ps->p, ps->q);
            fam.generator = matrix_from_pell(pnq, pell_fundamental(pnq.pell_modulus()));
            fam.note = "torus scalings extended by the Pell-generated matrix";
            break;
        }
        case NormalForm::Tag::FormC:
            fam.tag = AutFamily::Tag::TorusWithFlip;
            fam.alpha = nf.beta;
            fam.note = "scalings and the inversion (a/z1, b/z2), same modulus relation";
            break;
        case NormalForm::Tag::FormE:
            fam.tag = AutFamily::Tag::FunctionalFamily;
            fam.caseId = (nf.p == 1 && nf.q == 1) ? 1 : 2;
            fam.note = fam.caseId == 1
                           ? "(z1 f(z1 z2), z2 / f(z1 z2)) and the swapped variant"
                           : "(a^{1/p}(z1^p z2^q) z1, z2 / a^{1/q}(z1^p z2^q))";
            break;
        case NormalForm::Tag::FormF:
            fam.tag = AutFamily::Tag::FunctionalFamily;
            fam.caseId = 3;
            fam.note = "(a^{1/p}(z1^p z2^q) z1, z2 / a^{1/q}(z1^p z2^q)) on C* x C";
            break;
        case NormalForm::Tag::ProductD:
            fam.tag = AutFamily::Tag::FunctionalFamily;
            fam.caseId = 4;
            fam.note = "(a(l), b(l) z + c(l)) over C, (a(l), b(l) z^{eps}) over C*";
            break;
    }
    return {fam};
}

// Result of checking one candidate map, with the failing clause when not.
struct AutCheck {
    bool ok = false;
    std::string reason;
};

// A monomial map is an automorphism exactly when its matrix is unimodular,
// included axes land back on included axes, and the transported description
// equals the original.
inline AutCheck is_automorphism(const DomainDesc& input, const MonomialMap& map) {
    DomainDesc desc = canonicalize(input);
    validate(desc);
    BigInt dt = map.det();
    if (dt != 1 && dt != -1) return {false, "exponent matrix is not unimodular"};
    DomainDesc image;
    try {
        image = transform(desc, map);
    } catch (const AxisAmbiguityError& e) {
        return {false, std::string("axis not preserved: ") + e.what()};
    } catch (const Error& e) {
        return {false, e.what()};
    }
    if (!desc_equal(image, desc)) return {false, "image description differs from the domain"};
    return {true, ""};
}

// Compactness of the automorphism group, with an explicit non-compact family
// generator when there is one.
struct CompactnessVerdict {
    enum class Reason { LineInLogImage, ParabolicShear, TorusOnly };

    bool compact = false;
    Reason reason{};
    std::optional<MonomialMap> mapWitness;  // line case: unbounded scalings
    std::optional<ShearAut> shearWitness;   // parabolic case: unbounded shears
};

inline CompactnessVerdict compactness(const DomainDesc& input) {
    DomainDesc desc = canonicalize(input);
    validate(desc);
    if (hyperbolicity(desc).hyperbolic)
        throw HyperbolicInputError("compactness is decided here for non-hyperbolic domains only");

    CompactnessVerdict v;
    if (auto line = contains_line(desc)) {
        // Scaling along the line direction translates the log image into
        // itself; its powers leave every bounded set.
        v.compact = false;
        v.reason = CompactnessVerdict::Reason::LineInLogImage;
        v.mapWitness = modulus_shift(line->first, line->second);
        return v;
    }
    if (desc.kind == DomainKind::Parabolic) {
        v.compact = false;
        v.reason = CompactnessVerdict::Reason::ParabolicShear;
        v.shearWitness = aut_group(desc).front().shear;
        return v;
    }
    // A polyhedral log image without lines pins every scaling: the slope
    // equation with k != 0 needs a genuine parabola, and k = 0 needs a line.
    v.compact = true;
    v.reason = CompactnessVerdict::Reason::TorusOnly;
    return v;
}

inline std::string family_name(AutFamily::Tag tag) {
    switch (tag) {
        case AutFamily::Tag::TorusScaling: return "TorusScaling";
        case AutFamily::Tag::TorusWithFlip: return "TorusWithFlip";
        case AutFamily::Tag::MonomialHyperbolic: return "MonomialHyperbolic";
        case AutFamily::Tag::FunctionalFamily: return "FunctionalFamily";
        case AutFamily::Tag::Shear: return "Shear";
    }
    return "?";
}

inline std::string compactness_reason_name(CompactnessVerdict::Reason reason) {
    switch (reason) {
        case CompactnessVerdict::Reason::LineInLogImage: return "LineInLogImage";
        case CompactnessVerdict::Reason::ParabolicShear: return "ParabolicShear";
        case CompactnessVerdict::Reason::TorusOnly: return "TorusOnly";
    }
    return "?";
}

}  // namespace reinhardt
