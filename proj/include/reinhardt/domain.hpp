#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "reinhardt/errors.hpp"
#include "reinhardt/quadext.hpp"
#include "reinhardt/rational.hpp"

namespace reinhardt {

namespace detail {
inline QuadExt qx(const BigInt& n) { return QuadExt(Rat(n)); }
}  // namespace detail

// Open interval (lo, hi) on a log axis; a missing end means infinite.
struct LogInterval {
    std::optional<QuadExt> lo;
    std::optional<QuadExt> hi;

    bool empty() const { return lo && hi && quad_sign(*hi - *lo) <= 0; }
    bool whole() const { return !lo && !hi; }
    bool contains(const QuadExt& x) const {
        if (lo && quad_sign(x - *lo) <= 0) return false;
        if (hi && quad_sign(*hi - x) <= 0) return false;
        return true;
    }

    friend LogInterval intersect(const LogInterval& u, const LogInterval& v) {
        LogInterval out;
        if (u.lo && v.lo)
            out.lo = quad_sign(*u.lo - *v.lo) >= 0 ? u.lo : v.lo;
        else
            out.lo = u.lo ? u.lo : v.lo;
        if (u.hi && v.hi)
            out.hi = quad_sign(*u.hi - *v.hi) <= 0 ? u.hi : v.hi;
        else
            out.hi = u.hi ? u.hi : v.hi;
        return out;
    }

    // Image of the interval under x -> x / lambda (lambda != 0); a negative
    // lambda swaps the ends.
    LogInterval scaled_down(const QuadExt& lambda) const {
        auto div = [&](const std::optional<QuadExt>& v) -> std::optional<QuadExt> {
            if (!v) return std::nullopt;
            return *v / lambda;
        };
        if (quad_sign(lambda) > 0) return LogInterval{div(lo), div(hi)};
        return LogInterval{div(hi), div(lo)};
    }

    LogInterval shifted(const QuadExt& delta) const {
        auto add = [&](const std::optional<QuadExt>& v) -> std::optional<QuadExt> {
            if (!v) return std::nullopt;
            return *v + delta;
        };
        return LogInterval{add(lo), add(hi)};
    }
};

// One strict log-linear condition: lowerLog < alpha1*log|z1| + alpha2*log|z2| < upperLog.
struct MonomialConstraint {
    QuadExt alpha1;
    QuadExt alpha2;
    std::optional<QuadExt> lowerLog;  // nullopt = -infinity
    std::optional<QuadExt> upperLog;  // nullopt = +infinity

    LogInterval bounds() const { return LogInterval{lowerLog, upperLog}; }

    friend bool operator==(const MonomialConstraint& x, const MonomialConstraint& y) {
        return x.alpha1 == y.alpha1 && x.alpha2 == y.alpha2 && x.lowerLog == y.lowerLog &&
               x.upperLog == y.upperLog;
    }
};

// log D = { t < a s^2 + b s + c } with a < 0 (t = log|z1|, s = log|z2|).
struct Parabola {
    Rat a;
    Rat b;
    Rat c;

    friend bool operator==(const Parabola& x, const Parabola& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c;
    }

    Rat eval(const Rat& s) const { return a * s * s + b * s + c; }
};

enum class DomainKind { MonomialPolyhedron, Parabolic };

// Complete description of a pseudoconvex Reinhardt domain in C^2: its log
// image (finitely many monomial slabs, or one downward parabola region) plus
// explicit flags for whether each coordinate axis belongs to the domain.
struct DomainDesc {
    DomainKind kind = DomainKind::MonomialPolyhedron;
    std::vector<MonomialConstraint> constraints;  // empty when kind == Parabolic
    bool axis1Included = false;                   // does D meet {z1 = 0}
    bool axis2Included = false;                   // does D meet {z2 = 0}
    Parabola parabola{};                          // meaningful when kind == Parabolic
};

// Monomial self-map of (C*)^2 extended to C^2 where legal:
// (z1, z2) -> (A z1^k1 z2^k2, B z1^l1 z2^l2), logModulus = (log|A|, log|B|).
// On log coordinates it acts affinely: x -> M x + m with M = [[k1,k2],[l1,l2]].
struct MonomialMap {
    BigInt k1{1}, k2{0}, l1{0}, l2{1};
    QuadExt logModulus1{};
    QuadExt logModulus2{};

    BigInt det() const { return k1 * l2 - k2 * l1; }

    static MonomialMap identity() { return MonomialMap{}; }

    friend bool operator==(const MonomialMap& f, const MonomialMap& g) {
        return f.k1 == g.k1 && f.k2 == g.k2 && f.l1 == g.l1 && f.l2 == g.l2 &&
               f.logModulus1 == g.logModulus1 && f.logModulus2 == g.logModulus2;
    }
};

// g after f.
inline MonomialMap compose(const MonomialMap& g, const MonomialMap& f) {
    using detail::qx;
    MonomialMap h;
    h.k1 = g.k1 * f.k1 + g.k2 * f.l1;
    h.k2 = g.k1 * f.k2 + g.k2 * f.l2;
    h.l1 = g.l1 * f.k1 + g.l2 * f.l1;
    h.l2 = g.l1 * f.k2 + g.l2 * f.l2;
    h.logModulus1 = qx(g.k1) * f.logModulus1 + qx(g.k2) * f.logModulus2 + g.logModulus1;
    h.logModulus2 = qx(g.l1) * f.logModulus1 + qx(g.l2) * f.logModulus2 + g.logModulus2;
    return h;
}

inline MonomialMap inverse(const MonomialMap& m) {
    BigInt d = m.det();
    if (d != 1 && d != -1) throw Error("only unimodular monomial maps invert");
    using detail::qx;
    MonomialMap inv;
    inv.k1 = d * m.l2;
    inv.k2 = -d * m.k2;
    inv.l1 = -d * m.l1;
    inv.l2 = d * m.k1;
    inv.logModulus1 = -(qx(inv.k1) * m.logModulus1 + qx(inv.k2) * m.logModulus2);
    inv.logModulus2 = -(qx(inv.l1) * m.logModulus1 + qx(inv.l2) * m.logModulus2);
    return inv;
}

inline MonomialMap map_power(const MonomialMap& m, long n) {
    MonomialMap base = n >= 0 ? m : inverse(m);
    long cnt = n >= 0 ? n : -n;
    MonomialMap acc = MonomialMap::identity();
    for (long i = 0; i < cnt; ++i) acc = compose(base, acc);
    return acc;
}

// Affine log action of the map on a point (t, s).
inline std::pair<QuadExt, QuadExt> log_image(const MonomialMap& m, const QuadExt& t,
                                             const QuadExt& s) {
    using detail::qx;
    return {qx(m.k1) * t + qx(m.k2) * s + m.logModulus1,
            qx(m.l1) * t + qx(m.l2) * s + m.logModulus2};
}

// ---------------------------------------------------------------------------
// validation

// The shared quadratic field of every component (1 if everything is rational).
// Mixing two different irrational fields is always a hard error.
inline BigInt field_of(const DomainDesc& desc) {
    BigInt d = 1;
    auto visit = [&](const QuadExt& x) {
        if (x.d == 1) return;
        if (d == 1)
            d = x.d;
        else if (d != x.d)
            throw MixedFieldError("description mixes sqrt(" + d.str() + ") and sqrt(" +
                                  x.d.str() + ")");
    };
    for (const auto& c : desc.constraints) {
        visit(c.alpha1);
        visit(c.alpha2);
        if (c.lowerLog) visit(*c.lowerLog);
        if (c.upperLog) visit(*c.upperLog);
    }
    return d;
}

namespace detail {
// Does the constraint tolerate approaching axis j (that log coordinate to
// -infinity)?  alpha_j = 0: yes, the constraint restricts the slice instead;
// alpha_j > 0: the monomial tends to 0, fine iff no lower bound;
// alpha_j < 0: it blows up, fine iff no upper bound.
inline bool admits_axis(const MonomialConstraint& c, int axis) {
    const QuadExt& aj = axis == 1 ? c.alpha1 : c.alpha2;
    int s = quad_sign(aj);
    if (s == 0) return true;
    return s > 0 ? !c.lowerLog.has_value() : !c.upperLog.has_value();
}

// Interval of the surviving log coordinate on the axis-j slice.
inline LogInterval slice_interval(const DomainDesc& desc, int axis) {
    LogInterval iv;  // whole line
    if (desc.kind != DomainKind::MonomialPolyhedron) return iv;
    for (const auto& c : desc.constraints) {
        const QuadExt& aj = axis == 1 ? c.alpha1 : c.alpha2;
        const QuadExt& other = axis == 1 ? c.alpha2 : c.alpha1;
        if (!aj.is_zero()) continue;  // admissibility handled elsewhere
        iv = intersect(iv, c.bounds().scaled_down(other));
    }
    return iv;
}
}  // namespace detail

// Exact emptiness test for the open log polyhedron, by Fourier-Motzkin
// elimination over the quadratic field (strict inequalities throughout).
inline bool nonempty_interior(const DomainDesc& desc) {
    if (desc.kind == DomainKind::Parabolic) return true;
    struct Row {
        QuadExt a, b, c;  // a t + b s < c
    };
    std::vector<Row> rows;
    for (const auto& cst : desc.constraints) {
        if (cst.upperLog) rows.push_back({cst.alpha1, cst.alpha2, *cst.upperLog});
        if (cst.lowerLog) rows.push_back({-cst.alpha1, -cst.alpha2, -*cst.lowerLog});
    }
    std::vector<Row> up, dn, sOnly;
    for (const auto& r : rows) {
        int sg = quad_sign(r.a);
        if (sg == 0)
            sOnly.push_back(r);
        else if (sg > 0)
            up.push_back(r);
        else
            dn.push_back(r);
    }
    for (const auto& u : up)
        for (const auto& d : dn)
            // L(s) < U(s) cross-multiplied by a_u * a_d < 0 flips to
            // (a_u b_d - a_d b_u) s < a_u c_d - a_d c_u.
            sOnly.push_back({QuadExt(0), u.a * d.b - d.a * u.b, u.a * d.c - d.a * u.c});
    LogInterval iv;
    for (const auto& r : sOnly) {
        int sg = quad_sign(r.b);
        if (sg == 0) {
            if (quad_sign(r.c) <= 0) return false;  // 0 < c violated
            continue;
        }
        LogInterval one = sg > 0 ? LogInterval{std::nullopt, r.c / r.b}
                                 : LogInterval{r.c / r.b, std::nullopt};
        iv = intersect(iv, one);
    }
    return !iv.empty();
}

inline std::vector<std::string> validate_issues(const DomainDesc& desc) {
    std::vector<std::string> issues;
    if (desc.kind == DomainKind::Parabolic) {
        if (!desc.constraints.empty())
            issues.push_back("parabolic description must not carry monomial constraints");
        if (desc.parabola.a >= 0) issues.push_back("parabola coefficient a must be negative");
        if (desc.axis2Included)
            issues.push_back("axis 2 cannot belong to a parabolic domain");
        return issues;
    }
    try {
        field_of(desc);
    } catch (const MixedFieldError& e) {
        issues.push_back(e.what());
        return issues;  // later checks would hit the same mismatch
    }
    for (std::size_t i = 0; i < desc.constraints.size(); ++i) {
        const auto& c = desc.constraints[i];
        std::string tag = "constraint " + std::to_string(i);
        if (c.alpha1.is_zero() && c.alpha2.is_zero()) {
            issues.push_back(tag + ": zero normal");
            continue;
        }
        if (!c.lowerLog && !c.upperLog) issues.push_back(tag + ": no finite bound");
        if (c.lowerLog && c.upperLog && quad_sign(*c.upperLog - *c.lowerLog) <= 0)
            issues.push_back(tag + ": empty bound interval");
        if (desc.axis1Included && !detail::admits_axis(c, 1))
            issues.push_back(tag + ": incompatible with included axis 1");
        if (desc.axis2Included && !detail::admits_axis(c, 2))
            issues.push_back(tag + ": incompatible with included axis 2");
    }
    if (!issues.empty()) return issues;
    if (!nonempty_interior(desc)) issues.push_back("log polyhedron has empty interior");
    if (desc.axis1Included && detail::slice_interval(desc, 1).empty())
        issues.push_back("axis 1 marked included but its slice is empty");
    if (desc.axis2Included && detail::slice_interval(desc, 2).empty())
        issues.push_back("axis 2 marked included but its slice is empty");
    return issues;
}

inline void validate(const DomainDesc& desc) {
    auto issues = validate_issues(desc);
    if (issues.empty()) return;
    std::string msg = "invalid domain description:";
    for (const auto& s : issues) msg += "\n  - " + s;
    throw ValidationError(msg);
}

// ---------------------------------------------------------------------------
// canonical form

// Canonical storage: every constraint rescaled so its first nonzero normal
// component is exactly 1, parallel constraints merged by intersecting their
// bound intervals, and the list sorted.  Two descriptions denote the same
// domain iff their canonical forms are identical.
inline DomainDesc canonicalize(const DomainDesc& desc) {
    if (desc.kind == DomainKind::Parabolic) return desc;
    DomainDesc out = desc;
    out.constraints.clear();
    for (const auto& c : desc.constraints) {
        const QuadExt& lead = c.alpha1.is_zero() ? c.alpha2 : c.alpha1;
        if (lead.is_zero()) throw ValidationError("constraint has zero normal");
        MonomialConstraint r;
        r.alpha1 = c.alpha1 / lead;
        r.alpha2 = c.alpha2 / lead;
        LogInterval iv = c.bounds().scaled_down(lead);
        r.lowerLog = iv.lo;
        r.upperLog = iv.hi;
        bool merged = false;
        for (auto& existing : out.constraints) {
            if (existing.alpha1 == r.alpha1 && existing.alpha2 == r.alpha2) {
                LogInterval both = intersect(existing.bounds(), r.bounds());
                existing.lowerLog = both.lo;
                existing.upperLog = both.hi;
                merged = true;
                break;
            }
        }
        if (!merged) out.constraints.push_back(std::move(r));
    }
    auto cmpOpt = [](const std::optional<QuadExt>& x, const std::optional<QuadExt>& y,
                     bool missingIsLow) -> int {
        if (!x && !y) return 0;
        if (!x) return missingIsLow ? -1 : 1;
        if (!y) return missingIsLow ? 1 : -1;
        return quad_sign(*x - *y);
    };
    std::sort(out.constraints.begin(), out.constraints.end(),
              [&](const MonomialConstraint& x, const MonomialConstraint& y) {
                  int c = quad_sign(x.alpha1 - y.alpha1);
                  if (c != 0) return c < 0;
                  c = quad_sign(x.alpha2 - y.alpha2);
                  if (c != 0) return c < 0;
                  c = cmpOpt(x.lowerLog, y.lowerLog, true);
                  if (c != 0) return c < 0;
                  return cmpOpt(x.upperLog, y.upperLog, false) < 0;
              });
    return out;
}

inline bool desc_equal(const DomainDesc& x, const DomainDesc& y) {
    DomainDesc cx = canonicalize(x), cy = canonicalize(y);
    if (cx.kind != cy.kind) return false;
    if (cx.axis1Included != cy.axis1Included || cx.axis2Included != cy.axis2Included)
        return false;
    if (cx.kind == DomainKind::Parabolic) return cx.parabola == cy.parabola;
    return cx.constraints == cy.constraints;
}

// ---------------------------------------------------------------------------
// geometric queries

// A direction spanned by every affine line inside the log image, if any.
// All normals parallel => the common kernel direction; no constraints => any
// direction (reported as (1, 0)).  Parabolic log images contain no line.
inline std::optional<std::pair<QuadExt, QuadExt>> contains_line(const DomainDesc& desc0) {
    if (desc0.kind == DomainKind::Parabolic) return std::nullopt;
    DomainDesc desc = canonicalize(desc0);
    if (desc.constraints.empty()) return std::make_pair(QuadExt(1), QuadExt(0));
    const auto& first = desc.constraints.front();
    for (const auto& c : desc.constraints) {
        QuadExt cross = first.alpha1 * c.alpha2 - first.alpha2 * c.alpha1;
        if (!cross.is_zero()) return std::nullopt;
    }
    return std::make_pair(-first.alpha2, first.alpha1);
}

enum class FullType { NotFull, C2, CxCstar, CstarxC, Cstar2 };

inline FullType full_type(const DomainDesc& desc) {
    if (desc.kind == DomainKind::Parabolic || !desc.constraints.empty()) return FullType::NotFull;
    if (desc.axis1Included && desc.axis2Included) return FullType::C2;
    if (desc.axis1Included) return FullType::CxCstar;
    if (desc.axis2Included) return FullType::CstarxC;
    return FullType::Cstar2;
}

inline bool origin_included(const DomainDesc& desc) {
    if (desc.kind == DomainKind::Parabolic) return false;
    if (!desc.axis1Included || !desc.axis2Included) return false;
    for (const auto& c : desc.constraints) {
        if (quad_sign(c.alpha1) < 0 || quad_sign(c.alpha2) < 0) return false;
        if (c.lowerLog) return false;
    }
    return true;
}

struct SliceInfo {
    bool included = false;  // axis flag on the description
    LogInterval interval;   // log range of the surviving coordinate
    bool nonempty = false;  // included and interval nonempty
    bool wholeLine = false; // interval is all of R (slice is C or C*)
};

struct SlicesReport {
    SliceInfo slice1, slice2;
    std::vector<int> nonHyperbolicAxes;  // axes with a nonempty C/C* slice
    int nonemptyCount = 0;               // the count written t(D)
};

inline SlicesReport axis_slices(const DomainDesc& desc0) {
    DomainDesc desc = canonicalize(desc0);
    SlicesReport rep;
    auto one = [&](int axis) {
        SliceInfo s;
        s.included = axis == 1 ? desc.axis1Included : desc.axis2Included;
        s.interval = detail::slice_interval(desc, axis);
        s.nonempty = s.included && !s.interval.empty();
        s.wholeLine = s.interval.whole();
        return s;
    };
    rep.slice1 = one(1);
    rep.slice2 = one(2);
    rep.nonemptyCount = int(rep.slice1.nonempty) + int(rep.slice2.nonempty);
    if (rep.slice1.nonempty && rep.slice1.wholeLine) rep.nonHyperbolicAxes.push_back(1);
    if (rep.slice2.nonempty && rep.slice2.wholeLine) rep.nonHyperbolicAxes.push_back(2);
    return rep;
}

// D with its non-hyperbolic axis slices removed (flags cleared; the log
// image is untouched).
inline DomainDesc hyperbolic_reduction(const DomainDesc& desc0) {
    DomainDesc out = canonicalize(desc0);
    auto rep = axis_slices(out);
    for (int j : rep.nonHyperbolicAxes) {
        if (j == 1) out.axis1Included = false;
        if (j == 2) out.axis2Included = false;
    }
    return out;
}

struct HyperbolicityReport {
    bool hyperbolic = false;
    std::optional<std::pair<QuadExt, QuadExt>> lineDirection;  // obstruction 1
    std::vector<int> nonHyperbolicAxes;                        // obstruction 2
};

// Kobayashi hyperbolicity: obstructed exactly by a line in the log image or
// by an axis slice equal to C or C*.
inline HyperbolicityReport hyperbolicity(const DomainDesc& desc) {
    HyperbolicityReport rep;
    rep.lineDirection = contains_line(desc);
    rep.nonHyperbolicAxes = axis_slices(desc).nonHyperbolicAxes;
    rep.hyperbolic = !rep.lineDirection && rep.nonHyperbolicAxes.empty();
    return rep;
}

// Exact membership of a log point (finite coordinates, so interior of the
// (C*)^2 part only).
inline bool log_contains(const DomainDesc& desc, const QuadExt& t, const QuadExt& s) {
    if (desc.kind == DomainKind::Parabolic) {
        QuadExt psi = QuadExt(desc.parabola.a) * s * s + QuadExt(desc.parabola.b) * s +
                      QuadExt(desc.parabola.c);
        return quad_sign(psi - t) > 0;
    }
    for (const auto& c : desc.constraints) {
        QuadExt v = c.alpha1 * t + c.alpha2 * s;
        if (!c.bounds().contains(v)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// transport along monomial maps

// Image description of desc under the map.  The exponent matrix must be
// unimodular; each included axis must land on an axis (column of the form
// (+,0) or (0,+)), otherwise the geometric image is not a Reinhardt domain
// of our class and AxisAmbiguityError is raised.
inline DomainDesc transform(const DomainDesc& desc0, const MonomialMap& map) {
    BigInt dt = map.det();
    if (dt != 1 && dt != -1) throw Error("transform requires a unimodular exponent matrix");
    DomainDesc desc = canonicalize(desc0);

    if (desc.kind == DomainKind::Parabolic) {
        // Only shear-shaped maps (z1 z2^k A, z2^eps B) preserve the class.
        if (!(map.k1 == 1 && map.l1 == 0 && (map.l2 == 1 || map.l2 == -1)))
            throw Error("parabolic descriptions transform only under shear-shaped maps");
        if (!map.logModulus1.is_rational() || !map.logModulus2.is_rational())
            throw Error("parabolic transforms require rational log moduli");
        Rat A = map.logModulus1.a, B = map.logModulus2.a;
        Rat k(map.k2), eps(map.l2);
        const Parabola& p = desc.parabola;
        DomainDesc out = desc;
        // t' = A + t + k s, s' = B + eps s conjugates t < psi(s) into
        // t' < psi'(s') with:
        out.parabola.a = p.a;
        out.parabola.b = -2 * p.a * B + eps * (p.b + k);
        out.parabola.c = p.a * B * B - eps * (p.b + k) * B + A + p.c;
        return out;
    }

    using detail::qx;
    MonomialMap inv = inverse(map);
    DomainDesc out;
    out.kind = DomainKind::MonomialPolyhedron;
    for (const auto& c : desc.constraints) {
        MonomialConstraint nc;
        nc.alpha1 = c.alpha1 * qx(inv.k1) + c.alpha2 * qx(inv.l1);
        nc.alpha2 = c.alpha1 * qx(inv.k2) + c.alpha2 * qx(inv.l2);
        QuadExt shift = nc.alpha1 * map.logModulus1 + nc.alpha2 * map.logModulus2;
        LogInterval iv = c.bounds().shifted(shift);
        nc.lowerLog = iv.lo;
        nc.upperLog = iv.hi;
        out.constraints.push_back(std::move(nc));
    }
    auto land = [&](const BigInt& top, const BigInt& bot, int which) -> int {
        if (top > 0 && bot == 0) return 1;
        if (bot > 0 && top == 0) return 2;
        throw AxisAmbiguityError("axis " + std::to_string(which) +
                                 " does not map onto an axis under this matrix");
    };
    if (desc.axis1Included) {
        int tgt = land(map.k1, map.l1, 1);
        (tgt == 1 ? out.axis1Included : out.axis2Included) = true;
    }
    if (desc.axis2Included) {
        int tgt = land(map.k2, map.l2, 2);
        (tgt == 1 ? out.axis1Included : out.axis2Included) = true;
    }
    return canonicalize(out);
}

// ---------------------------------------------------------------------------
// construction helpers

// (z1, z2) -> (z2, z1)
inline MonomialMap swap_map() {
    MonomialMap m;
    m.k1 = 0;
    m.k2 = 1;
    m.l1 = 1;
    m.l2 = 0;
    return m;
}

// (z1, z2) -> (1/z1, z2)
inline MonomialMap invert_z1() {
    MonomialMap m;
    m.k1 = -1;
    return m;
}

// (z1, z2) -> (z1, 1/z2)
inline MonomialMap flip_z2() {
    MonomialMap m;
    m.l2 = -1;
    return m;
}

// (z1, z2) -> (z1 z2^k, z2)
inline MonomialMap shear_map(const BigInt& k) {
    MonomialMap m;
    m.k2 = k;
    return m;
}

// (z1, z2) -> (A z1, B z2) with log|A| = d1, log|B| = d2
inline MonomialMap modulus_shift(const QuadExt& d1, const QuadExt& d2) {
    MonomialMap m;
    m.logModulus1 = d1;
    m.logModulus2 = d2;
    return m;
}

inline MonomialConstraint make_constraint(const QuadExt& a1, const QuadExt& a2,
                                          std::optional<QuadExt> lo, std::optional<QuadExt> hi) {
    return MonomialConstraint{a1, a2, std::move(lo), std::move(hi)};
}

inline DomainDesc make_polyhedron(std::vector<MonomialConstraint> cs, bool axis1, bool axis2) {
    DomainDesc d;
    d.kind = DomainKind::MonomialPolyhedron;
    d.constraints = std::move(cs);
    d.axis1Included = axis1;
    d.axis2Included = axis2;
    return d;
}

inline DomainDesc make_parabolic(const Rat& a, const Rat& b, const Rat& c, bool axis1) {
    DomainDesc d;
    d.kind = DomainKind::Parabolic;
    d.parabola = Parabola{a, b, c};
    d.axis1Included = axis1;
    d.axis2Included = false;
    return d;
}

inline std::string format_constraint(const MonomialConstraint& c) {
    std::string lo = c.lowerLog ? format_quad(*c.lowerLog) : "-inf";
    std::string hi = c.upperLog ? format_quad(*c.upperLog) : "+inf";
    return lo + " < (" + format_quad(c.alpha1) + ")*t + (" + format_quad(c.alpha2) + ")*s < " +
           hi;
}

}  // namespace reinhardt
