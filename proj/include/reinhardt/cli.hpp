#pragma once

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "reinhardt/automorphisms.hpp"
#include "reinhardt/domain.hpp"
#include "reinhardt/errors.hpp"
#include "reinhardt/io.hpp"
#include "reinhardt/normal_form.hpp"
#include "reinhardt/pell.hpp"
#include "reinhardt/proper_maps.hpp"
#include "reinhardt/verdicts.hpp"

namespace reinhardt {

// Outcome of one CLI invocation.  `rendered()` is what goes to stdout;
// `diagnostics` goes to stderr.  Exit codes: 0 the command decided (including
// negative answers such as "no proper map exists"), 2 the input was invalid
// (bad flags, unreadable or non-canonical files, points outside the domain),
// 3 the input is valid but outside what the classification covers
// (hyperbolic domains, shapes with no strip model, unmatched form pairs).
struct Report {
    int exitCode = 0;
    std::string format = "text";
    Json payload = Json::object();
    std::string text;
    std::string diagnostics;

    std::string rendered() const {
        if (format == "json") return payload.dump(2) + "\n";
        return text;
    }
};

namespace cli_detail {

inline std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline DomainDesc load_domain(const std::string& path) {
    try {
        return parse_domain_file(slurp(path));
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    } catch (const ValidationError& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

// Integers land in JSON as numbers while they fit in 64 bits and as decimal
// strings beyond that; Pell coordinates are always strings because they
// outgrow doubles quickly and consumers should not round them.
inline Json emit_big(const BigInt& n) {
    static const BigInt lo(std::numeric_limits<std::int64_t>::min());
    static const BigInt hi(std::numeric_limits<std::int64_t>::max());
    if (lo <= n && n <= hi) return n.convert_to<std::int64_t>();
    return n.str();
}

inline Json emit_entries(const BigInt& k1, const BigInt& k2, const BigInt& l1,
                         const BigInt& l2) {
    Json j;
    j["k1"] = emit_big(k1);
    j["k2"] = emit_big(k2);
    j["l1"] = emit_big(l1);
    j["l2"] = emit_big(l2);
    return j;
}

inline Json emit_monomial_map(const MonomialMap& m) {
    Json j = emit_entries(m.k1, m.k2, m.l1, m.l2);
    j["logModulus1"] = format_quad(m.logModulus1);
    j["logModulus2"] = format_quad(m.logModulus2);
    return j;
}

inline Json emit_shear(const ShearAut& s) {
    Json j;
    j["epsilon"] = s.epsilon;
    j["k"] = emit_big(s.k);
    j["logA"] = format_quad(s.logA);
    j["logB"] = format_quad(s.logB);
    return j;
}

inline std::string entries_text(const BigInt& k1, const BigInt& k2, const BigInt& l1,
                                const BigInt& l2) {
    return "[[" + k1.str() + ", " + k2.str() + "], [" + l1.str() + ", " + l2.str() + "]]";
}

inline std::string normal_form_tag(const NormalForm& nf) {
    switch (nf.tag) {
        case NormalForm::Tag::FormA: return "FormA";
        case NormalForm::Tag::FormB: return "FormB";
        case NormalForm::Tag::FormC: return "FormC";
        case NormalForm::Tag::ProductD: return "ProductD";
        case NormalForm::Tag::FormE: return "FormE";
        case NormalForm::Tag::FormF: return "FormF";
        case NormalForm::Tag::Full: return "Full";
    }
    return "?";
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

struct Lines {
    std::string out;
    void add(const std::string& line) { out += line + "\n"; }
};

}  // namespace cli_detail

inline Report run_command(const std::vector<std::string>& args) {
    using cli_detail::emit_big;
    using cli_detail::emit_entries;
    using cli_detail::Lines;

    Report rep;

    CLI::App app{"exact classification of pseudoconvex Reinhardt domains in C^2"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    std::string file, srcPath, dstPath, atSpec, pSpec, qSpec;
    long long dValue = 0;
    std::size_t count = 1;
    long long bound = 10;
    bool wantWitness = false;

    CLI::App* cmdClassify = app.add_subcommand("classify", "report a domain's shape class");
    cmdClassify->add_option("file", file, "domain description (JSON)")->required();

    CLI::App* cmdSerre = app.add_subcommand("serre", "decide membership in the Serre class S");
    cmdSerre->add_option("file", file, "domain description (JSON)")->required();

    CLI::App* cmdAut = app.add_subcommand("aut", "list automorphism families and compactness");
    cmdAut->add_option("file", file, "domain description (JSON)")->required();
    cmdAut->add_flag("--witness", wantWitness, "include the non-compactness witness");

    CLI::App* cmdNormal =
        app.add_subcommand("normal-form", "reduce a strip-shaped domain to its model");
    cmdNormal->add_option("file", file, "domain description (JSON)")->required();

    CLI::App* cmdPell = app.add_subcommand("pell", "fundamental Pell solutions for x^2 - D y^2 = 1");
    cmdPell->add_option("--d", dValue, "non-square discriminant D")->required();
    cmdPell->add_option("--count", count, "number of solutions")->check(CLI::PositiveNumber);

    CLI::App* cmdPellAut =
        app.add_subcommand("pell-aut", "unimodular matrix fixing the slope p + sqrt(q)");
    cmdPellAut->add_option("--p", pSpec, "rational part p")->required();
    cmdPellAut->add_option("--q", qSpec, "radicand q (positive rational, not a square)")->required();

    CLI::App* cmdProper =
        app.add_subcommand("proper", "proper monomial maps between two domains");
    cmdProper->add_option("src", srcPath, "source domain (JSON)")->required();
    cmdProper->add_option("dst", dstPath, "target domain (JSON)")->required();
    cmdProper->add_option("--bound", bound, "search box for the pointed case")
        ->check(CLI::PositiveNumber);

    CLI::App* cmdStehle =
        app.add_subcommand("stehle", "evaluate the invariant exhaustion function");
    cmdStehle->add_option("file", file, "domain description (JSON)")->required();
    cmdStehle->add_option("--at", atSpec, "log coordinates \"t,s\" (rationals)")->required();

    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        rep.format = format;
        rep.text = app.help();
        rep.payload = Json{{"help", app.help()}};
        return rep;
    } catch (const CLI::ParseError& e) {
        rep.format = format;
        rep.exitCode = 2;
        rep.diagnostics = std::string("error: ") + e.what() + "\n";
        rep.payload = Json{{"command", "usage"}, {"error", e.what()}};
        rep.text = rep.diagnostics;
        return rep;
    }

    rep.format = format;
    Json& p = rep.payload;
    Lines lines;

    try {
        if (cmdClassify->parsed()) {
            DomainDesc desc = cli_detail::load_domain(file);
            HyperbolicityReport hyp = hyperbolicity(desc);
            p["command"] = "classify";
            p["hyperbolic"] = hyp.hyperbolic;
            p["kind"] = desc.kind == DomainKind::Parabolic ? "parabolic" : "monomial";
            std::string shape;
            Json name = nullptr;
            Json strip = nullptr;
            if (hyp.hyperbolic) {
                shape = "Hyperbolic";
            } else if (desc.kind == DomainKind::Parabolic) {
                shape = "Parabolic";
            } else {
                try {
                    NormalForm nf = classify_normal_form(desc);
                    name = normal_form_name(nf);
                    if (nf.tag == NormalForm::Tag::Full) {
                        shape = "Full";
                    } else {
                        shape = "Strip";
                        strip = strip_type(desc) == StripType::Rational ? "Rational"
                                                                        : "Irrational";
                    }
                } catch (const NotAStripError&) {
                    shape = "NoLinePolyhedron";
                }
            }
            p["shape"] = shape;
            p["normalForm"] = name;
            p["stripType"] = strip;
            lines.add("shape: " + shape);
            lines.add("kind: " + p["kind"].get<std::string>());
            lines.add("hyperbolic: " + cli_detail::yes_no(hyp.hyperbolic));
            if (!name.is_null()) lines.add("normal form: " + name.get<std::string>());
            if (!strip.is_null()) lines.add("strip type: " + strip.get<std::string>());
        } else if (cmdSerre->parsed()) {
            DomainDesc desc = cli_detail::load_domain(file);
            SerreVerdict v = serre_verdict(desc);
            p["command"] = "serre";
            p["branch"] = branch_name(v.branch);
            if (v.branch == SerreVerdict::Branch::HyperbolicOutOfScope) {
                p["inS"] = nullptr;
                p["normalForm"] = nullptr;
                p["witness"] = nullptr;
                rep.exitCode = 3;
                rep.diagnostics =
                    "note: the domain is hyperbolic; the classification covers only "
                    "non-hyperbolic domains, so no verdict is issued\n";
                lines.add("branch: " + branch_name(v.branch));
                lines.add("in S: not decided (hyperbolic domain)");
            } else {
                p["inS"] = v.inS;
                p["normalForm"] =
                    v.normalForm ? Json(normal_form_name(*v.normalForm)) : Json(nullptr);
                p["witness"] = v.witness ? emit_entries(v.witness->k1, v.witness->k2,
                                                        v.witness->l1, v.witness->l2)
                                         : Json(nullptr);
                lines.add("branch: " + branch_name(v.branch));
                lines.add("in S: " + cli_detail::yes_no(v.inS));
                if (v.normalForm)
                    lines.add("normal form: " + normal_form_name(*v.normalForm));
                if (v.witness)
                    lines.add("witness: " + cli_detail::entries_text(v.witness->k1, v.witness->k2,
                                                                     v.witness->l1, v.witness->l2));
            }
        } else if (cmdAut->parsed()) {
            DomainDesc desc = cli_detail::load_domain(file);
            CompactnessVerdict cv = compactness(desc);
            p["command"] = "aut";
            p["compact"] = cv.compact;
            p["reason"] = compactness_reason_name(cv.reason);
            Json families = nullptr;
            std::string familyNote;
            try {
                families = Json::array();
                for (const AutFamily& fam : aut_group(desc)) {
                    Json jf;
                    jf["tag"] = family_name(fam.tag);
                    jf["note"] = fam.note;
                    switch (fam.tag) {
                        case AutFamily::Tag::TorusScaling:
                        case AutFamily::Tag::TorusWithFlip:
                            jf["alpha"] = format_quad(fam.alpha);
                            break;
                        case AutFamily::Tag::MonomialHyperbolic:
                            jf["alpha"] = format_quad(fam.alpha);
                            jf["generator"] = emit_entries(fam.generator.k1, fam.generator.k2,
                                                           fam.generator.l1, fam.generator.l2);
                            break;
                        case AutFamily::Tag::FunctionalFamily:
                            jf["caseId"] = fam.caseId;
                            break;
                        case AutFamily::Tag::Shear:
                            jf["shear"] = cli_detail::emit_shear(fam.shear);
                            break;
                    }
                    families.push_back(jf);
                }
            } catch (const UnclassifiedError& e) {
                families = nullptr;
                familyNote = e.what();
            }
            p["families"] = families;
            if (wantWitness) {
                if (cv.mapWitness)
                    p["witness"] = cli_detail::emit_monomial_map(*cv.mapWitness);
                else if (cv.shearWitness)
                    p["witness"] = cli_detail::emit_shear(*cv.shearWitness);
                else
                    p["witness"] = nullptr;
            }
            lines.add("compact: " + cli_detail::yes_no(cv.compact));
            lines.add("reason: " + compactness_reason_name(cv.reason));
            if (families.is_null()) {
                lines.add("families: not classified (" + familyNote + ")");
                rep.exitCode = 3;
                rep.diagnostics = "note: " + familyNote + "\n";
            } else {
                for (const Json& jf : families) {
                    std::string line = "family: " + jf["tag"].get<std::string>();
                    if (jf.contains("alpha")) line += ", alpha = " + jf["alpha"].get<std::string>();
                    if (jf.contains("caseId"))
                        line += ", case " + std::to_string(jf["caseId"].get<int>());
                    lines.add(line);
                }
            }
            if (wantWitness && p.contains("witness") && !p["witness"].is_null())
                lines.add("witness: " + p["witness"].dump());
        } else if (cmdNormal->parsed()) {
            DomainDesc desc = cli_detail::load_domain(file);
            NormalForm nf = classify_normal_form(desc);
            p["command"] = "normal-form";
            p["name"] = normal_form_name(nf);
            p["tag"] = cli_detail::normal_form_tag(nf);
            bool irrationalTag = nf.tag == NormalForm::Tag::FormA ||
                                 nf.tag == NormalForm::Tag::FormB ||
                                 nf.tag == NormalForm::Tag::FormC;
            bool rationalTag =
                nf.tag == NormalForm::Tag::FormE || nf.tag == NormalForm::Tag::FormF;
            p["beta"] = irrationalTag ? Json(format_quad(nf.beta)) : Json(nullptr);
            p["logR"] =
                nf.tag == NormalForm::Tag::FormC ? Json(format_quad(nf.logR)) : Json(nullptr);
            p["p"] = rationalTag ? emit_big(nf.p) : Json(nullptr);
            p["q"] = rationalTag ? emit_big(nf.q) : Json(nullptr);
            p["witness"] = cli_detail::emit_monomial_map(nf.witness);
            p["canonical"] = emit_domain_file(nf.canonical);
            p["steps"] = nf.steps;
            lines.add("normal form: " + normal_form_name(nf));
            lines.add("witness: " + cli_detail::entries_text(nf.witness.k1, nf.witness.k2,
                                                             nf.witness.l1, nf.witness.l2));
            for (const auto& step : nf.steps) lines.add("step: " + step);
        } else if (cmdPell->parsed()) {
            PellSolution fund = pell_fundamental(BigInt(dValue));
            std::vector<PellSolution> sols = pell_iterate(fund, count);
            p["command"] = "pell";
            p["d"] = emit_big(fund.D);
            Json list = Json::array();
            for (const PellSolution& s : sols) {
                Json js;
                js["index"] = s.index;
                js["x"] = s.x.str();
                js["y"] = s.y.str();
                list.push_back(js);
                lines.add("index " + std::to_string(s.index) + ": x = " + s.x.str() +
                          ", y = " + s.y.str());
            }
            p["solutions"] = list;
        } else if (cmdPellAut->parsed()) {
            Rat pRat = parse_rat(pSpec);
            Rat qRat = parse_rat(qSpec);
            PNQData pnq = alpha_to_pnq(pRat, qRat);
            PellSolution fund = pell_fundamental(pnq.pell_modulus());
            AutMatrix m = matrix_from_pell(pnq, fund);
            p["command"] = "pell-aut";
            p["p"] = format_rat(pRat);
            p["q"] = format_rat(qRat);
            p["pellD"] = emit_big(fund.D);
            p["solution"] = Json{{"x", fund.x.str()}, {"y", fund.y.str()}};
            p["matrix"] = emit_entries(m.k1, m.k2, m.l1, m.l2);
            p["det"] = emit_big(m.det());
            p["trace"] = emit_big(m.trace());
            lines.add("slope: " + format_rat(pRat) + " + sqrt(" + format_rat(qRat) + ")");
            lines.add("pell: D = " + fund.D.str() + ", (x, y) = (" + fund.x.str() + ", " +
                      fund.y.str() + ")");
            lines.add("matrix: " + cli_detail::entries_text(m.k1, m.k2, m.l1, m.l2));
            lines.add("det: " + m.det().str() + ", trace: " + m.trace().str());
        } else if (cmdProper->parsed()) {
            DomainDesc src = cli_detail::load_domain(srcPath);
            DomainDesc dst = cli_detail::load_domain(dstPath);
            NormalForm nfSrc = classify_normal_form(src);
            NormalForm nfDst = classify_normal_form(dst);
            p["command"] = "proper";
            p["src"] = normal_form_name(nfSrc);
            p["dst"] = normal_form_name(nfDst);
            std::optional<ProperMapAnswer> answer;
            std::string caseName;
            if (nfSrc.tag == NormalForm::Tag::FormB && nfDst.tag == NormalForm::Tag::FormB) {
                caseName = "pointed";
                answer = proper_pointed(nfSrc.beta, nfDst.beta, bound);
            } else if (nfSrc.tag == NormalForm::Tag::FormC &&
                       nfDst.tag == NormalForm::Tag::FormC) {
                caseName = "annuli";
                answer = proper_annuli(nfSrc.beta, nfSrc.logR, nfDst.beta, nfDst.logR);
            } else if (nfSrc.tag == NormalForm::Tag::FormA &&
                       nfDst.tag == NormalForm::Tag::FormA) {
                caseName = "full";
                answer = proper_full(nfSrc.beta, nfDst.beta);
            }
            if (!answer) {
                p["case"] = nullptr;
                p["exists"] = nullptr;
                p["family"] = nullptr;
                p["certificate"] = nullptr;
                p["refutation"] = nullptr;
                p["scalarConstraint"] = nullptr;
                rep.exitCode = 3;
                rep.diagnostics = "note: no decision procedure for the pair " +
                                  normal_form_name(nfSrc) + " -> " + normal_form_name(nfDst) +
                                  "; only half-plane, punctured, and two-sided irrational "
                                  "strips are covered\n";
                lines.add("src: " + normal_form_name(nfSrc));
                lines.add("dst: " + normal_form_name(nfDst));
                lines.add("proper maps: not decided for this pair of forms");
            } else {
                p["case"] = caseName;
                p["exists"] = answer->exists;
                if (answer->exists) {
                    Json family = Json::array();
                    for (const ExponentMatrix& m : answer->familyDescription)
                        family.push_back(emit_entries(m.k1, m.k2, m.l1, m.l2));
                    p["family"] = family;
                    p["certificate"] =
                        answer->certificate
                            ? emit_entries(answer->certificate->k1, answer->certificate->k2,
                                           answer->certificate->l1, answer->certificate->l2)
                            : Json(nullptr);
                    p["scalarConstraint"] = answer->scalarConstraint.empty()
                                                ? Json(nullptr)
                                                : Json(answer->scalarConstraint);
                    p["refutation"] = nullptr;
                } else {
                    p["family"] = nullptr;
                    p["certificate"] = nullptr;
                    p["scalarConstraint"] = nullptr;
                    p["refutation"] = refutation_name(answer->refutation);
                }
                lines.add("src: " + normal_form_name(nfSrc));
                lines.add("dst: " + normal_form_name(nfDst));
                lines.add("case: " + caseName);
                lines.add("exists: " + cli_detail::yes_no(answer->exists));
                if (answer->exists) {
                    for (const ExponentMatrix& m : answer->familyDescription)
                        lines.add("exponents: " +
                                  cli_detail::entries_text(m.k1, m.k2, m.l1, m.l2));
                    if (!answer->scalarConstraint.empty())
                        lines.add("scalars: " + answer->scalarConstraint);
                } else {
                    lines.add("refutation: " + refutation_name(answer->refutation));
                }
            }
        } else if (cmdStehle->parsed()) {
            DomainDesc desc = cli_detail::load_domain(file);
            auto comma = atSpec.find(',');
            if (comma == std::string::npos)
                throw ParseError("--at expects \"t,s\" with two rational entries");
            Rat tCoord = parse_rat(atSpec.substr(0, comma));
            Rat sCoord = parse_rat(atSpec.substr(comma + 1));
            std::optional<StehleWitness> w = stehle_witness_for(desc);
            p["command"] = "stehle";
            if (!w) {
                p["formula"] = nullptr;
                p["at"] = Json::array({format_rat(tCoord), format_rat(sCoord)});
                p["modelPoint"] = nullptr;
                p["value"] = nullptr;
                rep.exitCode = 3;
                rep.diagnostics =
                    "note: no published exhaustion formula covers this domain's branch\n";
                lines.add("formula: none for this branch");
            } else {
                QuadExt tModel{Rat(tCoord)};
                QuadExt sModel{Rat(sCoord)};
                if (w->formula != StehleWitness::Formula::UPsi) {
                    NormalForm nf = classify_normal_form(desc);
                    auto moved = log_image(nf.witness, tModel, sModel);
                    tModel = moved.first;
                    sModel = moved.second;
                }
                double value = stehle_eval(*w, to_double(tModel), to_double(sModel));
                p["formula"] = formula_name(w->formula);
                p["at"] = Json::array({format_rat(tCoord), format_rat(sCoord)});
                p["modelPoint"] = Json::array({format_quad(tModel), format_quad(sModel)});
                p["value"] = value;
                lines.add("formula: " + formula_name(w->formula));
                lines.add("model point: (" + format_quad(tModel) + ", " + format_quad(sModel) +
                          ")");
                std::ostringstream vs;
                vs.precision(17);
                vs << value;
                lines.add("value: " + vs.str());
            }
        }
    } catch (const NotAStripError& e) {
        rep.exitCode = 3;
        rep.diagnostics = std::string("note: ") + e.what() + "\n";
        p["error"] = e.what();
    } catch (const HyperbolicInputError& e) {
        rep.exitCode = 3;
        rep.diagnostics = std::string("note: ") + e.what() + "\n";
        p["error"] = e.what();
    } catch (const UnclassifiedError& e) {
        rep.exitCode = 3;
        rep.diagnostics = std::string("note: ") + e.what() + "\n";
        p["error"] = e.what();
    } catch (const MaxTermsError& e) {
        rep.exitCode = 3;
        rep.diagnostics = std::string("note: ") + e.what() + "\n";
        p["error"] = e.what();
    } catch (const Error& e) {
        rep.exitCode = 2;
        rep.diagnostics = std::string("error: ") + e.what() + "\n";
        p["error"] = e.what();
    }

    rep.text = lines.out;
    return rep;
}

}  // namespace reinhardt
