#pragma once

#include "knotcert/certify.hpp"

#include <json.hpp>

#include <sstream>
#include <string>

namespace knotcert {

using nlohmann::json;

inline json to_json(const Laurent& p) {
    json coeffs = json::array();
    for (const auto& [e, c] : p.terms()) coeffs.push_back({e, c.get_str()});
    return json{{"str", p.str()}, {"coeffs", coeffs}};
}

inline json to_json(const CertPremise& p) {
    return json{{"name", p.name},
                {"mode", p.mode == PremiseMode::Checked ? "checked" : "assumed"},
                {"passed", p.passed},
                {"value", p.value}};
}

inline json to_json(const Certificate& c) {
    json prem = json::array();
    for (const auto& p : c.premises) prem.push_back(to_json(p));
    json out{{"conclusion", conclusion_str(c.conclusion)},
             {"status", c.certified ? "certified" : "not-certified"},
             {"theorem_chain", c.theorem_chain},
             {"premises", prem}};
    if (!c.note.empty()) out["note"] = c.note;
    return out;
}

inline json to_json(const AnisotropyVerdict& v) {
    auto prem = [](const PremiseRecord& p) {
        return json{{"name", p.name}, {"passed", p.passed}, {"value", p.value}};
    };
    return json{{"status", v.certified ? "certified-anisotropic" : "not-certified"},
                {"premises", json::array({prem(v.no_rational_roots), prem(v.signature_bound)})}};
}

inline json to_json(const InvariantReport& r) {
    json out;
    out["presentation"] = {{"kind", r.presentation_kind}, {"text", r.presentation_text}};
    if (r.crossing_count >= 0) out["crossings"] = r.crossing_count;
    out["positivity"] = positivity_str(r.positivity);
    out["genus"] = r.genus;
    out["genus_source"] = r.genus_from_matrix ? "matrix" : "diagram";
    out["alexander"] = to_json(r.delta);
    out["alexander_degree"] = r.d;
    {
        json cs = json::array();
        for (const auto& c : r.nabla.coeff) cs.push_back(c.get_str());
        out["conway"] = {{"str", r.nabla.str()},
                         {"coeffs", cs},
                         {"nonnegative", r.nabla.all_nonnegative()}};
    }
    out["signature"] = r.sigma;
    {
        json roots = json::array();
        for (const auto& rt : r.roots.roots) {
            json j{{"root", rt.value.get_str()}};
            j["witness"] = rt.witness ? json(rt.witness->get_str()) : json(nullptr);
            roots.push_back(j);
        }
        out["rational_roots"] = roots;
    }
    out["real_roots"] = {{"negative_axis", r.real_roots_negative_axis},
                         {"positive_axis", r.real_roots_positive_axis}};
    if (r.factors) {
        json fs = json::array();
        for (const auto& f : r.factors->factors) fs.push_back(f.str());
        out["invariant_factors"] = fs;
    } else {
        out["invariant_factors"] = nullptr;
        out["invariant_factors_error"] = "nonsingular Seifert matrix required";
    }
    out["oracle_checked"] = r.oracle_checked;
    {
        json m = json::array();
        for (const auto& row : r.matrix.v) {
            json jr = json::array();
            for (const auto& e : row) jr.push_back(e.get_str());
            m.push_back(jr);
        }
        out["seifert_matrix"] = m;
    }
    out["certificates"] =
        json::array({to_json(r.band_prime), to_json(r.minimal), to_json(r.module_rigidity)});
    out["anisotropy"] = to_json(r.anisotropy);
    return out;
}

inline std::string render_text(const InvariantReport& r) {
    std::ostringstream os;
    os << "presentation   " << r.presentation_kind << "  " << r.presentation_text << "\n";
    if (r.crossing_count >= 0)
        os << "diagram        " << r.crossing_count << " crossings, "
           << positivity_str(r.positivity) << ", seifert circles " << r.surface.circle_count
           << "\n";
    os << "genus          " << r.genus << (r.genus_from_matrix ? " (from matrix)" : "") << "\n";
    os << "alexander      " << r.delta.str() << "   (d = " << r.d << ")\n";
    os << "conway         " << r.nabla.str()
       << (r.nabla.all_nonnegative() ? "   [coefficients >= 0]" : "") << "\n";
    os << "signature      " << r.sigma << "\n";
    os << "rational roots ";
    if (r.roots.roots.empty()) {
        os << "none\n";
    } else {
        for (std::size_t i = 0; i < r.roots.roots.size(); ++i) {
            const auto& rt = r.roots.roots[i];
            os << (i ? ", " : "") << rt.value.get_str() << " (a = "
               << (rt.witness ? rt.witness->get_str() : std::string("none")) << ")";
        }
        os << "\n";
    }
    os << "real roots     " << r.real_roots_negative_axis << " in (-inf,0), "
       << r.real_roots_positive_axis << " in (0,inf)\n";
    os << "factors        ";
    if (r.factors) {
        if (r.factors->factors.empty()) os << "(trivial module)";
        for (std::size_t i = 0; i < r.factors->factors.size(); ++i)
            os << (i ? ", " : "") << r.factors->factors[i].str();
    } else {
        os << "unavailable: nonsingular Seifert matrix required";
    }
    os << "\n";
    auto cert = [&](const Certificate& c) {
        os << "certificate    " << conclusion_str(c.conclusion) << ": "
           << (c.certified ? "CERTIFIED" : "not certified");
        for (const auto& p : c.premises)
            os << "  [" << p.name << ": " << (p.passed ? "pass" : "fail") << "]";
        if (!c.note.empty()) os << "  (" << c.note << ")";
        os << "\n";
    };
    cert(r.band_prime);
    cert(r.minimal);
    cert(r.module_rigidity);
    os << "anisotropy     "
       << (r.anisotropy.certified ? "certified-anisotropic" : "not-certified") << "  ["
       << r.anisotropy.no_rational_roots.name << ": "
       << (r.anisotropy.no_rational_roots.passed ? "pass" : "fail") << "] ["
       << r.anisotropy.signature_bound.name << ": "
       << (r.anisotropy.signature_bound.passed ? "pass" : "fail") << "]\n";
    return os.str();
}

inline json to_json(const PairObstructionReport& rep) {
    json checks = json::array();
    for (const auto& c : rep.checks)
        checks.push_back(json{{"name", c.name},
                              {"applicable", c.applicable},
                              {"passed", c.passed},
                              {"witness", c.witness}});
    json out{{"checks", checks},
             {"obstructed", rep.any_failed},
             {"verdict", rep.any_failed ? "no ribbon concordance with these invariants"
                                        : "no obstruction found (existence is not asserted)"}};
    if (!rep.annotation.empty()) out["annotation"] = rep.annotation;
    return out;
}

inline std::string render_text(const PairObstructionReport& rep) {
    std::ostringstream os;
    for (const auto& c : rep.checks) {
        os << (c.applicable ? (c.passed ? "pass " : "FAIL ") : "n/a  ") << c.name << ": "
           << c.witness << "\n";
    }
    os << (rep.any_failed ? "obstructed: no ribbon concordance K0 <= K1 consistent with these invariants"
                          : "all applicable checks pass (existence of a concordance is not asserted)")
       << "\n";
    if (!rep.annotation.empty()) os << "note: " << rep.annotation << "\n";
    return os.str();
}

}  // namespace knotcert
