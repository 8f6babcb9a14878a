#pragma once

#include "knotcert/conway.hpp"
#include "knotcert/forms.hpp"
#include "knotcert/pd.hpp"
#include "knotcert/roots.hpp"
#include "knotcert/seifert.hpp"
#include "knotcert/wirtinger.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace knotcert {

enum class Positivity { Positive, NotPositive, Unknown };

inline const char* positivity_str(Positivity p) {
    switch (p) {
        case Positivity::Positive: return "positive";
        case Positivity::NotPositive: return "not-positive";
        default: return "unknown";
    }
}

enum class PremiseMode { Checked, Assumed };

struct CertPremise {
    std::string name;
    PremiseMode mode = PremiseMode::Checked;
    bool passed = false;
    std::string value;
};

enum class Conclusion { BandPrime, RibbonMinimal, QAnisotropic, ModuleRigidInConcordanceClass };

inline const char* conclusion_str(Conclusion c) {
    switch (c) {
        case Conclusion::BandPrime: return "band-prime";
        case Conclusion::RibbonMinimal: return "ribbon-minimal";
        case Conclusion::QAnisotropic: return "q-anisotropic";
        default: return "module-rigid-in-concordance-class";
    }
}

/// A theorem application: the conclusion holds for the presented knot
/// provided every premise is checked-pass or explicitly assumed.  Premises
/// fail closed: an unknown positivity is a failed premise, never an assumed
/// one.
struct Certificate {
    Conclusion conclusion = Conclusion::BandPrime;
    bool certified = false;
    std::vector<std::string> theorem_chain;
    std::vector<CertPremise> premises;
    std::string note;

    void finalize() {
        certified = true;
        for (const auto& p : premises)
            certified = certified && (p.mode == PremiseMode::Assumed || p.passed);
    }
};

/// Everything the engine can say about one presentation.
struct InvariantReport {
    std::string presentation_kind;  // braid | pd | seifert
    std::string presentation_text;
    long crossing_count = -1;       // -1 when no diagram
    Positivity positivity = Positivity::Unknown;
    SurfaceData surface;            // meaningful when a diagram is present
    bool genus_from_matrix = false;
    long genus = 0;

    SeifertMatrix matrix;
    Laurent delta;
    ConwayPolynomial nabla;
    long sigma = 0;
    long d = 0;
    RationalRootReport roots;
    long real_roots_negative_axis = 0;  // distinct real roots of Delta in (-inf, 0)
    long real_roots_positive_axis = 0;  // and in (0, inf)
    std::optional<ModuleInvariantFactors> factors;  // nullopt: V singular over Q
    bool oracle_checked = false;  // Fox-calculus route compared when a diagram exists

    Certificate band_prime;
    Certificate minimal;
    Certificate module_rigidity;
    AnisotropyVerdict anisotropy;
};

inline CertPremise positivity_premise(const InvariantReport& k) {
    CertPremise p;
    p.name = "positive-diagram";
    p.mode = PremiseMode::Checked;
    p.passed = k.positivity == Positivity::Positive;
    p.value = std::string(positivity_str(k.positivity)) + " (source: input diagram)";
    return p;
}

/// Band primeness of positive knots: a positive diagram supplies both the
/// genus hypothesis (g = g4) and the freeness of minimal Seifert surfaces.
inline Certificate certify_band_prime(const InvariantReport& k) {
    Certificate c;
    c.conclusion = Conclusion::BandPrime;
    c.theorem_chain = {"band-primeness-of-positive-knots",
                       "free-incompressible-seifert-surfaces-of-positive-knots",
                       "genus-equals-slice-genus-for-positive-knots"};
    c.premises.push_back(positivity_premise(k));
    c.finalize();
    return c;
}

/// Ribbon concordance minimality when the leading coefficient of Delta is a
/// prime power (with leading coefficient 1 recorded as the monic/fibered
/// branch).
inline Certificate certify_minimal(const InvariantReport& k) {
    Certificate c;
    c.conclusion = Conclusion::RibbonMinimal;
    c.theorem_chain = {"prime-power-leading-coefficient-minimality",
                       "murasugi-mayland-residual-nilpotency",
                       "alexander-polynomial-rigidity-under-ribbon-concordance",
                       "gordon-residually-nilpotent-rigidity"};
    c.premises.push_back(positivity_premise(k));
    CertPremise pp;
    pp.name = "leading-coefficient-prime-power";
    auto rep = leading_coeff_prime_power(k.delta);
    pp.passed = rep.is_prime_power;
    if (rep.is_one)
        pp.value = "lead = 1 (monic/fibered branch)";
    else if (rep.is_prime_power)
        pp.value = "lead = " + rep.leading.get_str() + " = " + rep.prime.get_str() + "^" +
                   std::to_string(rep.exponent) + " (prime-power branch)";
    else
        pp.value = "lead = " + rep.leading.get_str() + " is not a prime power";
    c.premises.push_back(pp);
    c.note = rep.is_one ? "branch: monic/fibered" : (rep.is_prime_power ? "branch: prime-power" : "");
    c.finalize();
    return c;
}

/// Module rigidity inside the concordance class: a positive knot with
/// |sigma| >= d - 2 is Q-anisotropic, and Q-anisotropic knots with
/// nonsingular Seifert matrices have rigid rational Alexander modules among
/// concordant positive knots.
inline Certificate certify_module_rigidity(const InvariantReport& k) {
    Certificate c;
    c.conclusion = Conclusion::ModuleRigidInConcordanceClass;
    c.theorem_chain = {"signature-bound-implies-q-anisotropy",
                       "no-rational-roots-for-positive-knots",
                       "kervaire-gilmer-concordance-rigidity"};
    c.premises.push_back(positivity_premise(k));
    CertPremise sb;
    sb.name = "signature-bound";
    sb.passed = signature_bound_check(k.sigma, k.d);
    sb.value = "|sigma| = " + std::to_string(std::abs(k.sigma)) +
               ", d - 2 = " + std::to_string(k.d - 2);
    c.premises.push_back(sb);
    c.finalize();
    if (c.certified)
        c.note = "any positive knot concordant to this one has the same invariant factors";
    if (k.genus <= 4 && k.positivity == Positivity::Positive)
        c.note += (c.note.empty() ? "" : "; ") +
                  std::string("genus <= 4: the bound holds for all positive knots of genus at "
                              "most four with one known exception");
    return c;
}

/// One named necessary condition for a ribbon concordance K0 <= K1.
struct ObstructionCheck {
    std::string name;
    bool applicable = true;
    bool passed = false;
    std::string witness;
};

/// Necessary conditions for K0 <= K1; a single failure rules the ordered
/// ribbon concordance out, while all-pass asserts nothing.
struct PairObstructionReport {
    std::vector<ObstructionCheck> checks;
    bool any_failed = false;
    std::string annotation;

    void finalize() {
        any_failed = false;
        for (const auto& c : checks) any_failed = any_failed || (c.applicable && !c.passed);
    }
};

inline PairObstructionReport ribbon_obstructions(const InvariantReport& k0,
                                                 const InvariantReport& k1) {
    PairObstructionReport rep;
    {
        ObstructionCheck c;
        c.name = "alexander-divisibility";
        c.passed = divides(k0.delta, k1.delta);
        c.witness = k0.delta.str() + (c.passed ? " divides " : " does not divide ") + k1.delta.str();
        rep.checks.push_back(c);
    }
    {
        ObstructionCheck c;
        c.name = "degree-monotonicity";
        c.passed = k0.d <= k1.d;
        c.witness = "d0 = " + std::to_string(k0.d) + ", d1 = " + std::to_string(k1.d);
        rep.checks.push_back(c);
    }
    bool k1_positive = k1.positivity == Positivity::Positive;
    {
        ObstructionCheck c;
        c.name = "degree-equality-for-positive-target";
        c.applicable = k1_positive;
        c.passed = !k1_positive || k0.d == k1.d;
        c.witness = k1_positive ? "d0 = " + std::to_string(k0.d) + ", d1 = " + std::to_string(k1.d)
                                : "target diagram not positive; skipped";
        rep.checks.push_back(c);
    }
    {
        ObstructionCheck c;
        c.name = "alexander-equality-for-positive-target";
        c.applicable = k1_positive;
        c.passed = !k1_positive || k0.delta == k1.delta;
        c.witness = k1_positive ? k0.delta.str() + " vs " + k1.delta.str()
                                : "target diagram not positive; skipped";
        rep.checks.push_back(c);
    }
    rep.finalize();
    if (!rep.any_failed && k1_positive && k1.minimal.certified)
        rep.annotation =
            "no obstruction found; if a ribbon concordance exists the knots are equivalent "
            "(residually nilpotent target with equal Alexander polynomial)";
    return rep;
}

// ---------------------------------------------------------------------------
// Presentations and the full report.

struct KnotPresentation {
    std::string kind;  // braid | pd | seifert
    std::variant<BraidWord, PDCode, SeifertMatrix> value;
};

/// Parse a Seifert matrix given as "n row-major n^2 integers".
inline SeifertMatrix parse_seifert_payload(const std::string& text) {
    std::istringstream is(text);
    long n = 0;
    if (!(is >> n) || n < 0) throw input_error("seifert payload must start with the matrix size");
    std::vector<std::vector<Int>> rows((std::size_t)n, std::vector<Int>((std::size_t)n));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            std::string tok;
            if (!(is >> tok)) throw input_error("seifert payload is missing entries");
            try {
                rows[i][j] = Int(tok);
            } catch (const std::exception&) {
                throw input_error("malformed matrix entry '" + tok + "'");
            }
        }
    std::string extra;
    if (is >> extra) throw input_error("trailing tokens after matrix entries");
    return seifert_matrix_from_entries(std::move(rows), SeifertSource::UserSupplied);
}

inline KnotPresentation parse_presentation(const std::string& kind, const std::string& payload) {
    KnotPresentation p;
    p.kind = kind;
    if (kind == "braid")
        p.value = parse_braid(payload);
    else if (kind == "pd")
        p.value = parse_pd(payload);
    else if (kind == "seifert")
        p.value = parse_seifert_payload(payload);
    else
        throw input_error("unknown presentation kind '" + kind + "' (expected braid, pd or seifert)");
    return p;
}

/// Compute the full invariant profile and all single-knot certificates.
/// When a diagram is available the Alexander polynomial is computed along
/// both routes (Seifert matrix and Fox calculus) and they must agree.
inline InvariantReport full_report(const KnotPresentation& p) {
    InvariantReport r;
    r.presentation_kind = p.kind;

    std::optional<PDCode> pd;
    if (std::holds_alternative<BraidWord>(p.value)) {
        const auto& b = std::get<BraidWord>(p.value);
        r.presentation_text = b.str();
        pd = braid_to_pd(b);
        r.matrix = seifert_matrix_from_braid(b);
    } else if (std::holds_alternative<PDCode>(p.value)) {
        pd = std::get<PDCode>(p.value);
        r.presentation_text = pd->str();
        r.matrix = seifert_matrix(*pd);
    } else {
        r.matrix = std::get<SeifertMatrix>(p.value);
        std::ostringstream os;
        os << r.matrix.size();
        for (const auto& row : r.matrix.v)
            for (const auto& e : row) os << " " << e.get_str();
        r.presentation_text = os.str();
    }

    if (pd) {
        r.crossing_count = pd->crossing_count();
        r.positivity = is_positive_diagram(*pd) ? Positivity::Positive : Positivity::NotPositive;
        r.surface = seifert_surface(*pd);
        r.genus = r.surface.genus;
    } else {
        r.positivity = Positivity::Unknown;
        r.genus_from_matrix = true;
        r.genus = r.matrix.size() / 2;
    }

    r.delta = alexander_from_seifert(r.matrix);
    if (pd && pd->crossing_count() > 0) {
        Laurent fox = alexander_from_fox(wirtinger(*pd));
        if (fox != r.delta)
            throw internal_error("Alexander polynomial routes disagree: " + r.delta.str() +
                                 " (Seifert) vs " + fox.str() + " (Fox)");
        r.oracle_checked = true;
    }
    r.nabla = conway_from_laurent(r.delta);
    r.sigma = signature(r.matrix);
    r.d = degree_d(r.delta);
    r.roots = rational_roots(r.delta);
    r.real_roots_negative_axis =
        sturm_real_root_count(r.delta, IntervalEnd::neg_inf(), IntervalEnd::at(Rat(0)));
    r.real_roots_positive_axis =
        sturm_real_root_count(r.delta, IntervalEnd::at(Rat(0)), IntervalEnd::pos_inf());
    try {
        r.factors = invariant_factors(r.matrix);
    } catch (const input_error&) {
        r.factors = std::nullopt;  // singular Seifert matrix over Q
    }
    r.anisotropy = anisotropy_certificate(r.delta, r.sigma);
    r.band_prime = certify_band_prime(r);
    r.minimal = certify_minimal(r);
    r.module_rigidity = certify_module_rigidity(r);
    return r;
}

}  // namespace knotcert
