#include "knotcert/certify.hpp"
#include "knotcert/render.hpp"

#include "test_helpers.hpp"

#include <catch2/catch.hpp>

using namespace knotcert;

namespace {

InvariantReport report_for(const std::string& kind, const std::string& payload) {
    return full_report(parse_presentation(kind, payload));
}

}  // namespace

TEST_CASE("full report for the right trefoil") {
    auto r = report_for("braid", "2: 1 1 1");
    CHECK(r.positivity == Positivity::Positive);
    CHECK(r.genus == 1);
    CHECK(r.delta.str() == "t - 1 + t^-1");
    CHECK(r.nabla.str() == "z^2 + 1");
    CHECK(r.sigma == -2);
    CHECK(r.d == 2);
    CHECK(r.oracle_checked);
    REQUIRE(r.factors.has_value());
    REQUIRE(r.factors->factors.size() == 1);
    CHECK(r.factors->factors[0].str() == "t^2 - t + 1");
    CHECK(r.band_prime.certified);
    CHECK(r.minimal.certified);
    CHECK(r.minimal.note == "branch: monic/fibered");
    CHECK(r.module_rigidity.certified);
    CHECK(r.anisotropy.certified);
    CHECK(r.roots.roots.empty());
}

TEST_CASE("full report for the unknot is trivial and vacuously certified") {
    auto r = report_for("braid", "1:");
    CHECK(r.delta == Laurent::one());
    CHECK(r.sigma == 0);
    CHECK(r.d == 0);
    CHECK(r.genus == 0);
    CHECK(r.positivity == Positivity::Positive);
    CHECK(r.band_prime.certified);
    CHECK(r.minimal.certified);
    CHECK(r.module_rigidity.certified);
    REQUIRE(r.factors.has_value());
    CHECK(r.factors->factors.empty());
}

TEST_CASE("non-positive presentations fail closed") {
    auto fig8 = report_for("braid", "3: 1 -2 1 -2");
    CHECK(fig8.positivity == Positivity::NotPositive);
    CHECK(!fig8.band_prime.certified);
    CHECK(!fig8.minimal.certified);
    CHECK(!fig8.module_rigidity.certified);
    // its non-positivity premise is recorded, not assumed
    CHECK(fig8.band_prime.premises[0].mode == PremiseMode::Checked);
    CHECK(!fig8.band_prime.premises[0].passed);

    auto m61 = report_for("seifert", "2 1 1 0 -2");
    CHECK(m61.positivity == Positivity::Unknown);
    CHECK(!m61.band_prime.certified);
    CHECK(!m61.minimal.certified);
    CHECK(!m61.module_rigidity.certified);
    CHECK(m61.genus_from_matrix);
    CHECK(m61.genus == 1);
    CHECK(m61.delta.str() == "-2*t + 5 - 2*t^-1");
    // prime-power premise itself passes; only positivity fails
    CHECK(m61.minimal.premises[1].passed);
}

TEST_CASE("torus knots certify along the prime power or monic branch") {
    auto t25 = report_for("braid", "2: 1 1 1 1 1");
    CHECK(t25.sigma == -4);
    CHECK(t25.d == 4);
    CHECK(t25.module_rigidity.certified);  // |−4| >= 4−2
    CHECK(t25.minimal.certified);
    auto t34 = report_for("braid", "3: 1 2 1 2 1 2 1 2");
    CHECK(t34.sigma == -6);
    CHECK(t34.module_rigidity.certified);
}

TEST_CASE("pair obstructions: unknot against trefoil fails equality") {
    auto unknot = report_for("braid", "1:");
    auto tref = report_for("braid", "2: 1 1 1");
    auto rep = ribbon_obstructions(unknot, tref);
    REQUIRE(rep.checks.size() == 4);
    CHECK(rep.checks[0].passed);   // 1 divides everything
    CHECK(rep.checks[1].passed);   // 0 <= 2
    CHECK(!rep.checks[2].passed);  // degree equality demanded by positive target
    CHECK(!rep.checks[3].passed);  // alexander equality
    CHECK(rep.any_failed);
}

TEST_CASE("pair obstructions: reflexivity passes all checks") {
    for (const char* w : {"2: 1 1 1", "2: 1 1 1 1 1", "3: 1 -2 1 -2", "3: 1 2 1 2 1 2 1 2"}) {
        auto r = report_for("braid", w);
        auto rep = ribbon_obstructions(r, r);
        CHECK(!rep.any_failed);
    }
    auto r61 = report_for("seifert", "2 1 1 0 -2");
    CHECK(!ribbon_obstructions(r61, r61).any_failed);
}

TEST_CASE("pair obstructions: trefoil against 6_1 fails divisibility") {
    auto tref = report_for("braid", "2: 1 1 1");
    auto m61 = report_for("seifert", "2 1 1 0 -2");
    auto rep = ribbon_obstructions(tref, m61);
    CHECK(!rep.checks[0].passed);
    CHECK(rep.any_failed);
    // the positive-target checks are not applicable: positivity unknown
    CHECK(!rep.checks[2].applicable);
    CHECK(!rep.checks[3].applicable);
}

TEST_CASE("pair obstructions: degree monotonicity") {
    auto t25 = report_for("braid", "2: 1 1 1 1 1");
    auto tref = report_for("braid", "2: 1 1 1");
    auto rep = ribbon_obstructions(t25, tref);
    CHECK(!rep.checks[1].passed);  // d0 = 4 > d1 = 2
    CHECK(rep.any_failed);
}

TEST_CASE("annotation appears when nothing obstructs a minimal positive target") {
    auto tref = report_for("braid", "2: 1 1 1");
    auto rep = ribbon_obstructions(tref, tref);
    CHECK(!rep.any_failed);
    CHECK(!rep.annotation.empty());
}

TEST_CASE("presentation parsing errors") {
    CHECK_THROWS_AS(parse_presentation("braid", "2: 5"), input_error);
    CHECK_THROWS_AS(parse_presentation("lol", "2: 1"), input_error);
    CHECK_THROWS_AS(parse_presentation("seifert", "2 1 1 0"), input_error);
    CHECK_THROWS_AS(parse_presentation("seifert", "2 1 1 0 -2 7"), input_error);
    CHECK_THROWS_AS(parse_presentation("seifert", "3 1 1 1 0 -2 0 0 0 1"), input_error);
    CHECK_NOTHROW(parse_presentation("seifert", "0"));
}

TEST_CASE("certificate json schema is stable") {
    auto r = report_for("braid", "2: 1 1 1");
    auto j = to_json(r.minimal);
    CHECK(j["conclusion"] == "ribbon-minimal");
    CHECK(j["status"] == "certified");
    REQUIRE(j.contains("theorem_chain"));
    REQUIRE(j.contains("premises"));
    CHECK(j["premises"][0]["name"] == "positive-diagram");
    CHECK(j["premises"][0]["mode"] == "checked");
    CHECK(j["premises"][0]["passed"] == true);
    REQUIRE(j["premises"][0].contains("value"));

    auto full = to_json(r);
    for (const char* key :
         {"presentation", "positivity", "genus", "alexander", "conway", "signature",
          "rational_roots", "real_roots", "invariant_factors", "certificates", "anisotropy",
          "seifert_matrix", "oracle_checked"})
        CHECK(full.contains(key));
    CHECK(full["presentation"]["kind"] == "braid");
    CHECK(full["conway"]["nonnegative"] == true);
}

TEST_CASE("prime power branch fires for a positive non-fibered knot") {
    // positive 5-crossing twist-knot diagram; Delta = 2t - 3 + 2/t
    auto r = report_for("pd", "1 5 2 4 3 9 4 8 5 1 6 10 7 3 8 2 9 7 10 6");
    CHECK(r.positivity == Positivity::Positive);
    CHECK(r.delta.str() == "2*t - 3 + 2*t^-1");
    CHECK(r.sigma == -2);
    CHECK(r.genus == 1);
    CHECK(r.minimal.certified);
    CHECK(r.minimal.note == "branch: prime-power");
    CHECK(r.band_prime.certified);
    // positive, so no rational roots despite the non-unit leading coefficient
    CHECK(r.roots.roots.empty());
    CHECK(r.anisotropy.certified);
    CHECK(r.module_rigidity.certified);
}

TEST_CASE("singular seifert matrices report no invariant factors") {
    // genus-one unknot diagram: V is singular over Q
    auto r = report_for("braid", "2: 1 1 -1");
    CHECK(r.delta == Laurent::one());
    CHECK(!r.factors.has_value());
    auto j = to_json(r);
    CHECK(j["invariant_factors"].is_null());
    CHECK(j.contains("invariant_factors_error"));
}

TEST_CASE("table diagrams reproduce published invariants") {
    // twist knot: same knot as the shipped seifert-matrix presentation
    auto pd = report_for("pd", "1 4 2 5 7 10 8 11 3 9 4 8 9 3 10 2 5 12 6 1 11 6 12 7");
    auto mat = report_for("seifert", "2 1 1 0 -2");
    CHECK(pd.delta == mat.delta);
    CHECK(pd.sigma == mat.sigma);
    CHECK(pd.genus == 1);
    REQUIRE(pd.factors.has_value());
    REQUIRE(mat.factors.has_value());
    CHECK(pd.factors->factors == mat.factors->factors);

    auto r62 = report_for("pd", "1 4 2 5 5 10 6 11 3 9 4 8 9 3 10 2 7 12 8 1 11 6 12 7");
    CHECK(r62.delta.str() == "-t^2 + 3*t - 3 + 3*t^-1 - t^-2");
    CHECK(std::abs(r62.sigma) == 2);
    CHECK(r62.genus == 2);

    auto r63 = report_for("pd", "4 2 5 1 8 4 9 3 12 9 1 10 10 5 11 6 6 11 7 12 2 8 3 7");
    CHECK(r63.delta.str() == "t^2 - 3*t + 5 - 3*t^-1 + t^-2");
    CHECK(r63.sigma == 0);
    CHECK(r63.genus == 2);
}
