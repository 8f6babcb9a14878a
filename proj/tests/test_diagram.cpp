#include "knotcert/braid.hpp"
#include "knotcert/pd.hpp"
#include "knotcert/wirtinger.hpp"

#include "test_helpers.hpp"

#include <catch2/catch.hpp>

using namespace knotcert;

TEST_CASE("braid parsing accepts knots and rejects garbage") {
    auto t = parse_braid("2: 1 1 1");
    CHECK(t.strands == 2);
    CHECK(t.letters.size() == 3);
    CHECK(t.all_positive());

    auto t5 = parse_braid("2: 1 1 1 1 1");
    CHECK(t5.letters.size() == 5);

    CHECK_THROWS_AS(parse_braid("2: 1 1"), input_error);      // 2-component closure
    CHECK_THROWS_AS(parse_braid("2:"), input_error);          // 2-component unlink
    CHECK_THROWS_AS(parse_braid("2: 5"), input_error);        // index out of range
    CHECK_THROWS_WITH(parse_braid("2: 5"), Catch::Contains("out of range"));
    CHECK_THROWS_AS(parse_braid("2: 0"), input_error);
    CHECK_THROWS_AS(parse_braid("2: x"), input_error);
    CHECK_THROWS_AS(parse_braid("x: 1"), input_error);
    CHECK_THROWS_AS(parse_braid(""), input_error);
    CHECK_NOTHROW(parse_braid("1:"));  // unknot
}

TEST_CASE("braid closure component count") {
    CHECK(parse_braid("3: 1 -2 1 -2").closes_to_knot());
    BraidWord b;
    b.strands = 3;
    b.letters = {{1, 1}, {1, 1}};  // sigma_1^2 on 3 strands: hopf link + split unknot
    CHECK(b.component_count() == 3);
}

TEST_CASE("braid_to_pd produces one positive crossing per positive letter") {
    auto pd = braid_to_pd(parse_braid("2: 1 1 1"));
    REQUIRE(pd.crossing_count() == 3);
    CHECK(is_positive_diagram(pd));
    auto pd8 = braid_to_pd(parse_braid("3: 1 -2 1 -2"));
    REQUIRE(pd8.crossing_count() == 4);
    int pos = 0, neg = 0;
    for (auto& x : pd8.crossings) (x.sign > 0 ? pos : neg)++;
    CHECK(pos == 2);
    CHECK(neg == 2);
    CHECK(!is_positive_diagram(pd8));
    CHECK(braid_to_pd(parse_braid("1:")).crossing_count() == 0);
    CHECK(is_positive_diagram(braid_to_pd(parse_braid("1:"))));  // vacuous
}

TEST_CASE("pd parsing validates structure") {
    // the shipped trefoil text
    auto pd = parse_pd("1 5 2 4 5 3 6 2 3 1 4 6");
    CHECK(pd.crossing_count() == 3);
    CHECK(is_positive_diagram(pd));

    CHECK(parse_pd("").crossing_count() == 0);  // unknot presentation

    // Hopf link: every label twice, but two components
    CHECK_THROWS_WITH(parse_pd("1 3 2 4 3 1 4 2"), Catch::Contains("2 components"));
    // arc multiplicity
    CHECK_THROWS_WITH(parse_pd("1 2 2 1 1 2 2 1"), Catch::Contains("times"));
    CHECK_THROWS_AS(parse_pd("1 2 3"), input_error);
    CHECK_THROWS_AS(parse_pd("1 2 3 9"), input_error);
}

TEST_CASE("single kink diagrams resolve over-strand by head counting") {
    auto neg = parse_pd("1 2 2 1");
    REQUIRE(neg.crossing_count() == 1);
    CHECK(neg.crossings[0].sign == -1);
    auto pos = parse_pd("1 1 2 2");
    CHECK(pos.crossings[0].sign == 1);
}

TEST_CASE("mirror negates signs and is an involution") {
    auto pd = braid_to_pd(parse_braid("2: 1 1 1"));
    auto m = mirror(pd);
    for (auto& x : m.crossings) CHECK(x.sign == -1);
    CHECK(mirror(m).str() == pd.str());
    CHECK(mirror(PDCode{}).crossing_count() == 0);

    testutil::Rng rng(42);
    for (int i = 0; i < 25; ++i) {
        auto b = testutil::random_braid_knot(rng, 4, 9, false);
        auto d = braid_to_pd(b);
        auto mm = mirror(mirror(d));
        CHECK(mm.str() == d.str());
        for (std::size_t k = 0; k < d.crossings.size(); ++k)
            CHECK(mirror(d).crossings[k].sign == -d.crossings[k].sign);
    }
}

TEST_CASE("wirtinger presentations have one relator per crossing and abelianize") {
    auto pd = braid_to_pd(parse_braid("2: 1 1 1"));
    auto w = wirtinger(pd);
    CHECK(w.generator_count == 3);
    CHECK(w.relators.size() == 3);
    for (auto& r : w.relators) CHECK(WirtingerPresentation::abelianized_exponent_sum(r) == 0);

    auto w5 = wirtinger(braid_to_pd(parse_braid("2: 1 1 1 1 1")));
    CHECK(w5.generator_count == 5);
    CHECK(w5.relators.size() == 5);

    CHECK_THROWS_AS(wirtinger(PDCode{}), input_error);

    testutil::Rng rng(7);
    for (int i = 0; i < 30; ++i) {
        auto b = testutil::random_braid_knot(rng, 5, 12, false);
        auto d = braid_to_pd(b);
        if (d.crossing_count() == 0) continue;
        auto wp = wirtinger(d);
        CHECK(wp.generator_count == d.crossing_count());
        CHECK((long)wp.relators.size() == d.crossing_count());
        for (auto& r : wp.relators)
            CHECK(WirtingerPresentation::abelianized_exponent_sum(r) == 0);
    }
}

TEST_CASE("braid closure properties over random words") {
    testutil::Rng rng(1234);
    for (int i = 0; i < 40; ++i) {
        auto b = testutil::random_braid_knot(rng, 5, 12, false);
        auto d = braid_to_pd(b);
        CHECK(d.crossing_count() == (long)b.letters.size());
        CHECK(is_positive_diagram(d) == b.all_positive());
    }
}

TEST_CASE("positivity is a property of the presented diagram") {
    auto pd = parse_pd("1 5 2 4 5 3 6 2 3 1 4 6");
    CHECK(is_positive_diagram(pd));
    CHECK(!is_positive_diagram(mirror(pd)));
}
