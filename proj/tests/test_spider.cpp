#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "csf/positivity.hpp"
#include "csf/spider_theory.hpp"

using namespace csf;

namespace {

Partition P(std::initializer_list<int> parts) { return Partition(std::vector<int>(parts)); }

// All spider specs (>= 3 legs) with the given total vertex count.
std::vector<SpiderSpec> specs_with_n(int n) {
    std::vector<SpiderSpec> out;
    for (const Partition& legs : partitions_of(n - 1))
        if (legs.length() >= 3) out.emplace_back(legs);
    return out;
}

bool witness_is_missing(const SpiderWitness& w) {
    return !has_connected_partition(make_spider(w.spec), w.missing_type);
}

}  // namespace

TEST_CASE("matching classes") {
    CHECK(spider_matching_class(SpiderSpec(P({2, 1, 1}))) == MatchingClass::Almost);
    CHECK(spider_matching_class(SpiderSpec(P({4, 1, 1, 1, 1}))) == MatchingClass::Neither);
    CHECK(spider_matching_class(SpiderSpec(P({3, 2, 2}))) == MatchingClass::Perfect);
    CHECK(spider_matching_class(SpiderSpec(P({2, 2, 2}))) == MatchingClass::Almost);

    auto w = matching_witness(SpiderSpec(P({4, 1, 1, 1, 1})));
    REQUIRE(w.has_value());
    CHECK(w->missing_type == P({2, 2, 2, 2, 1}));
    CHECK(!matching_witness(SpiderSpec(P({3, 2, 2}))).has_value());
}

TEST_CASE("matching classifier agrees with the graph matchings (n <= 12)") {
    for (int n = 4; n <= 12; ++n) {
        for (const SpiderSpec& spec : specs_with_n(n)) {
            Graph g = make_spider(spec);
            MatchingClass cls = spider_matching_class(spec);
            CHECK(has_perfect_matching(g) == (cls == MatchingClass::Perfect));
            CHECK(has_almost_perfect_matching(g) == (cls == MatchingClass::Almost));
        }
    }
}

TEST_CASE("short legs witness") {
    auto w = short_legs_witness(SpiderSpec(P({2, 2, 1, 1})));
    REQUIRE(w.has_value());
    CHECK(w->missing_type == P({4, 3}));
    CHECK(w->params.at("m") == 2);
    CHECK(short_legs_witness(SpiderSpec(P({1, 1, 1})))->missing_type == P({2, 2}));
    CHECK(!short_legs_witness(SpiderSpec(P({4, 1, 1}))).has_value());
}

TEST_CASE("induction witness") {
    auto w = induction_witness(SpiderSpec(P({6, 2, 1, 1})));
    REQUIRE(w.has_value());
    CHECK(w->missing_type == P({4, 4, 3}));
    CHECK(w->params.at("i") == 2);
    CHECK(w->params.at("N") == 4);
    CHECK(w->params.at("a") == 1);
    for (int a = 0; a <= 3; ++a) {
        auto fam = induction_witness(SpiderSpec(P({2 + 4 * a, 2, 1, 1})));
        REQUIRE(fam.has_value());
        std::vector<int> parts(a + 1, 4);
        parts.push_back(3);
        CHECK(fam->missing_type == Partition(parts));
    }
    CHECK(!induction_witness(SpiderSpec(P({4, 1, 1}))).has_value());
}

TEST_CASE("quotient witnesses") {
    auto q1 = quotient_witness_1(SpiderSpec(P({8, 2, 2, 1})));
    REQUIRE(q1.has_value());
    CHECK(q1->missing_type == P({4, 4, 3, 3}));
    CHECK(q1->params.at("q") == 4);
    CHECK(q1->params.at("r") == 2);
    CHECK(q1->params.at("dp") == 0);
    CHECK(q1->params.at("rp") == 2);
    CHECK(!quotient_witness_1(SpiderSpec(P({6, 4, 1, 1}))).has_value());

    // lambda_2 = 2 requires q >= 3
    CHECK(!quotient_witness_1(SpiderSpec(P({3, 2, 1, 1}))).has_value());  // n=8, q=2

    auto q2 = quotient_witness_2(SpiderSpec(P({9, 5, 2, 1, 1})));
    REQUIRE(q2.has_value());
    CHECK(q2->params.at("i") == 3);
    CHECK(q2->missing_type == P({4, 3, 3, 3, 3, 3}));
    CHECK(!quotient_witness_2(SpiderSpec(P({13, 6, 4, 1, 1}))).has_value());  // leg2 tail not strict

    auto q3 = quotient_witness_3(SpiderSpec(P({13, 6, 4, 1, 1})), 2);
    REQUIRE(q3.has_value());
    CHECK(q3->missing_type == P({9, 9, 8}));
    CHECK(q3->params.at("q") == 3);
    CHECK(q3->params.at("dp") == 1);
    CHECK(q3->params.at("rp") == 2);
    CHECK(q3->params.at("t") == 6);
    CHECK(!quotient_witness_3(SpiderSpec(P({13, 6, 4, 1, 1})), 4).has_value());  // t = 1
}

TEST_CASE("vertex count bound") {
    auto a = count_vertices_bound(SpiderSpec(P({4, 2, 1})));
    CHECK(a.hypothesis == 'a');
    CHECK(a.bound_holds);
    auto b = count_vertices_bound(SpiderSpec(P({8, 4, 1, 1})));
    CHECK(b.hypothesis == 'b');
    CHECK(b.bound_holds);
    CHECK(count_vertices_bound(SpiderSpec(P({1, 1, 1}))).hypothesis == 0);

    // hypothesis implies the bound, exhaustively for n <= 12
    for (int n = 4; n <= 12; ++n)
        for (const SpiderSpec& spec : specs_with_n(n)) {
            auto vb = count_vertices_bound(spec);
            if (vb.hypothesis != 0) CHECK(vb.bound_holds);
        }
}

TEST_CASE("decision chain") {
    auto d1 = spider_e_negativity_decision(SpiderSpec(P({8, 2, 2, 1})));
    REQUIRE(d1.has_value());
    CHECK(d1->missing_type == P({4, 4, 3, 3}));
    CHECK(d1->rule == SpiderRule::Quotient1);
    CHECK(!spider_e_negativity_decision(SpiderSpec(P({6, 4, 1, 1}))).has_value());
    auto d2 = spider_e_negativity_decision(SpiderSpec(P({1, 1, 1, 1})));
    REQUIRE(d2.has_value());
    CHECK(witness_is_missing(*d2));
    auto d3 = spider_e_negativity_decision(SpiderSpec(P({13, 6, 4, 1, 1})));
    REQUIRE(d3.has_value());
    CHECK(d3->missing_type == P({9, 9, 8}));
}

TEST_CASE("every produced witness is confirmed missing (n <= 12)") {
    for (int n = 4; n <= 12; ++n) {
        for (const SpiderSpec& spec : specs_with_n(n)) {
            if (auto w = short_legs_witness(spec)) CHECK(witness_is_missing(*w));
            if (auto w = matching_witness(spec)) CHECK(witness_is_missing(*w));
            if (auto w = induction_witness(spec)) CHECK(witness_is_missing(*w));
            if (auto w = quotient_witness_1(spec)) CHECK(witness_is_missing(*w));
            if (auto w = quotient_witness_2(spec)) CHECK(witness_is_missing(*w));
            for (int i = 2; i < spec.leg_count(); ++i)
                if (auto w = quotient_witness_3(spec, i)) CHECK(witness_is_missing(*w));
        }
    }
}

TEST_CASE("rule-2 and rule-3 witnesses verified on larger spot instances") {
    auto q2 = quotient_witness_2(SpiderSpec(P({9, 5, 2, 1, 1})));  // n = 19
    REQUIRE(q2.has_value());
    CHECK(witness_is_missing(*q2));
    auto q3 = quotient_witness_3(SpiderSpec(P({8, 4, 2, 1, 1})), 3);  // n = 17, pivot leg 2
    REQUIRE(q3.has_value());
    CHECK(q3->missing_type == P({4, 4, 3, 3, 3}));
    CHECK(witness_is_missing(*q3));
}

TEST_CASE("induction closure: spiders over a short-legged core are never e-positive") {
    // lambda |- N <= 8 with max part < floor(N/2); any extra leg i <= 12.
    for (int N = 4; N <= 8; ++N) {
        for (const Partition& lambda : partitions_of(N)) {
            if (lambda.length() < 2 || lambda.max_part() >= N / 2) continue;
            for (int i = 1; i <= 12; ++i) {
                std::vector<int> legs = lambda.parts();
                legs.push_back(i);
                auto w = spider_e_negativity_decision(SpiderSpec(Partition(legs)));
                CHECK(w.has_value());
            }
        }
    }
}

TEST_CASE("log2 regime always yields a witness (n <= 12)") {
    for (int n = 4; n <= 12; ++n)
        for (const SpiderSpec& spec : specs_with_n(n)) {
            int d = spec.leg_count();
            if ((1ll << (d - 1)) >= n) {
                auto w = spider_e_negativity_decision(spec);
                CHECK(w.has_value());
            }
        }
}

TEST_CASE("rule names") {
    CHECK(rule_name(SpiderRule::ShortLegs) == "short-legs");
    CHECK(rule_name(SpiderRule::Quotient3) == "quotient-3");
    CHECK(rule_name(SpiderRule::Matching) == "matching");
    CHECK(rule_name(SpiderRule::Induction) == "induction");
}
