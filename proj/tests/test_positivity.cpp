#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "csf/csf.hpp"
#include "csf/positivity.hpp"
#include "csf/treegen.hpp"
#include "support/oracles.hpp"

using namespace csf;

namespace {
Partition P(std::initializer_list<int> parts) { return Partition(std::vector<int>(parts)); }
}

TEST_CASE("connected partitions: spot cases") {
    Graph s4 = make_star(4);
    CHECK(!has_connected_partition(s4, P({2, 2})));
    CHECK(has_connected_partition(s4, P({4})));
    CHECK(has_connected_partition(s4, P({3, 1})));
    CHECK(has_connected_partition(s4, P({2, 1, 1})));
    for (int n = 4; n <= 8; ++n) {
        Graph s = make_star(n);
        for (int k = 1; k <= n; ++k) {
            std::vector<int> hook{k};
            for (int i = k; i < n; ++i) hook.push_back(1);
            CHECK(has_connected_partition(s, Partition(hook)));
        }
    }
    CHECK_THROWS(has_connected_partition(s4, P({2, 1})));
    CHECK_THROWS(has_connected_partition(Graph(3, {{0, 1}}), P({2, 1})));
}

TEST_CASE("connected partition search agrees with full set-partition enumeration") {
    auto corpus = [] {
        std::vector<Graph> gs;
        for (int n = 2; n <= 7; ++n)
            for (const TreeCode& code : free_trees(n)) gs.push_back(code.decode());
        gs.push_back(make_spider(SpiderSpec(P({4, 2, 1}))));      // n = 8
        gs.push_back(make_spider(SpiderSpec(P({2, 2, 2, 1, 1})))); // n = 9
        gs.push_back(make_complete(5));
        gs.push_back(make_windmill(2, 4));                         // n = 7
        gs.push_back(make_windmill(4, 3));                         // n = 9
        gs.push_back(make_path(9));
        return gs;
    }();
    for (const Graph& g : corpus) {
        auto types = oracle::connected_types_by_enumeration(g);
        for (const Partition& mu : partitions_of(g.n()))
            CHECK(has_connected_partition(g, mu) == (types.count(mu) > 0));
    }
}

TEST_CASE("spider reduction preserves connected-partition types (trees n <= 9)") {
    for (int n = 4; n <= 9; ++n) {
        for (const TreeCode& code : free_trees(n)) {
            Graph t = code.decode();
            for (int v = 0; v < n; ++v) {
                if (t.degree(v) < 3) continue;
                Graph s = make_spider(spider_reduction(t, v));
                for (const Partition& mu : partitions_of(n))
                    if (has_connected_partition(t, mu)) CHECK(has_connected_partition(s, mu));
            }
        }
    }
}

TEST_CASE("missing connected type picks the first in enumeration order") {
    CHECK(missing_connected_type(make_star(4)) == P({2, 2}));
    CHECK(missing_connected_type(make_spider(SpiderSpec(P({2, 2, 1, 1})))) == P({4, 3}));
    CHECK(!missing_connected_type(make_spider(SpiderSpec(P({4, 1, 1})))).has_value());
    CHECK(!missing_connected_type(make_path(7)).has_value());
}

TEST_CASE("stable partitions") {
    for (int n = 4; n <= 9; ++n) {
        Graph s = make_star(n);
        CHECK(has_stable_partition(s, P({n - 1, 1})));
        CHECK(!has_stable_partition(s, P({n - 2, 2})));
    }
    CHECK(has_stable_partition(make_complete(3), P({1, 1, 1})));
    CHECK(!has_stable_partition(make_complete(3), P({2, 1})));
    CHECK(has_stable_partition(make_path(5), P({3, 2})));
    CHECK(!has_stable_partition(make_path(5), P({4, 1})));
    CHECK(has_stable_partition(Graph(3), P({3})));  // edgeless
    CHECK_THROWS(has_stable_partition(make_path(3), P({2, 2})));
}

TEST_CASE("stable partitions agree with brute force over colour assignments") {
    // Independent route: try all assignments of vertices to labelled classes.
    auto brute = [](const Graph& g, const Partition& mu) {
        int k = mu.length();
        std::vector<int> assign(g.n(), 0);
        std::vector<int> count(k, 0);
        std::vector<uint64_t> members(k, 0);
        auto rec = [&](auto&& self, int v) -> bool {
            if (v == g.n()) return true;
            for (int c = 0; c < k; ++c) {
                if (count[c] == mu.part(c)) continue;
                if (members[c] & g.adjacency(v)) continue;
                ++count[c];
                members[c] |= 1ull << v;
                if (self(self, v + 1)) return true;
                --count[c];
                members[c] &= ~(1ull << v);
            }
            return false;
        };
        return rec(rec, 0);
    };
    for (int n = 2; n <= 7; ++n)
        for (const TreeCode& code : free_trees(n)) {
            Graph t = code.decode();
            for (const Partition& mu : partitions_of(n))
                CHECK(has_stable_partition(t, mu) == brute(t, mu));
        }
    Graph w33 = make_windmill(3, 3);
    for (const Partition& mu : partitions_of(7))
        CHECK(has_stable_partition(w33, mu) == brute(w33, mu));
}

TEST_CASE("Schur dominance violations") {
    auto star = schur_dominance_violation(make_star(4));
    REQUIRE(star.has_value());
    CHECK(star->first == P({3, 1}));
    CHECK(star->second == P({2, 2}));
    CHECK(!schur_dominance_violation(make_path(4)).has_value());
    CHECK(!schur_dominance_violation(make_spider(SpiderSpec(P({4, 1, 1})))).has_value());
}

TEST_CASE("criteria certificates") {
    // matching
    CHECK(matching_criterion(make_star(4)) == P({2, 2}));
    CHECK(matching_criterion(make_star(5)) == P({2, 2, 1}));
    CHECK(!matching_criterion(make_path(4)).has_value());
    for (int a = 1; a <= 3; ++a)
        CHECK(matching_criterion(make_spider(SpiderSpec(P({a, a, 1, 1, 1, 1})))).has_value());

    // short legs at a cut vertex
    auto w32 = short_legs_criterion(make_windmill(3, 2));
    REQUIRE(w32.has_value());
    CHECK(w32->missing_type == P({2, 2}));
    for (int d = 3; d <= 4; ++d)
        for (int n = 2; n <= 4; ++n)
            CHECK(short_legs_criterion(make_windmill(d, n)).has_value());
    CHECK(!short_legs_criterion(make_spider(SpiderSpec(P({4, 1, 1})))).has_value());

    // log2 bound
    CHECK(log2_cut_vertex_criterion(make_star(9)).has_value());
    CHECK(!log2_cut_vertex_criterion(make_path(6)).has_value());

    // bipartite degree
    auto sb = bipartite_degree_criterion(make_star(6));
    REQUIRE(sb.has_value());
    CHECK(sb->degree == 5);
    CHECK(sb->held_stable_type == P({5, 1}));
    CHECK(sb->missing_stable_type == P({3, 3}));
    CHECK(!bipartite_degree_criterion(make_path(6)).has_value());
    CHECK(!bipartite_degree_criterion(make_complete(4)).has_value());  // not bipartite
}

TEST_CASE("full report: spot verdicts") {
    auto r1 = full_report(make_spider(SpiderSpec(P({2, 1, 1}))), "S(2,1,1)");
    CHECK(r1.e_positive == true);
    CHECK(r1.schur_positive == true);
    CHECK(!r1.missing_connected_type.has_value());

    auto r2 = full_report(make_spider(SpiderSpec(P({6, 2, 1}))), "S(6,2,1)");
    CHECK(r2.e_positive == true);

    auto r3 = full_report(make_star(4), "S(1,1,1)");
    CHECK(r3.e_positive == false);
    CHECK(r3.schur_positive == false);
    CHECK(r3.missing_connected_type == P({2, 2}));
    CHECK(r3.violated_stable_type ==
          std::make_pair(P({3, 1}), P({2, 2})));

    auto r4 = full_report(make_spider(SpiderSpec(P({4, 1, 1}))), "S(4,1,1)");
    CHECK(r4.e_positive == false);
    CHECK(r4.schur_positive == true);
    CHECK(r4.e_witness->first == P({3, 2, 2}));
    CHECK(r4.e_witness->second == make_rat(-3));
    CHECK(!r4.missing_connected_type.has_value());
}

TEST_CASE("full report beyond the expansion bound still uses certificates") {
    ReportOptions opts;
    opts.max_edges = 10;
    auto report = full_report(make_windmill(4, 4), "W^4_4", opts);  // 24 edges
    CHECK(report.e_positive == false);
    CHECK(!report.e_witness.has_value());
    CHECK(report.missing_connected_type.has_value());

    // A graph too large to expand and with no certificate stays undecided.
    ReportOptions tiny;
    tiny.max_edges = 2;
    tiny.witness_search_max_n = 2;
    auto undecided = full_report(make_path(5), "P5", tiny);
    CHECK(!undecided.e_positive.has_value());
    CHECK(!undecided.schur_positive.has_value());
}

TEST_CASE("report JSON shape") {
    auto report = full_report(make_star(4), "star(4)");
    std::string json = report_to_json(report);
    CHECK(json.find("\"graph\":\"star(4)\"") != std::string::npos);
    CHECK(json.find("\"e_positive\":false") != std::string::npos);
    CHECK(json.find("\"missing_connected_type\":\"2,2\"") != std::string::npos);
    CHECK(json.find("criteria_fired") != std::string::npos);
}
