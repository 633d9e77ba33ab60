#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "csf/treegen.hpp"
#include "csf/util.hpp"
#include "support/oracles.hpp"

using namespace csf;

TEST_CASE("counts match the published sequence up to 12") {
    const long long expected[] = {0, 1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551};
    for (int n = 1; n <= 12; ++n)
        CHECK(static_cast<long long>(free_trees(n).size()) == expected[n]);
}

TEST_CASE("stream equals the Prufer oracle up to 8") {
    for (int n = 1; n <= 8; ++n) {
        auto oracleSet = oracle::prufer_tree_set(n);
        std::set<TreeCode> mine;
        for (const TreeCode& code : free_trees(n)) mine.insert(code);
        CHECK(mine == oracleSet);
    }
}

TEST_CASE("every emitted code decodes to a tree and is canonical") {
    for (int n = 2; n <= 10; ++n) {
        std::set<TreeCode> seen;
        for (const TreeCode& code : free_trees(n)) {
            Graph g = code.decode();
            CHECK(g.n() == n);
            CHECK(g.is_tree());
            CHECK(canonical_tree_code(g) == code);
            CHECK(seen.insert(code).second);  // no duplicates
        }
    }
}

TEST_CASE("canonical code is an isomorphism invariant") {
    // relabelled P4 and S4
    Graph p4a(4, {{0, 1}, {1, 2}, {2, 3}});
    Graph p4b(4, {{2, 0}, {0, 3}, {3, 1}});
    CHECK(canonical_tree_code(p4a) == canonical_tree_code(p4b));
    Graph s4a(4, {{0, 1}, {0, 2}, {0, 3}});
    Graph s4b(4, {{3, 0}, {3, 1}, {3, 2}});
    CHECK(canonical_tree_code(s4a) == canonical_tree_code(s4b));
    CHECK(!(canonical_tree_code(p4a) == canonical_tree_code(s4a)));
}

TEST_CASE("degree filters match post-hoc filtering") {
    for (int n = 5; n <= 9; ++n) {
        auto all = free_trees(n);
        auto deg4 = free_trees(n, [](const std::vector<int>& deg) {
            return *std::max_element(deg.begin(), deg.end()) >= 4;
        });
        long long expected = 0;
        for (const TreeCode& code : all) {
            auto d = code.decode().degrees();
            if (*std::max_element(d.begin(), d.end()) >= 4) ++expected;
        }
        CHECK(static_cast<long long>(deg4.size()) == expected);
        for (const TreeCode& code : deg4) {
            auto d = code.degrees();
            CHECK(*std::max_element(d.begin(), d.end()) >= 4);
        }
    }
}

TEST_CASE("codes round-trip through text") {
    for (const TreeCode& code : free_trees(7)) CHECK(TreeCode::parse(code.to_string()) == code);
    CHECK_THROWS(TreeCode::parse("1,2"));
    CHECK_THROWS(TreeCode::parse("0,2"));  // level jump
}

TEST_CASE("order bound") {
    CHECK_THROWS_AS(FreeTreeStream(20, nullptr), BoundError);
    CHECK_NOTHROW(FreeTreeStream(20, nullptr, 20));
    CHECK_THROWS(FreeTreeStream(0, nullptr));
}
