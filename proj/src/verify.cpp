#include "csf/verify.hpp"

#include <algorithm>
#include <map>

#include "csf/csf.hpp"
#include "csf/positivity.hpp"
#include "csf/spider_theory.hpp"
#include "csf/treegen.hpp"

namespace csf {

namespace {

Partition P(std::initializer_list<int> parts) { return Partition(std::vector<int>(parts)); }

SymFunc expand(const Graph& g, Basis basis, int workers) {
    CsfOptions opts;
    opts.workers = workers;
    return to_basis(chromatic_symmetric_function(g, opts), basis);
}

struct Ledger {
    std::vector<CheckResult> checks;
    int workers;

    void add(const std::string& name, bool pass, const std::string& detail = "") {
        checks.push_back({name, pass, detail});
    }
};

void check_partitions(Ledger& led) {
    led.add("transpose (2,2,1) -> (3,2)", P({2, 2, 1}).transpose() == P({3, 2}));
}

void check_s411(Ledger& led) {
    Graph g = make_spider(SpiderSpec(P({4, 1, 1})));
    SymFunc e = expand(g, Basis::E, led.workers);
    const std::map<Partition, long long, EnumOrderLess> expectedE{
        {P({2, 2, 2, 1}), 1}, {P({3, 2, 1, 1}), 4}, {P({3, 2, 2}), -3}, {P({3, 3, 1}), 10},
        {P({4, 2, 1}), 10},   {P({4, 3}), 17},      {P({5, 1, 1}), 4},  {P({5, 2}), 3},
        {P({6, 1}), 11},      {P({7}), 7}};
    bool okE = e.term_count() == expectedE.size();
    for (const auto& [key, val] : expectedE) okE = okE && e.coeff(key) == make_rat(val);
    led.add("X_{S(4,1,1)} e-expansion (10 displayed coefficients)", okE);

    SymFunc s = expand(g, Basis::S, led.workers);
    const std::map<Partition, long long, EnumOrderLess> expectedS{
        {P({1, 1, 1, 1, 1, 1, 1}), 64}, {P({2, 1, 1, 1, 1, 1}), 88}, {P({2, 2, 1, 1, 1}), 76},
        {P({2, 2, 2, 1}), 57},          {P({3, 1, 1, 1, 1}), 36},    {P({3, 2, 1, 1}), 36},
        {P({3, 2, 2}), 18},             {P({3, 3, 1}), 4},           {P({4, 1, 1, 1}), 5},
        {P({4, 2, 1}), 6},              {P({4, 3}), 1}};
    bool okS = s.term_count() == expectedS.size();
    for (const auto& [key, val] : expectedS) okS = okS && s.coeff(key) == make_rat(val);
    led.add("X_{S(4,1,1)} s-expansion (11 displayed coefficients)", okS);

    auto eres = is_nonnegative(e);
    led.add("S(4,1,1) not e-positive, witness -3 e_{(3,2^2)}",
            !eres.nonnegative && eres.witness && eres.witness->first == P({3, 2, 2}) &&
                eres.witness->second == make_rat(-3));
    led.add("S(4,1,1) Schur-positive", is_nonnegative(s).nonnegative);
    led.add("S(4,1,1) has a connected partition of every type",
            !missing_connected_type(g).has_value());
}

void check_families(Ledger& led) {
    Graph s4 = make_star(4);
    auto deg4 = s4.degrees();
    led.add("star S_4 shape", s4.n() == 4 && s4.edge_count() == 3 &&
                                  std::count(deg4.begin(), deg4.end(), 3) == 1);
    Graph sp = make_spider(SpiderSpec(P({4, 1, 1})));
    std::vector<int> degs = sp.degrees();
    std::sort(degs.rbegin(), degs.rend());
    led.add("spider S(4,1,1) shape", sp.n() == 7 && degs == std::vector<int>({3, 2, 2, 2, 1, 1, 1}));
    Graph w43 = make_windmill(4, 3);
    led.add("windmill W^4_3 shape", w43.n() == 9 && w43.edge_count() == 12);
    bool formula = true;
    for (int d = 1; d <= 4; ++d)
        for (int n = 1; n <= 4; ++n) formula = formula && make_windmill(d, n).n() == d * (n - 1) + 1;
    led.add("windmill W^d_n has d(n-1)+1 vertices (d,n <= 4)", formula);

    auto starComps = cut_vertex_components(s4, 0);
    led.add("S_4 minus centre: three singletons",
            starComps.size() == 3 && starComps[0].size() == 1);
    auto spComps = cut_vertex_components(sp, 0);
    led.add("S(4,1,1) minus centre: components (4,1,1)",
            spComps.size() == 3 && spComps[0].size() == 4 && spComps[1].size() == 1);
    auto pathComps = cut_vertex_components(make_path(4), 0);
    led.add("P_4 minus an endpoint: one component of size 3",
            pathComps.size() == 1 && pathComps[0].size() == 3);

    led.add("windmill W^4_3 reduces at the hub to S(2,2,2,2)",
            spider_reduction(w43, 0) == SpiderSpec(P({2, 2, 2, 2})));
    led.add("spiders are fixed points of the reduction",
            spider_reduction(sp, 0) == SpiderSpec(P({4, 1, 1})));
}

void check_bipartite_and_claw(Ledger& led) {
    bool trees = true;
    for (int n = 2; n <= 8 && trees; ++n)
        for (const TreeCode& code : free_trees(n))
            trees = trees && is_bipartite_with_parts(code.decode()).has_value();
    led.add("all trees are bipartite (n <= 8)", trees);
    led.add("K_3 is not bipartite", !is_bipartite_with_parts(make_complete(3)).has_value());
    bool starParts = true;
    for (int n = 4; n <= 10; ++n) {
        auto parts = is_bipartite_with_parts(make_star(n));
        starParts = starParts && parts && (*parts)[0] == std::make_pair(n - 1, 1);
    }
    led.add("star S_n bipartition (n-1, 1)", starParts);

    led.add("S_4 contains the claw", contains_claw(make_star(4)));
    led.add("S(2,1,1) contains the claw",
            contains_claw(make_spider(SpiderSpec(P({2, 1, 1})))));
    bool paths = true;
    for (int n = 1; n <= 10; ++n) paths = paths && !contains_claw(make_path(n));
    led.add("paths are claw-free (n <= 10)", paths);
}

void check_matchings(Ledger& led) {
    bool obs = true;
    for (int n = 1; n <= 10; ++n)
        obs = obs && has_perfect_matching(make_path(n)) == (n % 2 == 0);
    led.add("P_n has a perfect matching iff n is even (n <= 10)", obs);
    led.add("S_4 has no perfect matching", !has_perfect_matching(make_star(4)));
    led.add("S(2,1,1) has an almost perfect matching",
            has_almost_perfect_matching(make_spider(SpiderSpec(P({2, 1, 1})))));
}

void check_connected_partitions(Ledger& led) {
    led.add("S_4 is missing a connected partition of type (2,2)",
            !has_connected_partition(make_star(4), P({2, 2})));
    bool starTypes = true;
    for (int n = 4; n <= 8; ++n) {
        Graph s = make_star(n);
        for (const Partition& mu : partitions_of(n)) {
            bool hook = mu.length() <= 1 || mu.part(1) == 1;  // (k, 1^{n-k})
            starTypes = starTypes && has_connected_partition(s, mu) == hook;
        }
    }
    led.add("S_n has a connected partition of type mu iff mu = (k, 1^{n-k})", starTypes);

    Graph s2211 = make_spider(SpiderSpec(P({2, 2, 1, 1})));
    led.add("S(2,2,1,1) is missing a connected partition of type (4,3)",
            !has_connected_partition(s2211, P({4, 3})) &&
                missing_connected_type(s2211) == P({4, 3}));
    led.add("S(6,4,1,1) has a connected partition of every type",
            !missing_connected_type(make_spider(SpiderSpec(P({6, 4, 1, 1})))).has_value());
    bool starMissing = true;
    for (int n = 4; n <= 10; ++n)
        starMissing = starMissing && !has_connected_partition(make_star(n), P({n - 2, 2}));
    led.add("S_n is missing type (n-2,2) for n = 4..10", starMissing);
}

void check_stable_partitions(Ledger& led) {
    bool ok = true;
    for (int n = 4; n <= 10; ++n) {
        Graph s = make_star(n);
        ok = ok && has_stable_partition(s, P({n - 1, 1})) &&
             !has_stable_partition(s, P({n - 2, 2}));
    }
    led.add("star S_n: stable (n-1,1) present, (n-2,2) missing", ok);
    led.add("K_3 has a stable partition of type (1,1,1)",
            has_stable_partition(make_complete(3), P({1, 1, 1})));

    auto viol = schur_dominance_violation(make_star(4));
    led.add("S_4 dominance violation ((3,1) held, (2,2) missing)",
            viol && viol->first == P({3, 1}) && viol->second == P({2, 2}));
    led.add("S(4,1,1) has no dominance violation",
            !schur_dominance_violation(make_spider(SpiderSpec(P({4, 1, 1})))).has_value());
}

void check_criteria(Ledger& led) {
    bool matching = true;
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= a; ++b)
            for (int c = 1; c <= b; ++c) {
                Graph g = make_spider(SpiderSpec(P({a, b, c, 1, 1, 1})));
                matching = matching && matching_criterion(g).has_value();
            }
    led.add("S(a,b,c,1,1,1) always trips the matching criterion (a,b,c <= 3)", matching);

    bool windmills = true;
    for (int d = 3; d <= 4; ++d)
        for (int n = 2; n <= 4; ++n)
            windmills = windmills && short_legs_criterion(make_windmill(d, n)).has_value();
    led.add("W^d_n trips the short-legs criterion (3<=d<=4, 2<=n<=4)", windmills);

    bool stars = true;
    for (int n = 4; n <= 10; ++n) {
        auto cert = bipartite_degree_criterion(make_star(n));
        stars = stars && cert && cert->degree == n - 1 &&
                cert->missing_stable_type == P({(n + 1) / 2, n / 2});
    }
    led.add("star S_n trips the bipartite-degree criterion (n = 4..10)", stars);

    led.add("star S_9 trips the log2 cut-vertex criterion",
            log2_cut_vertex_criterion(make_star(9)).has_value());
}

void check_windmill_positivity(Ledger& led) {
    bool notPos = true;
    for (int d = 3; d <= 4; ++d)
        for (int n = 2; n <= 4; ++n) {
            Graph w = make_windmill(d, n);
            if (w.edge_count() <= 18) {
                notPos = notPos && !is_nonnegative(expand(w, Basis::E, led.workers)).nonnegative;
            } else {
                ReportOptions opts;
                opts.max_edges = 18;
                opts.workers = led.workers;
                auto report = full_report(w, "windmill", opts);
                notPos = notPos && report.e_positive == false;
            }
        }
    led.add("W^d_n not e-positive for 3<=d<=4, 2<=n<=4", notPos);

    bool pos = true;
    for (int n = 2; n <= 5; ++n)
        pos = pos && is_nonnegative(expand(make_complete(n), Basis::E, led.workers)).nonnegative;
    for (int n = 2; n <= 4; ++n)
        pos = pos && is_nonnegative(expand(make_windmill(2, n), Basis::E, led.workers)).nonnegative;
    led.add("K_n and W^2_n are e-positive (n <= 5 resp. n <= 4)", pos);
}

void check_spider_rules(Ledger& led) {
    led.add("matching class of (2,1,1) is ALMOST",
            spider_matching_class(SpiderSpec(P({2, 1, 1}))) == MatchingClass::Almost);
    led.add("matching class of (3,2,2) is PERFECT",
            spider_matching_class(SpiderSpec(P({3, 2, 2}))) == MatchingClass::Perfect);
    auto mw = matching_witness(SpiderSpec(P({4, 1, 1, 1, 1})));
    led.add("S(4,1,1,1,1): NEITHER, missing (2,2,2,2,1)",
            mw && mw->missing_type == P({2, 2, 2, 2, 1}));

    auto sl = short_legs_witness(SpiderSpec(P({2, 2, 1, 1})));
    led.add("short legs on (2,2,1,1): missing (4,3)", sl && sl->missing_type == P({4, 3}));
    auto sl2 = short_legs_witness(SpiderSpec(P({1, 1, 1})));
    led.add("short legs on (1,1,1): missing (2,2)", sl2 && sl2->missing_type == P({2, 2}));
    led.add("short legs silent on (4,1,1)",
            !short_legs_witness(SpiderSpec(P({4, 1, 1}))).has_value());

    auto ind = induction_witness(SpiderSpec(P({6, 2, 1, 1})));
    led.add("induction on S(6,2,1,1): missing (4,4,3) with i=2, N=4, a=1",
            ind && ind->missing_type == P({4, 4, 3}) && ind->params.at("i") == 2 &&
                ind->params.at("N") == 4 && ind->params.at("a") == 1);
    bool family = true;
    for (int a = 0; a <= 3; ++a) {
        auto w = induction_witness(SpiderSpec(P({2 + 4 * a, 2, 1, 1})));
        std::vector<int> parts(a + 1, 4);
        parts.push_back(3);
        family = family && w && w->missing_type == Partition(parts);
    }
    led.add("S(2+4a,2,1,1) missing (4^{a+1},3) for a = 0..3", family);
    led.add("induction silent on S(4,1,1)",
            !induction_witness(SpiderSpec(P({4, 1, 1}))).has_value());

    auto q1 = quotient_witness_1(SpiderSpec(P({8, 2, 2, 1})));
    led.add("quotient 1 on S(8,2,2,1): missing (4,4,3,3), q=4, r=2, d'=0, r'=2",
            q1 && q1->missing_type == P({4, 4, 3, 3}) && q1->params.at("q") == 4 &&
                q1->params.at("r") == 2 && q1->params.at("dp") == 0 && q1->params.at("rp") == 2);
    led.add("quotient 1 silent on S(6,4,1,1)",
            !quotient_witness_1(SpiderSpec(P({6, 4, 1, 1}))).has_value());

    auto q3 = quotient_witness_3(SpiderSpec(P({13, 6, 4, 1, 1})), 2);
    led.add("quotient 3 on S(13,6,4,1,1) at i=2: missing (9,9,8) with q=3, t=6",
            q3 && q3->missing_type == P({9, 9, 8}) && q3->params.at("q") == 3 &&
                q3->params.at("t") == 6);

    auto dec = spider_e_negativity_decision(SpiderSpec(P({8, 2, 2, 1})));
    led.add("decision on S(8,2,2,1) yields (4,4,3,3)",
            dec && dec->missing_type == P({4, 4, 3, 3}));
    led.add("decision silent on S(6,4,1,1)",
            !spider_e_negativity_decision(SpiderSpec(P({6, 4, 1, 1}))).has_value());
    auto dec2 = spider_e_negativity_decision(SpiderSpec(P({1, 1, 1, 1})));
    led.add("decision on S(1,1,1,1) yields a verified witness",
            dec2 && !has_connected_partition(make_spider(SpiderSpec(P({1, 1, 1, 1}))),
                                             dec2->missing_type));
}

void check_coefficient_identities(Ledger& led) {
    Graph s2211 = make_spider(SpiderSpec(P({2, 2, 1, 1})));
    led.add("[e_{(4,3)}] X_{S(2,2,1,1)} = -7",
            expand(s2211, Basis::E, led.workers).coeff(P({4, 3})) == make_rat(-7));

    bool r11 = true;
    for (int r = 3; r <= 10; ++r) {
        Graph g = make_spider(SpiderSpec(P({r, 1, 1})));
        r11 = r11 && expand(g, Basis::E, led.workers).coeff(P({r - 1, 2, 2})) == make_rat(1 - r);
    }
    led.add("[e_{(r-1,2^2)}] X_{S(r,1,1)} = -(r-1) for r = 3..10", r11);

    bool evenPair = true;
    for (int r = 2; r <= 6; r += 2)
        for (int s = 2; s <= r && r + s + 3 <= 12; s += 2) {
            Graph g = make_spider(SpiderSpec(P({r, s, 1, 1})));
            std::vector<int> key{3};
            for (int i = 0; i < (r + s) / 2; ++i) key.push_back(2);
            evenPair = evenPair &&
                       expand(g, Basis::E, led.workers).coeff(Partition(key)) ==
                           make_rat(-2 * (r + s) + 7);
        }
    led.add("[e_{(3,2^{k+l})}] X_{S(2k,2l,1,1)} = -2(r+s)+7 (n <= 12)", evenPair);
}

void check_named_positivity(Ledger& led) {
    led.add("S(2,1,1) is e-positive",
            is_nonnegative(expand(make_spider(SpiderSpec(P({2, 1, 1}))), Basis::E, led.workers))
                .nonnegative);
    led.add("S(6,2,1) is e-positive",
            is_nonnegative(expand(make_spider(SpiderSpec(P({6, 2, 1}))), Basis::E, led.workers))
                .nonnegative);
    led.add("S(1,1,1) is not e-positive",
            !is_nonnegative(expand(make_star(4), Basis::E, led.workers)).nonnegative);
    led.add("S(6,4,1,1) is not e-positive",
            !is_nonnegative(
                 expand(make_spider(SpiderSpec(P({6, 4, 1, 1}))), Basis::E, led.workers))
                 .nonnegative);
    bool stars = true;
    for (int n = 4; n <= 10; ++n)
        stars = stars && !is_nonnegative(expand(make_star(n), Basis::S, led.workers)).nonnegative;
    led.add("star S_n is not Schur-positive (n = 4..10)", stars);
}

}  // namespace

std::vector<CheckResult> verify_paper(int workers) {
    Ledger led;
    led.workers = workers;
    check_partitions(led);
    check_s411(led);
    check_families(led);
    check_bipartite_and_claw(led);
    check_matchings(led);
    check_connected_partitions(led);
    check_stable_partitions(led);
    check_criteria(led);
    check_windmill_positivity(led);
    check_spider_rules(led);
    check_coefficient_identities(led);
    check_named_positivity(led);
    return led.checks;
}

std::string checks_to_text(const std::vector<CheckResult>& checks) {
    std::string out;
    int failed = 0;
    for (const auto& c : checks) {
        out += c.name + ": " + (c.pass ? "PASS" : "FAIL");
        if (!c.detail.empty()) out += " (" + c.detail + ")";
        out += "\n";
        failed += c.pass ? 0 : 1;
    }
    out += std::to_string(checks.size() - failed) + "/" + std::to_string(checks.size()) +
           " checks passed\n";
    return out;
}

int count_failures(const std::vector<CheckResult>& checks) {
    int failed = 0;
    for (const auto& c : checks) failed += c.pass ? 0 : 1;
    return failed;
}

}  // namespace csf
