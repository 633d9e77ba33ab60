#include "csf/spider_theory.hpp"

#include <stdexcept>

namespace csf {

namespace {

// Tail sum of legs strictly after 0-based index i.
long long tail_sum(const SpiderSpec& spec, int i) {
    long long t = 0;
    for (int j = i + 1; j < spec.leg_count(); ++j) t += spec.legs.part(j);
    return t;
}

Partition matching_type(int n) {
    std::vector<int> parts(n / 2, 2);
    if (n % 2 == 1) parts.push_back(1);
    return Partition(parts);
}

// Shared arithmetic of the quotient constructions: n = q(l+1) + r,
// r = q*dp + rp, missing type (l+dp+2)^rp (l+dp+1)^(q-rp).
SpiderWitness quotient_result(const SpiderSpec& spec, int l, SpiderRule rule) {
    int n = spec.vertex_count();
    int q = n / (l + 1);
    int r = n % (l + 1);
    int dp = r / q;
    int rp = r % q;
    std::vector<int> parts;
    for (int i = 0; i < rp; ++i) parts.push_back(l + dp + 2);
    for (int i = 0; i < q - rp; ++i) parts.push_back(l + dp + 1);
    SpiderWitness w{spec, Partition(parts), rule, {}};
    w.params["q"] = q;
    w.params["r"] = r;
    w.params["dp"] = dp;
    w.params["rp"] = rp;
    return w;
}

}  // namespace

std::string rule_name(SpiderRule rule) {
    switch (rule) {
        case SpiderRule::ShortLegs: return "short-legs";
        case SpiderRule::Induction: return "induction";
        case SpiderRule::Quotient1: return "quotient-1";
        case SpiderRule::Quotient2: return "quotient-2";
        case SpiderRule::Quotient3: return "quotient-3";
        case SpiderRule::Matching: return "matching";
    }
    return "?";
}

MatchingClass spider_matching_class(const SpiderSpec& spec) {
    int odd = 0;
    for (int leg : spec.legs.parts()) odd += leg % 2;
    if (odd == 1) return MatchingClass::Perfect;
    if (odd == 0 || odd == 2) return MatchingClass::Almost;
    return MatchingClass::Neither;
}

std::optional<SpiderWitness> matching_witness(const SpiderSpec& spec) {
    if (spider_matching_class(spec) != MatchingClass::Neither) return std::nullopt;
    int n = spec.vertex_count();
    SpiderWitness w{spec, matching_type(n), SpiderRule::Matching, {}};
    int odd = 0;
    for (int leg : spec.legs.parts()) odd += leg % 2;
    w.params["odd_legs"] = odd;
    return w;
}

std::optional<SpiderWitness> short_legs_witness(const SpiderSpec& spec) {
    int n = spec.vertex_count();
    int m = spec.legs.max_part();
    if (m >= n / 2) return std::nullopt;
    SpiderWitness w{spec, Partition({n - m - 1, m + 1}), SpiderRule::ShortLegs, {}};
    w.params["m"] = m;
    return w;
}

std::optional<SpiderWitness> induction_witness(const SpiderSpec& spec) {
    long long longest = spec.legs.part(0);
    // The rest of the legs must themselves form a partition with >= 2 parts.
    if (spec.leg_count() < 3) return std::nullopt;
    long long bigN = tail_sum(spec, 0);
    long long m = spec.legs.part(1);
    long long lo = std::max(2 * m - bigN + 1, 0ll);
    // i is the residue of the longest leg mod N; the only candidate
    // decomposition i + N*a has i in [lo, N).
    if (bigN <= 0) return std::nullopt;
    long long i = longest % bigN;
    long long a = longest / bigN;
    if (a < 0 || i < lo) return std::nullopt;
    std::vector<int> parts;
    if (i >= m) {  // missing (N^{a+1}, i+1)
        for (long long k = 0; k <= a; ++k) parts.push_back(static_cast<int>(bigN));
        parts.push_back(static_cast<int>(i + 1));
    } else {  // missing (N^a, N+i-m, m+1)
        for (long long k = 0; k < a; ++k) parts.push_back(static_cast<int>(bigN));
        parts.push_back(static_cast<int>(bigN + i - m));
        parts.push_back(static_cast<int>(m + 1));
    }
    SpiderWitness w{spec, Partition(parts), SpiderRule::Induction, {}};
    w.params["i"] = i;
    w.params["N"] = bigN;
    w.params["a"] = a;
    w.params["m"] = m;
    return w;
}

std::optional<SpiderWitness> quotient_witness_1(const SpiderSpec& spec) {
    if (spec.leg_count() < 3) return std::nullopt;
    long long l1 = spec.legs.part(0), l2 = spec.legs.part(1);
    if (l2 < 2) return std::nullopt;
    if (l1 < tail_sum(spec, 0)) return std::nullopt;  // l1 >= l2 + ... + ld
    if (l2 > tail_sum(spec, 1)) return std::nullopt;  // l2 <= l3 + ... + ld
    int n = spec.vertex_count();
    int q = n / (static_cast<int>(l2) + 1);
    if (!(l2 >= 3 || (l2 == 2 && q >= 3))) return std::nullopt;
    return quotient_result(spec, static_cast<int>(l2), SpiderRule::Quotient1);
}

std::optional<SpiderWitness> quotient_witness_2(const SpiderSpec& spec) {
    int d = spec.leg_count();
    // Pivot: the least 1-based i >= 3 whose leg is at most its tail sum.
    // Leg 1 may equal its tail; legs 2..i-1 must strictly exceed theirs (the
    // strictness that drives the quotient bound enters at leg 2).
    if (spec.legs.part(0) < tail_sum(spec, 0)) return std::nullopt;
    if (spec.legs.part(1) <= tail_sum(spec, 1)) return std::nullopt;
    for (int i = 2; i < d; ++i) {  // 0-based pivot candidate, 1-based i+1 >= 3
        long long li = spec.legs.part(i);
        long long t = tail_sum(spec, i);
        if (li <= t) {
            if (li < 2) return std::nullopt;
            auto w = quotient_result(spec, static_cast<int>(li), SpiderRule::Quotient2);
            w.params["i"] = i + 1;
            return w;
        }
    }
    return std::nullopt;
}

std::optional<SpiderWitness> quotient_witness_3(const SpiderSpec& spec, int index) {
    int d = spec.leg_count();
    if (index < 2 || index >= d) return std::nullopt;  // 1-based, needs a nonempty tail
    long long li = spec.legs.part(index - 1);
    long long t = tail_sum(spec, index - 1);
    if (t <= 1) return std::nullopt;
    int n = spec.vertex_count();
    long long q = n / (li + 1);
    if (q * (t - 1) < li + 1) return std::nullopt;
    auto w = quotient_result(spec, static_cast<int>(li), SpiderRule::Quotient3);
    w.params["i"] = index;
    w.params["t"] = t;
    return w;
}

VertexBound count_vertices_bound(const SpiderSpec& spec) {
    int d = spec.leg_count();
    int n = spec.vertex_count();
    bool boundHolds = n > (1 << (d - 1));
    bool a = spec.legs.part(0) >= tail_sum(spec, 0);
    for (int i = 1; a && i <= d - 2; ++i) a = spec.legs.part(i) > tail_sum(spec, i);
    if (a) return {'a', boundHolds};
    bool b = d >= 4 && spec.legs.part(d - 2) == 1 && spec.legs.part(d - 1) == 1 &&
             spec.legs.part(0) >= tail_sum(spec, 0);
    for (int i = 1; b && i <= d - 3; ++i) b = spec.legs.part(i) > tail_sum(spec, i);
    if (b) return {'b', boundHolds};
    return {0, boundHolds};
}

std::optional<SpiderWitness> spider_e_negativity_decision(const SpiderSpec& spec) {
    if (auto w = short_legs_witness(spec)) return w;
    if (auto w = quotient_witness_1(spec)) return w;
    if (auto w = quotient_witness_2(spec)) return w;
    if (auto w = matching_witness(spec)) return w;
    if (auto w = induction_witness(spec)) return w;
    for (int i = 2; i < spec.leg_count(); ++i) {
        if (auto w = quotient_witness_3(spec, i)) return w;
    }
    int d = spec.leg_count();
    int n = spec.vertex_count();
    if (d >= 2 && d - 1 < 62 && (1ll << (d - 1)) >= n) {
        throw std::logic_error("spider decision: no rule fired for " + spec.legs.to_string() +
                               " despite d >= log2(n) + 1");
    }
    return std::nullopt;
}

}  // namespace csf
