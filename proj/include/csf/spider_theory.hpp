#pragma once

#include <map>
#include <optional>
#include <string>

#include "csf/graph.hpp"
#include "csf/partition.hpp"

namespace csf {

enum class SpiderRule { ShortLegs, Induction, Quotient1, Quotient2, Quotient3, Matching };

std::string rule_name(SpiderRule rule);  // "short-legs", "quotient-1", ...

enum class MatchingClass { Perfect, Almost, Neither };

// A constructive non-e-positivity certificate: the named rule proves the
// spider is missing a connected partition of missing_type. Rule parameters are
// recorded by symbol name (m, i, N, a, q, r, dp, rp, t).
struct SpiderWitness {
    SpiderSpec spec;
    Partition missing_type;
    SpiderRule rule;
    std::map<std::string, long long> params;
};

// Perfect iff exactly one odd leg; Almost iff zero or two odd legs; Neither
// (three or more odd legs) means no perfect or almost perfect matching.
MatchingClass spider_matching_class(const SpiderSpec& spec);

// Neither-class spiders are missing the matching type (2^{n/2}) for even n or
// (2^{(n-1)/2}, 1) for odd n.
std::optional<SpiderWitness> matching_witness(const SpiderSpec& spec);

// Max leg m < floor(n/2): missing (n-m-1, m+1).
std::optional<SpiderWitness> short_legs_witness(const SpiderSpec& spec);

// Decomposes the longest leg as i + N*a over the remaining legs' total N and
// applies the inductive construction; missing type is (N^{a+1}, i+1) when
// m <= i < N and (N^a, N+i-m, m+1) when i < m.
std::optional<SpiderWitness> induction_witness(const SpiderSpec& spec);

// Quotient constructions. Writing n = q(l+1) + r, r = q*dp + rp for the pivot
// leg length l, each produces missing type (l+dp+2)^rp (l+dp+1)^(q-rp) under
// its hypotheses. Rule 1 pivots on leg 2, rule 2 on the least index i >= 3
// with a dominated tail, rule 3 on a caller-chosen index.
std::optional<SpiderWitness> quotient_witness_1(const SpiderSpec& spec);
std::optional<SpiderWitness> quotient_witness_2(const SpiderSpec& spec);
std::optional<SpiderWitness> quotient_witness_3(const SpiderSpec& spec, int index);

// Vertex-count bound n > 2^{d-1} under either hypothesis set:
//   (a) leg 1 >= sum of the rest, and every other prefix strictly exceeds its
//       tail sum;
//   (b) same but the last two legs are single vertices (d >= 4).
struct VertexBound {
    char hypothesis;   // 'a', 'b', or 0 when neither applies
    bool bound_holds;  // n > 2^{d-1}; meaningful when hypothesis != 0
};
VertexBound count_vertices_bound(const SpiderSpec& spec);

// Chains short-legs, quotient-1, quotient-2, matching, induction, quotient-3
// (pivot index ascending) and returns the first witness. When the degree
// satisfies d >= log2(n) + 1 a witness is guaranteed: failing to find one in
// that regime throws std::logic_error.
std::optional<SpiderWitness> spider_e_negativity_decision(const SpiderSpec& spec);

}  // namespace csf
