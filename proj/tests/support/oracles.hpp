// Independent oracles used only by tests: brute-force expansions, exhaustive
// enumerations, and classical recurrences. Nothing here shares code with the
// implementation paths it checks.
#pragma once

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "csf/graph.hpp"
#include "csf/partition.hpp"
#include "csf/symfunc.hpp"
#include "csf/treegen.hpp"

namespace oracle {

// Partition counts p(0..max) by Euler's pentagonal-number recurrence.
inline std::vector<long long> partition_counts(int max) {
    std::vector<long long> p(max + 1, 0);
    p[0] = 1;
    for (int n = 1; n <= max; ++n) {
        for (int k = 1;; ++k) {
            long long g1 = static_cast<long long>(k) * (3 * k - 1) / 2;
            long long g2 = static_cast<long long>(k) * (3 * k + 1) / 2;
            if (g1 > n && g2 > n) break;
            long long sign = (k % 2 == 1) ? 1 : -1;
            if (g1 <= n) p[n] += sign * p[n - g1];
            if (g2 <= n) p[n] += sign * p[n - g2];
        }
    }
    return p;
}

// Dense symmetric polynomials in `vars` variables: exponent vector -> coeff.
using Poly = std::map<std::vector<int>, long long>;

inline Poly poly_one(int vars) { return {{std::vector<int>(vars, 0), 1}}; }

inline Poly poly_mul(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            std::vector<int> e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out[e] += ca * cb;
        }
    return out;
}

inline Poly elementary_poly(int k, int vars) {
    Poly out;
    std::vector<int> idx(k);
    auto rec = [&](auto&& self, int pos, int from) -> void {
        if (pos == k) {
            std::vector<int> e(vars, 0);
            for (int i : idx) e[i] = 1;
            out[e] += 1;
            return;
        }
        for (int i = from; i < vars; ++i) {
            idx[pos] = i;
            self(self, pos + 1, i + 1);
        }
    };
    rec(rec, 0, 0);
    return out;
}

inline Poly power_sum_poly(int k, int vars) {
    Poly out;
    for (int i = 0; i < vars; ++i) {
        std::vector<int> e(vars, 0);
        e[i] = k;
        out[e] += 1;
    }
    return out;
}

inline Poly product_poly(const csf::Partition& lambda, int vars, bool elementary) {
    Poly cur = poly_one(vars);
    for (int k : lambda.parts())
        cur = poly_mul(cur, elementary ? elementary_poly(k, vars) : power_sum_poly(k, vars));
    return cur;
}

// The coefficient of m_mu read off a dense polynomial: the coefficient of the
// representative exponent vector (mu padded with zeros).
inline long long monomial_coeff(const Poly& p, const csf::Partition& mu, int vars) {
    std::vector<int> e(mu.parts());
    e.resize(vars, 0);
    auto it = p.find(e);
    return it == p.end() ? 0 : it->second;
}

// Evaluates a SymFunc to a dense polynomial in `vars` variables; exact when
// vars >= degree. E and P keys expand by definition, M keys by symmetrising.
inline Poly to_poly(const csf::SymFunc& f, int vars) {
    Poly out;
    for (const auto& [key, value] : f.coeffs()) {
        long long c = static_cast<long long>(mpz_get_si(mpq_numref(value.get_mpq_t())));
        if (value.get_den() != 1) throw std::logic_error("oracle expects integer coefficients");
        Poly term;
        if (f.basis() == csf::Basis::E || f.basis() == csf::Basis::P) {
            term = product_poly(key, vars, f.basis() == csf::Basis::E);
        } else if (f.basis() == csf::Basis::M) {
            std::vector<int> e(key.parts());
            e.resize(vars, 0);
            std::sort(e.begin(), e.end());
            term.clear();
            do {
                term[e] = 1;
            } while (std::next_permutation(e.begin(), e.end()));
        } else {
            throw std::logic_error("oracle cannot expand this basis directly");
        }
        for (const auto& [e, tc] : term) out[e] += c * tc;
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

// Newton-Girard: p_k in the E basis via
// p_k = (-1)^{k-1} k e_k + sum_{i=1}^{k-1} (-1)^{i-1} e_i p_{k-i}.
inline csf::SymFunc newton_girard_p_in_e(int k) {
    using namespace csf;
    std::vector<SymFunc> p;  // p[j] = p_j in E basis
    p.emplace_back(SymFunc::unit(Basis::E, Partition()));  // p_0 = 1 placeholder
    for (int j = 1; j <= k; ++j) {
        SymFunc pj(Basis::E, j);
        pj.add_term(Partition::repeated(j, 1), make_rat((j % 2 == 1 ? 1 : -1) * j));
        for (int i = 1; i < j; ++i) {
            SymFunc term = multiply_multiplicative(SymFunc::unit(Basis::E, Partition({i})), p[j - i]);
            term *= make_rat(i % 2 == 1 ? 1 : -1);
            pj += term;
        }
        p.push_back(pj);
    }
    return p[k];
}

// Set partitions of {0..n-1} via restricted growth strings; returns the set of
// types realised with every block inducing a connected subgraph.
inline std::set<csf::Partition, csf::EnumOrderLess> connected_types_by_enumeration(
    const csf::Graph& g) {
    int n = g.n();
    std::set<csf::Partition, csf::EnumOrderLess> types;
    std::vector<int> assign(n, 0);
    auto rec = [&](auto&& self, int v, int maxUsed) -> void {
        if (v == n) {
            std::vector<uint64_t> blocks(maxUsed + 1, 0);
            for (int i = 0; i < n; ++i) blocks[assign[i]] |= 1ull << i;
            std::vector<int> sizes;
            for (uint64_t b : blocks) {
                if (g.components_of_mask(b).size() != 1) return;
                sizes.push_back(std::popcount(b));
            }
            types.insert(csf::Partition(sizes));
            return;
        }
        for (int c = 0; c <= maxUsed + 1 && c < n; ++c) {
            assign[v] = c;
            self(self, v + 1, std::max(maxUsed, c));
        }
    };
    assign[0] = 0;
    rec(rec, 1, 0);
    if (n == 1) types.insert(csf::Partition({1}));
    return types;
}

// Perfect matching by brute force over edge subsets.
inline bool perfect_matching_brute(const csf::Graph& g) {
    if (g.n() % 2 != 0) return false;
    int m = g.edge_count();
    for (uint64_t s = 0; s < (1ull << m); ++s) {
        if (std::popcount(s) != g.n() / 2) continue;
        uint64_t covered = 0;
        bool ok = true;
        for (int e = 0; e < m && ok; ++e) {
            if (!(s >> e & 1)) continue;
            uint64_t ends = (1ull << g.edges()[e].first) | (1ull << g.edges()[e].second);
            if (covered & ends) ok = false;
            covered |= ends;
        }
        if (ok && covered == g.full_mask()) return true;
    }
    return false;
}

// All free trees on n vertices by Prufer sequences + canonical deduplication.
inline std::set<csf::TreeCode> prufer_tree_set(int n) {
    std::set<csf::TreeCode> out;
    if (n == 1) {
        out.insert(csf::TreeCode{{0}});
        return out;
    }
    if (n == 2) {
        out.insert(csf::canonical_tree_code(csf::make_path(2)));
        return out;
    }
    std::vector<int> seq(n - 2, 0);
    while (true) {
        // decode Prufer sequence
        std::vector<int> degree(n, 1);
        for (int v : seq) ++degree[v];
        std::vector<std::pair<int, int>> edges;
        uint64_t leaves = 0;
        for (int v = 0; v < n; ++v)
            if (degree[v] == 1) leaves |= 1ull << v;
        uint64_t leafSet = leaves;
        for (int v : seq) {
            int leaf = std::countr_zero(leafSet);
            edges.emplace_back(leaf, v);
            leafSet &= ~(1ull << leaf);
            if (--degree[v] == 1) leafSet |= 1ull << v;
        }
        int a = std::countr_zero(leafSet);
        uint64_t rest = leafSet & (leafSet - 1);
        int b = std::countr_zero(rest);
        edges.emplace_back(a, b);
        out.insert(csf::canonical_tree_code(csf::Graph(n, edges)));
        int pos = n - 3;
        while (pos >= 0 && seq[pos] == n - 1) seq[pos--] = 0;
        if (pos < 0) break;
        ++seq[pos];
    }
    return out;
}

}  // namespace oracle
