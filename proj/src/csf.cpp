#include "csf/csf.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>
#include <thread>
#include <vector>

#include "csf/util.hpp"

namespace csf {

namespace {

// Component-size partition of (V, S) for an edge subset, as a descending
// sorted size vector.
void component_sizes(int n, const std::vector<std::pair<int, int>>& edges, uint64_t subset,
                     std::vector<int>& parent, std::vector<int>& out) {
    parent.resize(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    uint64_t s = subset;
    while (s) {
        int e = std::countr_zero(s);
        s &= s - 1;
        int a = find(edges[e].first), b = find(edges[e].second);
        if (a != b) parent[a] = b;
    }
    std::vector<int> size(n, 0);
    for (int i = 0; i < n; ++i) ++size[find(i)];
    out.clear();
    for (int i = 0; i < n; ++i)
        if (size[i] > 0) out.push_back(size[i]);
    std::sort(out.rbegin(), out.rend());
}

}  // namespace

SymFunc chromatic_symmetric_function(const Graph& g, const CsfOptions& opts) {
    int m = g.edge_count();
    if (m > opts.max_edges)
        throw BoundError("edge count " + std::to_string(m) + " above the subset-route bound " +
                         std::to_string(opts.max_edges));
    int n = g.n();
    const auto parts = partitions_of(n);
    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < parts.size(); ++i) index.emplace(parts[i].parts(), static_cast<int>(i));

    uint64_t total = 1ull << m;
    int workers = static_cast<int>(std::min<uint64_t>(worker_count(opts.workers), total));
    std::vector<std::vector<long long>> local(workers, std::vector<long long>(parts.size(), 0));
    auto run = [&](int w) {
        uint64_t lo = total / workers * w + std::min<uint64_t>(w, total % workers);
        uint64_t hi = lo + total / workers + (static_cast<uint64_t>(w) < total % workers ? 1 : 0);
        std::vector<int> parent, sizes;
        auto& acc = local[w];
        for (uint64_t s = lo; s < hi; ++s) {
            component_sizes(n, g.edges(), s, parent, sizes);
            int sign = std::popcount(s) % 2 == 0 ? 1 : -1;
            acc[index.at(sizes)] += sign;
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> threads;
        for (int w = 0; w < workers; ++w) threads.emplace_back(run, w);
        for (auto& t : threads) t.join();
    }

    SymFunc out(Basis::P, n);
    for (size_t i = 0; i < parts.size(); ++i) {
        long long c = 0;
        for (int w = 0; w < workers; ++w) c += local[w][i];
        if (c != 0) out.add_term(parts[i], make_rat(c));
    }
    return out;
}

SymFunc csf_coloring_oracle(const Graph& g) {
    int n = g.n();
    if (n > 7) throw BoundError("colouring oracle is limited to n <= 7");
    // Tally of sorted colour-multiplicity vectors over all proper colourings
    // kappa : V -> {1..n}.
    std::map<std::vector<int>, long long> tally;
    std::vector<int> colour(n, -1);
    std::vector<int> counts(n, 0);
    auto rec = [&](auto&& self, int v) -> void {
        if (v == n) {
            std::vector<int> key;
            for (int c : counts)
                if (c > 0) key.push_back(c);
            std::sort(key.rbegin(), key.rend());
            ++tally[key];
            return;
        }
        for (int c = 0; c < n; ++c) {
            bool ok = true;
            uint64_t nb = g.adjacency(v);
            while (nb && ok) {
                int u = std::countr_zero(nb);
                nb &= nb - 1;
                if (u < v && colour[u] == c) ok = false;
            }
            if (!ok) continue;
            colour[v] = c;
            ++counts[c];
            self(self, v + 1);
            --counts[c];
            colour[v] = -1;
        }
    };
    rec(rec, 0);

    auto factorial = [](int k) {
        Int f = 1;
        for (int i = 2; i <= k; ++i) f *= i;
        return f;
    };
    SymFunc out(Basis::M, n);
    for (const auto& [sizes, count] : tally) {
        Partition mu(sizes);
        // The tally saw every arrangement of mu over the n colour slots; the
        // monomial coefficient is the count per single arrangement.
        Int den = factorial(n - mu.length());
        for (int i = 0; i < mu.length();) {
            int j = i;
            while (j < mu.length() && mu.part(j) == mu.part(i)) ++j;
            den *= factorial(j - i);
            i = j;
        }
        Rat coeff = Rat(make_int(count)) / Rat(factorial(n) / den);
        out.add_term(mu, coeff);
    }
    return out;
}

}  // namespace csf
