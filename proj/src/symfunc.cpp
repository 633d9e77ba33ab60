#include "csf/symfunc.hpp"

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "json.hpp"

namespace csf {

namespace {

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Value -> count view of a partition's parts.
std::vector<std::pair<int, int>> value_counts(const Partition& p) {
    std::vector<std::pair<int, int>> vc;
    for (int v : p.parts()) {
        if (!vc.empty() && vc.back().first == v) ++vc.back().second;
        else vc.emplace_back(v, 1);
    }
    return vc;
}

// f (in M) times e_k. For each key nu, increment t_v of the parts equal to v
// and introduce t_0 new parts equal to 1, with sum of t's equal to k; the
// resulting key mu picks up multiplier prod_w C(mult_mu(w), #increments into w).
SymFunc multiply_by_e(const SymFunc& f, int k) {
    SymFunc out(Basis::M, f.degree() + k);
    for (const auto& [nu, c] : f.coeffs()) {
        auto vc = value_counts(nu);
        std::vector<int> t(vc.size(), 0);
        auto emit = [&](int newOnes) {
            std::vector<int> parts;
            std::vector<std::pair<int, int>> incremented;  // (target value, count)
            for (size_t i = 0; i < vc.size(); ++i) {
                for (int j = 0; j < vc[i].second - t[i]; ++j) parts.push_back(vc[i].first);
                if (t[i] > 0) incremented.emplace_back(vc[i].first + 1, t[i]);
            }
            for (auto [w, d] : incremented)
                for (int j = 0; j < d; ++j) parts.push_back(w);
            if (newOnes > 0) {
                incremented.emplace_back(1, newOnes);
                for (int j = 0; j < newOnes; ++j) parts.push_back(1);
            }
            Partition mu(parts);
            long long mult = 1;
            for (auto [w, d] : incremented) mult *= binomial(mu.multiplicity(w), d);
            out.add_term(mu, c * make_rat(mult));
        };
        auto rec = [&](auto&& self, size_t i, int rem) -> void {
            if (i == vc.size()) {
                emit(rem);  // remaining increments become new parts of size 1
                return;
            }
            int hi = std::min(vc[i].second, rem);
            for (int ti = 0; ti <= hi; ++ti) {
                t[i] = ti;
                self(self, i + 1, rem - ti);
            }
            t[i] = 0;
        };
        rec(rec, 0, k);
    }
    return out;
}

// f (in M) times p_k: either append a new part k, or grow one existing part
// value v to v + k; multiplier is the multiplicity of the target value in mu.
SymFunc multiply_by_p(const SymFunc& f, int k) {
    SymFunc out(Basis::M, f.degree() + k);
    for (const auto& [nu, c] : f.coeffs()) {
        {
            std::vector<int> parts = nu.parts();
            parts.push_back(k);
            Partition mu(parts);
            out.add_term(mu, c * Rat(mu.multiplicity(k)));
        }
        auto vc = value_counts(nu);
        for (auto [v, cnt] : vc) {
            std::vector<int> parts;
            bool grown = false;
            for (int p : nu.parts()) {
                if (!grown && p == v) {
                    parts.push_back(v + k);
                    grown = true;
                } else {
                    parts.push_back(p);
                }
            }
            Partition mu(parts);
            out.add_term(mu, c * Rat(mu.multiplicity(v + k)));
        }
    }
    return out;
}

// All shapes reachable from nu by adding a horizontal strip of size c.
std::vector<Partition> horizontal_strip_additions(const Partition& nu, int c) {
    std::vector<Partition> out;
    int rows = nu.length();
    std::vector<int> shape(rows + 1, 0);
    auto rec = [&](auto&& self, int row, int rem) -> void {
        if (row == rows + 1) {
            if (rem == 0) {
                std::vector<int> parts;
                for (int i = 0; i <= rows; ++i)
                    if (shape[i] > 0) parts.push_back(shape[i]);
                out.emplace_back(parts);
            }
            return;
        }
        int base = row < rows ? nu.part(row) : 0;
        // Strip condition: new row value stays <= previous row's old value.
        int cap = row == 0 ? base + rem : std::min(base + rem, nu.part(row - 1));
        for (int val = base; val <= cap; ++val) {
            shape[row] = val;
            self(self, row + 1, rem - (val - base));
        }
        shape[row] = base;
    };
    rec(rec, 0, c);
    return out;
}

}  // namespace

char basis_letter(Basis b) { return static_cast<char>(b); }

Basis basis_from_letter(char c) {
    switch (std::tolower(static_cast<unsigned char>(c))) {
        case 'p': return Basis::P;
        case 'm': return Basis::M;
        case 'e': return Basis::E;
        case 's': return Basis::S;
        default: throw std::invalid_argument(std::string("unknown basis letter: ") + c);
    }
}

SymFunc::SymFunc(Basis basis, int degree) : basis_(basis), degree_(degree) {
    if (degree < 0) throw std::invalid_argument("negative degree");
}

SymFunc SymFunc::unit(Basis basis, const Partition& key) {
    SymFunc f(basis, key.weight());
    f.add_term(key, Rat(1));
    return f;
}

Rat SymFunc::coeff(const Partition& key) const {
    auto it = coeffs_.find(key);
    return it == coeffs_.end() ? Rat(0) : it->second;
}

void SymFunc::add_term(const Partition& key, const Rat& value) {
    if (key.weight() != degree_)
        throw std::invalid_argument("term weight does not match degree");
    if (csf::is_zero(value)) return;
    auto [it, inserted] = coeffs_.emplace(key, value);
    if (!inserted) {
        it->second += value;
        if (csf::is_zero(it->second)) coeffs_.erase(it);
    }
}

void SymFunc::set_term(const Partition& key, const Rat& value) {
    if (key.weight() != degree_)
        throw std::invalid_argument("term weight does not match degree");
    coeffs_.erase(key);
    if (!csf::is_zero(value)) coeffs_.emplace(key, value);
}

SymFunc& SymFunc::operator+=(const SymFunc& other) {
    if (other.basis_ != basis_ || other.degree_ != degree_)
        throw std::invalid_argument("cannot add across bases or degrees");
    for (const auto& [key, value] : other.coeffs_) add_term(key, value);
    return *this;
}

SymFunc& SymFunc::operator*=(const Rat& scalar) {
    if (csf::is_zero(scalar)) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [key, value] : coeffs_) value *= scalar;
    return *this;
}

bool SymFunc::operator==(const SymFunc& other) const {
    return basis_ == other.basis_ && degree_ == other.degree_ && coeffs_ == other.coeffs_;
}

NonnegativityResult is_nonnegative(const SymFunc& f) {
    for (const auto& [key, value] : f.coeffs()) {
        if (is_negative(value)) return {false, std::make_pair(key, value)};
    }
    return {true, std::nullopt};
}

SymFunc multiply_multiplicative(const SymFunc& a, const SymFunc& b) {
    if (a.basis() != b.basis()) throw std::invalid_argument("basis mismatch");
    if (a.basis() != Basis::E && a.basis() != Basis::P)
        throw std::invalid_argument("concatenation product needs a multiplicative basis");
    SymFunc out(a.basis(), a.degree() + b.degree());
    for (const auto& [ka, va] : a.coeffs()) {
        for (const auto& [kb, vb] : b.coeffs()) {
            std::vector<int> parts = ka.parts();
            parts.insert(parts.end(), kb.parts().begin(), kb.parts().end());
            out.add_term(Partition(parts), va * vb);
        }
    }
    return out;
}

KostkaTable::KostkaTable(int degree)
    : degree_(degree), parts_(partitions_of(degree)) {
    for (size_t i = 0; i < parts_.size(); ++i) index_.emplace(parts_[i], static_cast<int>(i));
    size_t np = parts_.size();
    k_.assign(np, std::vector<long long>(np, 0));
    for (size_t j = 0; j < np; ++j) {
        // Build shapes by adding horizontal strips of the content parts in order.
        std::map<Partition, long long, EnumOrderLess> state;
        state.emplace(Partition(), 1);
        for (int c : parts_[j].parts()) {
            std::map<Partition, long long, EnumOrderLess> next;
            for (const auto& [shape, count] : state)
                for (const Partition& grown : horizontal_strip_additions(shape, c))
                    next[grown] += count;
            state = std::move(next);
        }
        for (const auto& [shape, count] : state) k_[index_.at(shape)][j] = count;
    }
}

int KostkaTable::index_of(const Partition& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) throw std::invalid_argument("partition weight does not match table degree");
    return it->second;
}

long long KostkaTable::kostka(const Partition& shape, const Partition& content) const {
    return k_[index_of(shape)][index_of(content)];
}

SymFunc e_to_m(const Partition& lambda) {
    SymFunc cur(Basis::M, 0);
    cur.add_term(Partition(), Rat(1));
    for (int k : lambda.parts()) cur = multiply_by_e(cur, k);
    return cur;
}

SymFunc p_to_m(const Partition& lambda) {
    SymFunc cur(Basis::M, 0);
    cur.add_term(Partition(), Rat(1));
    for (int k : lambda.parts()) cur = multiply_by_p(cur, k);
    return cur;
}

SymFunc s_to_m(const Partition& lambda, const KostkaTable& kostka) {
    if (lambda.weight() != kostka.degree())
        throw std::invalid_argument("Kostka table degree does not match partition weight");
    SymFunc out(Basis::M, lambda.weight());
    int shape = kostka.index_of(lambda);
    const auto& parts = kostka.partitions();
    for (size_t j = 0; j < parts.size(); ++j) {
        long long k = kostka.kostka_by_index(shape, static_cast<int>(j));
        if (k != 0) out.add_term(parts[j], make_rat(k));
    }
    return out;
}

DegreeTables::DegreeTables(int degree)
    : degree_(degree), parts_(partitions_of(degree)), kostka_(degree) {
    for (size_t i = 0; i < parts_.size(); ++i) index_.emplace(parts_[i], static_cast<int>(i));
    e_rows_.reserve(parts_.size());
    p_rows_.reserve(parts_.size());
    s_rows_.reserve(parts_.size());
    for (const Partition& p : parts_) {
        e_rows_.push_back(e_to_m(p));
        p_rows_.push_back(p_to_m(p));
        s_rows_.push_back(s_to_m(p, kostka_));
    }
}

std::shared_ptr<const DegreeTables> DegreeTables::get(int degree) {
    static std::mutex mu;
    static std::unordered_map<int, std::shared_ptr<const DegreeTables>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(degree);
    if (it == cache.end()) {
        it = cache.emplace(degree, std::shared_ptr<const DegreeTables>(new DegreeTables(degree))).first;
    }
    return it->second;
}

int DegreeTables::index_of(const Partition& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) throw std::invalid_argument("partition weight does not match table degree");
    return it->second;
}

const SymFunc& DegreeTables::row_in_m(Basis basis, int index) const {
    switch (basis) {
        case Basis::E: return e_rows_[index];
        case Basis::P: return p_rows_[index];
        case Basis::S: return s_rows_[index];
        default: throw std::invalid_argument("no monomial rows for the M basis");
    }
}

namespace {

SymFunc expand_to_m(const SymFunc& f) {
    if (f.basis() == Basis::M) return f;
    auto tables = DegreeTables::get(f.degree());
    SymFunc out(Basis::M, f.degree());
    for (const auto& [key, value] : f.coeffs()) {
        const SymFunc& row = tables->row_in_m(f.basis(), tables->index_of(key));
        for (const auto& [rkey, rvalue] : row.coeffs()) out.add_term(rkey, value * rvalue);
    }
    return out;
}

void subtract_scaled(SymFunc& g, const Rat& c, const SymFunc& row) {
    for (const auto& [key, value] : row.coeffs()) g.add_term(key, -c * value);
}

// Back-substitution out of M. The E system is unitriangular after pairing a
// monomial key with its transpose; the S system is unitriangular directly; the
// P system is triangular from the refined end with diagonal prod(mult_j!).
SymFunc eliminate_from_m(const SymFunc& fm, Basis target) {
    auto tables = DegreeTables::get(fm.degree());
    const auto& parts = tables->partitions();
    SymFunc g = fm;
    SymFunc out(target, fm.degree());
    if (target == Basis::E || target == Basis::S) {
        for (const Partition& nu : parts) {
            Rat c = g.coeff(nu);
            if (is_zero(c)) continue;
            Partition key = target == Basis::E ? nu.transpose() : nu;
            out.add_term(key, c);
            subtract_scaled(g, c, tables->row_in_m(target, tables->index_of(key)));
        }
    } else {  // P
        for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
            const Partition& nu = *it;
            Rat c = g.coeff(nu);
            if (is_zero(c)) continue;
            Rat diag(1);
            auto vc = value_counts(nu);
            for (auto [v, cnt] : vc) {
                (void)v;
                for (int j = 2; j <= cnt; ++j) diag *= j;
            }
            Rat coeff = c / diag;
            out.add_term(nu, coeff);
            subtract_scaled(g, coeff, tables->row_in_m(Basis::P, tables->index_of(nu)));
        }
    }
    if (!g.is_zero())
        throw std::logic_error("basis elimination left a nonzero residual (transition matrix ordering bug)");
    return out;
}

}  // namespace

SymFunc to_basis(const SymFunc& f, Basis target) {
    if (f.basis() == target) return f;
    SymFunc fm = expand_to_m(f);
    if (target == Basis::M) return fm;
    return eliminate_from_m(fm, target);
}

SymFunc jacobi_trudi_s_in_e(const Partition& lambda) {
    int n = lambda.weight();
    SymFunc out(Basis::E, n);
    if (lambda.empty()) {
        out.add_term(Partition(), Rat(1));
        return out;
    }
    int size = lambda.max_part();
    if (size > 62) throw std::invalid_argument("jacobi_trudi: first part too large");
    Partition lt = lambda.transpose();
    using Terms = std::map<std::vector<int>, Int>;  // sorted e-index multiset -> coefficient
    std::unordered_map<uint64_t, Terms> memo;
    auto rec = [&](auto&& self, int row, uint64_t used) -> const Terms& {
        auto found = memo.find(used);
        if (found != memo.end()) return found->second;
        Terms result;
        if (row == size) {
            result[{}] = 1;
        } else {
            for (int j = 0; j < size; ++j) {
                if (used & (1ull << j)) continue;
                int t = lt.part(row) - (row + 1) + (j + 1);
                if (t < 0) continue;
                int skipped = 0;  // unused columns below j: cofactor sign
                for (int j2 = 0; j2 < j; ++j2)
                    if (!(used & (1ull << j2))) ++skipped;
                int sign = (skipped % 2 == 0) ? 1 : -1;
                const Terms& sub = self(self, row + 1, used | (1ull << j));
                for (const auto& [key, value] : sub) {
                    std::vector<int> merged = key;
                    if (t > 0) {
                        merged.insert(std::upper_bound(merged.begin(), merged.end(), t,
                                                       std::greater<int>()),
                                      t);
                    }
                    result[merged] += sign * value;
                }
            }
        }
        return memo.emplace(used, std::move(result)).first->second;
    };
    const Terms& det = rec(rec, 0, 0);
    for (const auto& [key, value] : det) {
        if (value != 0) out.add_term(Partition(key), Rat(value));
    }
    return out;
}

std::string render_text(const SymFunc& f) {
    if (f.is_zero()) return "0\n";
    std::string out;
    char b = basis_letter(f.basis());
    for (const auto& [key, value] : f.coeffs()) {
        out += b;
        out += "_{(" + key.to_exponent_string() + ")}: " + rat_to_string(value) + "\n";
    }
    return out;
}

std::string render_json(const SymFunc& f) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (const auto& [key, value] : f.coeffs()) obj[key.to_string()] = rat_to_string(value);
    return obj.dump();
}

}  // namespace csf
