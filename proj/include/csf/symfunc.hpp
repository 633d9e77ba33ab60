#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "csf/partition.hpp"
#include "csf/rational.hpp"

namespace csf {

enum class Basis : char { P = 'p', M = 'm', E = 'e', S = 's' };

char basis_letter(Basis b);
Basis basis_from_letter(char c);

// A homogeneous symmetric function of fixed degree, stored as a sparse map
// from partition to exact rational coefficient in one named basis. Zero
// coefficients are never stored; keys all have weight == degree. Map iteration
// follows the fixed enumeration order.
class SymFunc {
public:
    using CoeffMap = std::map<Partition, Rat, EnumOrderLess>;

    SymFunc(Basis basis, int degree);
    static SymFunc unit(Basis basis, const Partition& key);

    Basis basis() const { return basis_; }
    int degree() const { return degree_; }
    const CoeffMap& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    size_t term_count() const { return coeffs_.size(); }

    Rat coeff(const Partition& key) const;
    void add_term(const Partition& key, const Rat& value);
    void set_term(const Partition& key, const Rat& value);

    SymFunc& operator+=(const SymFunc& other);
    SymFunc& operator*=(const Rat& scalar);

    bool operator==(const SymFunc& other) const;

private:
    Basis basis_;
    int degree_;
    CoeffMap coeffs_;
};

struct NonnegativityResult {
    bool nonnegative;
    // First offending key in enumeration order, with its coefficient.
    std::optional<std::pair<Partition, Rat>> witness;
};

NonnegativityResult is_nonnegative(const SymFunc& f);

// Product of two multiplicative-basis elements (E or P only): keys concatenate.
SymFunc multiply_multiplicative(const SymFunc& a, const SymFunc& b);

// Kostka numbers K(shape, content) for all pairs of partitions of one degree:
// the number of semistandard tableaux of the given shape and content.
// Unitriangular: K(l,l) = 1 and K(l,m) != 0 only when l dominates m.
class KostkaTable {
public:
    explicit KostkaTable(int degree);

    int degree() const { return degree_; }
    const std::vector<Partition>& partitions() const { return parts_; }
    int index_of(const Partition& p) const;
    long long kostka(const Partition& shape, const Partition& content) const;
    long long kostka_by_index(int shape, int content) const { return k_[shape][content]; }

private:
    int degree_;
    std::vector<Partition> parts_;
    std::map<Partition, int, EnumOrderLess> index_;
    std::vector<std::vector<long long>> k_;
};

// Monomial expansion of e_lambda (product of elementary symmetric functions).
SymFunc e_to_m(const Partition& lambda);

// Monomial expansion of the power-sum product p_lambda.
SymFunc p_to_m(const Partition& lambda);

// Schur function in monomials via Kostka numbers; the table must match the
// weight of lambda.
SymFunc s_to_m(const Partition& lambda, const KostkaTable& kostka);

// Per-degree transition rows into the monomial basis. Built once per degree
// (single-threaded), then shared read-only; safe to use from parallel workers.
class DegreeTables {
public:
    static std::shared_ptr<const DegreeTables> get(int degree);

    int degree() const { return degree_; }
    const std::vector<Partition>& partitions() const { return parts_; }
    int index_of(const Partition& p) const;
    const KostkaTable& kostka() const { return kostka_; }
    // row_in_m(Basis::E, i) is e_{parts()[i]} expanded in M, etc.
    const SymFunc& row_in_m(Basis basis, int index) const;

private:
    explicit DegreeTables(int degree);

    int degree_;
    std::vector<Partition> parts_;
    std::map<Partition, int, EnumOrderLess> index_;
    KostkaTable kostka_;
    std::vector<SymFunc> e_rows_, p_rows_, s_rows_;
};

// Re-expresses f in the target basis. All conversions pivot through M: into M
// by summing transition rows, out of M by back-substitution over the
// unitriangular transition system in enumeration order. Exact throughout.
SymFunc to_basis(const SymFunc& f, Basis target);

// Expands det(e_{lambda^t_i - i + j}) symbolically in the E basis, with
// e_0 = 1 and e_{negative} = 0. Independent route to the Schur expansion,
// used to cross-check the Kostka path.
SymFunc jacobi_trudi_s_in_e(const Partition& lambda);

// One term per line in enumeration order, e.g. "e_{(3,2^2)}: -3".
std::string render_text(const SymFunc& f);
// JSON object text, keys in enumeration order: {"3,2,2": "-3", ...}
std::string render_json(const SymFunc& f);

}  // namespace csf
