#pragma once

#include <string>
#include <vector>

namespace csf {

// Integer partition: weakly decreasing positive parts. Immutable after
// construction; the weight (sum of parts) is cached.
class Partition {
public:
    Partition() = default;
    // Accepts parts in any order, sorts them descending. Rejects parts < 1.
    explicit Partition(std::vector<int> parts);
    // (part^count), e.g. repeated(2, 3) == (2,2,2).
    static Partition repeated(int part, int count);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const { return weight_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int part(int i) const { return parts_[i]; }
    int max_part() const { return parts_.empty() ? 0 : parts_[0]; }
    int multiplicity(int value) const;

    Partition transpose() const;

    bool operator==(const Partition& other) const { return parts_ == other.parts_; }

    std::string to_string() const;           // "4,3,1,1"; empty partition -> "()"
    std::string to_exponent_string() const;  // "4,3,1^2"
    // Parses both plain and exponent form ("4,3,1,1" or "4,3,1^2"); "()" or ""
    // is the empty partition.
    static Partition parse(const std::string& text);

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

// The fixed enumeration order used everywhere (reports, witnesses, caches):
// reverse-lexicographic, so for weight 4 the order is
// (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
bool enum_order_less(const Partition& a, const Partition& b);

struct EnumOrderLess {
    bool operator()(const Partition& a, const Partition& b) const {
        return enum_order_less(a, b);
    }
};

// All partitions of n, each exactly once, in enumeration order.
std::vector<Partition> partitions_of(int n);

// Dominance order: prefix sums of lhs weakly exceed those of rhs. Only defined
// for equal weights; throws std::invalid_argument otherwise.
bool dominates(const Partition& lhs, const Partition& rhs);

}  // namespace csf
