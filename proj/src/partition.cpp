#include "csf/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace csf {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
        if (p < 1) throw std::invalid_argument("partition parts must be positive");
    }
    std::sort(parts_.rbegin(), parts_.rend());
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::repeated(int part, int count) {
    if (count < 0) throw std::invalid_argument("negative repetition count");
    return Partition(std::vector<int>(count, part));
}

int Partition::multiplicity(int value) const {
    int c = 0;
    for (int p : parts_) c += (p == value);
    return c;
}

Partition Partition::transpose() const {
    std::vector<int> t;
    for (int i = 1; i <= max_part(); ++i) {
        int count = 0;
        for (int p : parts_) {
            if (p >= i) ++count;
            else break;
        }
        t.push_back(count);
    }
    return Partition(std::move(t));
}

std::string Partition::to_string() const {
    if (parts_.empty()) return "()";
    std::string out;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

std::string Partition::to_exponent_string() const {
    if (parts_.empty()) return "()";
    std::string out;
    size_t i = 0;
    while (i < parts_.size()) {
        size_t j = i;
        while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
        if (!out.empty()) out += ',';
        out += std::to_string(parts_[i]);
        if (j - i > 1) out += '^' + std::to_string(j - i);
        i = j;
    }
    return out;
}

Partition Partition::parse(const std::string& text) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    }
    if (s.empty() || s == "()") return Partition();
    std::vector<int> parts;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t comma = s.find(',', pos);
        std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (tok.empty()) throw std::invalid_argument("bad partition literal: " + text);
        int value, count = 1;
        size_t caret = tok.find('^');
        try {
            if (caret == std::string::npos) {
                value = std::stoi(tok);
            } else {
                value = std::stoi(tok.substr(0, caret));
                count = std::stoi(tok.substr(caret + 1));
            }
        } catch (const std::exception&) {
            throw std::invalid_argument("bad partition literal: " + text);
        }
        if (value < 1 || count < 1) throw std::invalid_argument("bad partition literal: " + text);
        for (int i = 0; i < count; ++i) parts.push_back(value);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return Partition(std::move(parts));
}

bool enum_order_less(const Partition& a, const Partition& b) {
    // Reverse-lexicographic: the lexicographically larger sequence comes first.
    return std::lexicographical_compare(b.parts().begin(), b.parts().end(),
                                        a.parts().begin(), a.parts().end());
}

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative weight");
    std::vector<Partition> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<int> cur{n};
    while (true) {
        out.emplace_back(Partition(cur));
        // Successor in reverse-lex order: shrink the rightmost part > 1 by one,
        // then refill the freed units greedily with parts of at most that size.
        int k = static_cast<int>(cur.size()) - 1;
        while (k >= 0 && cur[k] == 1) --k;
        if (k < 0) break;
        int tail = 0;
        for (size_t i = k; i < cur.size(); ++i) tail += cur[i];
        int newPart = cur[k] - 1;
        cur.resize(k);
        int remaining = tail;
        while (remaining > 0) {
            int next = std::min(newPart, remaining);
            cur.push_back(next);
            remaining -= next;
        }
    }
    return out;
}

bool dominates(const Partition& lhs, const Partition& rhs) {
    if (lhs.weight() != rhs.weight())
        throw std::invalid_argument("dominance is only defined for equal weights");
    int len = std::min(lhs.length(), rhs.length());
    long long a = 0, b = 0;
    for (int i = 0; i < len; ++i) {
        a += lhs.part(i);
        b += rhs.part(i);
        if (a < b) return false;
    }
    return true;
}

}  // namespace csf
