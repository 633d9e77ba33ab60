#include "csf/cache.hpp"

#include <fstream>

#include "json.hpp"

namespace csf {

namespace {
constexpr const char* kStamp = "# csf-cache v1";
}

CoeffCache::CoeffCache(std::string path) : path_(std::move(path)) {
    std::ifstream in(path_);
    std::string line;
    bool valid = false;
    if (in && std::getline(in, line) && line == kStamp) {
        valid = true;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            auto j = nlohmann::json::parse(line, nullptr, false);
            if (j.is_discarded() || !j.contains("key") || !j.contains("basis") ||
                !j.contains("coeffs"))
                continue;
            index_[j["key"].get<std::string>() + "|" + j["basis"].get<std::string>()] =
                j["coeffs"].dump();
        }
    }
    if (!valid) {
        std::ofstream out(path_, std::ios::trunc);
        out << kStamp << "\n";
    }
}

std::optional<SymFunc> CoeffCache::lookup(const std::string& tree_key, Basis basis, int degree) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = index_.find(tree_key + "|" + basis_letter(basis));
    if (it == index_.end()) return std::nullopt;
    SymFunc f(basis, degree);
    auto j = nlohmann::json::parse(it->second);
    for (auto& [key, value] : j.items())
        f.add_term(Partition::parse(key), rat_from_string(value.get<std::string>()));
    return f;
}

void CoeffCache::store(const std::string& tree_key, const SymFunc& f) {
    std::lock_guard<std::mutex> lock(mu_);
    std::string fullKey = tree_key + "|" + basis_letter(f.basis());
    if (index_.count(fullKey)) return;
    std::string coeffs = render_json(f);
    index_[fullKey] = coeffs;
    nlohmann::ordered_json j;
    j["key"] = tree_key;
    j["basis"] = std::string(1, basis_letter(f.basis()));
    j["degree"] = f.degree();
    j["coeffs"] = nlohmann::json::parse(coeffs);
    std::ofstream out(path_, std::ios::app);
    out << j.dump() << "\n";
}

}  // namespace csf
