#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "inducibility/errors.hpp"

namespace ind {

// Part-size profile of a complete multipartite graph K_{a_1,...,a_r}.
// Canonical form: sizes sorted nonincreasing, every size >= 1.
class PartiteProfile {
public:
    PartiteProfile() = default;

    explicit PartiteProfile(std::vector<int> sizes) : sizes_(std::move(sizes)) {
        if (sizes_.empty()) throw domain_error("profile: needs at least one part");
        for (int a : sizes_)
            if (a < 1) throw domain_error("profile: part sizes must be >= 1");
        std::sort(sizes_.begin(), sizes_.end(), std::greater<int>());
    }

    // Comma-separated sizes, e.g. "3,1,1".
    static PartiteProfile parse(const std::string& text) {
        std::vector<int> sizes;
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.find_first_not_of("0123456789 ") != std::string::npos)
                throw domain_error("profile: non-integral part size '" + item + "'");
            size_t pos = 0;
            int v = 0;
            try {
                v = std::stoi(item, &pos);
            } catch (const std::exception&) {
                throw domain_error("profile: malformed part size '" + item + "'");
            }
            sizes.push_back(v);
        }
        if (sizes.empty()) throw domain_error("profile: empty part list");
        return PartiteProfile(std::move(sizes));
    }

    const std::vector<int>& sizes() const { return sizes_; }
    int r() const { return static_cast<int>(sizes_.size()); }
    int s() const { return std::accumulate(sizes_.begin(), sizes_.end(), 0); }
    int size(int i) const { return sizes_.at(static_cast<size_t>(i)); }

    // Multiplicity c(n) of each distinct part size n.
    std::map<int, int> multiplicities() const {
        std::map<int, int> c;
        for (int a : sizes_) ++c[a];
        return c;
    }

    bool operator==(const PartiteProfile& o) const { return sizes_ == o.sizes_; }
    bool operator!=(const PartiteProfile& o) const { return !(*this == o); }

    std::string to_string() const {
        std::string out;
        for (size_t i = 0; i < sizes_.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(sizes_[i]);
        }
        return out;
    }

private:
    std::vector<int> sizes_;
};

}  // namespace ind
