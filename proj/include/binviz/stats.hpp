// binviz - binary visualization toolkit
// Dataset statistics: totals, class distribution, top-k classes.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "binviz/manifest.hpp"

namespace binviz {

struct dataset_stats {
    std::uint64_t total = 0;
    std::map<std::string, std::uint64_t> per_class;
    // Sorted by count descending; ties broken lexicographically by class name.
    std::vector<std::pair<std::string, std::uint64_t>> top_k;
};

inline dataset_stats compute_stats(const manifest& m, std::size_t k) {
    dataset_stats stats;
    stats.total = m.records.size();
    for (const auto& rec : m.records) {
        ++stats.per_class[rec.label];
    }

    std::vector<std::pair<std::string, std::uint64_t>> ranked(stats.per_class.begin(),
                                                              stats.per_class.end());
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) {
            return a.second > b.second;
        }
        return a.first < b.first;
    });
    if (ranked.size() > k) {
        ranked.resize(k);
    }
    stats.top_k = std::move(ranked);
    return stats;
}

} // namespace binviz
