// binviz - binary visualization toolkit
// Seeded, stratified train/val/test splits.
//
// Within each class, records (in lexicographic source-path order) are
// shuffled by a Fisher-Yates pass driven by std::mt19937_64 — chosen because
// the C++ standard pins its state transition, so a seed means the same
// permutation everywhere — and cut at the cumulative ratio boundaries with
// largest-remainder rounding. Classes are visited in lexicographic order
// from a single generator, so the full assignment is a function of
// (manifest, ratios, seed).

#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "binviz/manifest.hpp"

namespace binviz {

inline constexpr std::array<const char*, 3> split_names = {"train", "val", "test"};

struct split_assignment {
    std::uint64_t seed = 0;
    std::array<double, 3> ratios{};                       // train, val, test
    std::vector<std::pair<std::string, std::string>> entries; // source_path -> split name
};

namespace detail {

/// Unbiased integer in [0, bound) via rejection sampling; avoids the
/// implementation-defined behavior of std::uniform_int_distribution.
inline std::uint64_t bounded_rand(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % bound;
    std::uint64_t r;
    do {
        r = rng();
    } while (r >= limit);
    return r % bound;
}

/// Split n items into three buckets matching the ratios, distributing the
/// remainder by largest fractional part (ties to the earlier split).
inline std::array<std::size_t, 3> largest_remainder_counts(std::size_t n,
                                                           const std::array<double, 3>& ratios) {
    std::array<std::size_t, 3> counts{};
    std::array<double, 3> fractional{};
    std::size_t assigned = 0;
    for (std::size_t s = 0; s < 3; ++s) {
        const double exact = ratios[s] * static_cast<double>(n);
        counts[s] = static_cast<std::size_t>(std::floor(exact));
        fractional[s] = exact - std::floor(exact);
        assigned += counts[s];
    }
    std::array<std::size_t, 3> order = {0, 1, 2};
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (fractional[a] != fractional[b]) {
            return fractional[a] > fractional[b];
        }
        return a < b;
    });
    for (std::size_t i = 0; assigned < n; ++i) {
        ++counts[order[i % 3]];
        ++assigned;
    }
    return counts;
}

} // namespace detail

/**
 * Stratified split of every record in the manifest. Ratios must be
 * non-negative and sum to 1 (within 1e-9); every class must be non-empty,
 * which holds by construction since classes come from the records.
 * The same (manifest, ratios, seed) always produces the same assignment.
 */
inline split_assignment split_dataset(const manifest& m, const std::array<double, 3>& ratios,
                                      std::uint64_t seed) {
    double sum = 0.0;
    for (double r : ratios) {
        if (r < 0.0) {
            throw std::invalid_argument("ratios must be non-negative");
        }
        sum += r;
    }
    if (std::fabs(sum - 1.0) > 1e-9) {
        throw std::invalid_argument("ratios must sum to 1");
    }

    // Classes in lexicographic order; records within a class keep their
    // manifest (lexicographic) order until shuffled.
    std::map<std::string, std::vector<std::size_t>> by_class;
    for (std::size_t i = 0; i < m.records.size(); ++i) {
        by_class[m.records[i].label].push_back(i);
    }

    std::vector<std::string> assigned(m.records.size());
    std::mt19937_64 rng(seed);
    for (auto& [label, indices] : by_class) {
        for (std::size_t i = indices.size() - 1; i > 0; --i) {
            std::swap(indices[i], indices[detail::bounded_rand(rng, i + 1)]);
        }
        const auto counts = detail::largest_remainder_counts(indices.size(), ratios);
        std::size_t cursor = 0;
        for (std::size_t s = 0; s < 3; ++s) {
            for (std::size_t j = 0; j < counts[s]; ++j) {
                assigned[indices[cursor++]] = split_names[s];
            }
        }
    }

    split_assignment result;
    result.seed = seed;
    result.ratios = ratios;
    result.entries.reserve(m.records.size());
    for (std::size_t i = 0; i < m.records.size(); ++i) {
        result.entries.emplace_back(m.records[i].source_path, assigned[i]);
    }
    return result;
}

inline void save_split(const split_assignment& split, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot write split file: " + path.string());
    }
    nlohmann::ordered_json header;
    header["format"] = "binviz-split";
    header["seed"] = split.seed;
    header["ratios"] = split.ratios;
    out << header.dump() << "\n";
    for (const auto& [source_path, name] : split.entries) {
        nlohmann::ordered_json j;
        j["source_path"] = source_path;
        j["split"] = name;
        out << j.dump() << "\n";
    }
    if (!out) {
        throw std::runtime_error("error writing split file: " + path.string());
    }
}

inline split_assignment load_split(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open split file: " + path.string());
    }
    std::string line;
    if (!std::getline(in, line)) {
        throw std::runtime_error("empty split file: " + path.string());
    }
    const auto header = nlohmann::json::parse(line);
    if (header.value("format", "") != "binviz-split") {
        throw std::runtime_error("not a binviz split file: " + path.string());
    }
    split_assignment split;
    split.seed = header.value("seed", std::uint64_t{0});
    if (header.contains("ratios")) {
        for (std::size_t s = 0; s < 3; ++s) {
            split.ratios[s] = header["ratios"][s].get<double>();
        }
    }
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        const auto j = nlohmann::json::parse(line);
        split.entries.emplace_back(j.at("source_path").get<std::string>(),
                                   j.at("split").get<std::string>());
    }
    return split;
}

} // namespace binviz
