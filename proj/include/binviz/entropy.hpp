// binviz - binary visualization toolkit
// Sliding-window Shannon entropy over byte streams.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace binviz {

/// Windowing parameters for sliding-window entropy.
///
/// `step == window_size` scans the stream in disjoint windows; `step == 1`
/// slides one byte at a time. Both must be >= 1.
struct entropy_config {
    std::size_t window_size = 256;
    std::size_t step = 256;
};

/// Per-window entropies (bits per byte symbol) plus the configuration that
/// produced them.
struct entropy_profile {
    std::vector<double> values;
    entropy_config config;
};

namespace detail {

inline std::array<std::uint64_t, 256> byte_histogram(std::span<const std::uint8_t> data) {
    std::array<std::uint64_t, 256> counts{};
    for (std::uint8_t b : data) {
        ++counts[b];
    }
    return counts;
}

} // namespace detail

/**
 * Shannon entropy of a byte window: H = -sum p(x) * log2 p(x).
 *
 * The byte-frequency histogram is normalized to a probability distribution;
 * absent symbols contribute nothing. Result is in [0, 8] bits: 0 for a
 * single repeated symbol, 8 when all 256 values are equiprobable.
 *
 * Throws std::invalid_argument on an empty window.
 */
inline double shannon_entropy(std::span<const std::uint8_t> window) {
    if (window.empty()) {
        throw std::invalid_argument("empty window");
    }
    const auto counts = detail::byte_histogram(window);
    const double total = static_cast<double>(window.size());
    double entropy = 0.0;
    for (std::uint64_t count : counts) {
        if (count > 0) {
            const double p = static_cast<double>(count) / total;
            entropy -= p * std::log2(p);
        }
    }
    // -0.0 can fall out of the single-symbol case
    return entropy == 0.0 ? 0.0 : entropy;
}

/// Number of full windows a stream of `n` bytes yields. Trailing bytes that
/// do not fill a window are excluded; streams shorter than one window yield
/// exactly one whole-stream window.
inline std::size_t window_count(std::size_t n, const entropy_config& config) {
    if (n == 0) {
        return 0;
    }
    if (n < config.window_size) {
        return 1;
    }
    return (n - config.window_size) / config.step + 1;
}

/**
 * Entropy of every window at offsets 0, step, 2*step, ...
 *
 * Throws std::invalid_argument on empty input or a config with a zero
 * window size or step.
 */
inline entropy_profile sliding_entropy(std::span<const std::uint8_t> data,
                                       const entropy_config& config = {}) {
    if (data.empty()) {
        throw std::invalid_argument("empty input");
    }
    if (config.window_size == 0 || config.step == 0) {
        throw std::invalid_argument("window_size and step must be >= 1");
    }

    entropy_profile profile;
    profile.config = config;

    if (data.size() < config.window_size) {
        profile.values.push_back(shannon_entropy(data));
        return profile;
    }

    const std::size_t count = window_count(data.size(), config);
    profile.values.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        profile.values.push_back(shannon_entropy(data.subspan(i * config.step, config.window_size)));
    }
    return profile;
}

/**
 * Min-max normalization of an entropy profile to [0, 255].
 *
 * Each value maps to round((v - min) / (max - min) * 255) with halves
 * rounded away from zero, so the minimum lands on 0 and the maximum on 255.
 * A constant profile (max == min) maps to all zeros.
 *
 * Throws std::invalid_argument on an empty profile.
 */
inline std::vector<std::uint8_t> normalize_minmax(const entropy_profile& profile) {
    if (profile.values.empty()) {
        throw std::invalid_argument("empty profile");
    }
    const auto [min_it, max_it] = std::minmax_element(profile.values.begin(), profile.values.end());
    const double lo = *min_it;
    const double hi = *max_it;

    std::vector<std::uint8_t> out;
    out.reserve(profile.values.size());
    if (hi == lo) {
        out.assign(profile.values.size(), 0);
        return out;
    }
    const double span = hi - lo;
    for (double v : profile.values) {
        out.push_back(static_cast<std::uint8_t>(std::round((v - lo) / span * 255.0)));
    }
    return out;
}

} // namespace binviz
