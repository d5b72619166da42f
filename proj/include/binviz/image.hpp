// binviz - binary visualization toolkit
// Colormap rendering of normalized entropy matrices.

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "binviz/colormap_table.hpp"
#include "binviz/pixel_matrix.hpp"

namespace binviz {

/// Intensity -> RGB lookup table. Index 0 is the low-entropy end (dark
/// purple in the default map), index 255 the high-entropy end (yellow).
struct color_map {
    std::array<std::array<std::uint8_t, 3>, 256> table;
};

inline color_map default_colormap() {
    return color_map{default_colormap_table};
}

/// Square RGB render target; pixels are row-major triples.
struct rgb_image {
    std::size_t side = 0;
    std::vector<std::array<std::uint8_t, 3>> pixels;
};

/// Shape a normalized entropy profile into the smallest enclosing square,
/// exactly as bytes_to_matrix does for raw bytes.
/// Throws std::invalid_argument on an empty profile.
inline pixel_matrix entropy_matrix(std::span<const std::uint8_t> normalized) {
    if (normalized.empty()) {
        throw std::invalid_argument("empty profile");
    }
    return bytes_to_matrix(normalized);
}

/// Per-pixel table lookup: pixel[i] = map.table[matrix.values[i]].
inline rgb_image apply_colormap(const pixel_matrix& matrix, const color_map& map) {
    rgb_image img;
    img.side = matrix.side;
    img.pixels.reserve(matrix.values.size());
    for (std::uint8_t v : matrix.values) {
        img.pixels.push_back(map.table[v]);
    }
    return img;
}

} // namespace binviz
