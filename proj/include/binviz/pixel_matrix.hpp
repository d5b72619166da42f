// binviz - binary visualization toolkit
// Lossless byte-stream <-> square 8-bit matrix mapping.

#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace binviz {

/// Square grid of 8-bit intensities. `pad_len` records how many trailing
/// zero-fill values were appended beyond the original data, which is what
/// makes the mapping invertible.
struct pixel_matrix {
    std::size_t side = 0;
    std::size_t pad_len = 0;
    std::vector<std::uint8_t> values; // row-major, side * side entries

    std::uint8_t at(std::size_t row, std::size_t col) const {
        return values[row * side + col];
    }
};

/// Least s with s*s >= n.
inline std::size_t ceil_sqrt(std::size_t n) {
    auto s = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n))));
    while (s * s < n) {
        ++s;
    }
    while (s > 0 && (s - 1) * (s - 1) >= n) {
        --s;
    }
    return s;
}

/**
 * Arrange bytes row-major into the smallest square that holds them,
 * zero-padding the tail and recording the pad length.
 *
 * Throws std::invalid_argument on empty input.
 */
inline pixel_matrix bytes_to_matrix(std::span<const std::uint8_t> data) {
    if (data.empty()) {
        throw std::invalid_argument("empty input");
    }
    pixel_matrix m;
    m.side = ceil_sqrt(data.size());
    m.pad_len = m.side * m.side - data.size();
    m.values.assign(data.begin(), data.end());
    m.values.resize(m.side * m.side, 0);
    return m;
}

/**
 * Invert bytes_to_matrix: strip the recorded padding and return the
 * original byte sequence. matrix_to_bytes(bytes_to_matrix(d)) == d.
 *
 * Throws std::invalid_argument when pad_len would leave no data.
 */
inline std::vector<std::uint8_t> matrix_to_bytes(const pixel_matrix& m) {
    const std::size_t cells = m.side * m.side;
    if (m.pad_len >= cells || m.values.size() != cells) {
        throw std::invalid_argument("invalid padding");
    }
    return {m.values.begin(), m.values.begin() + static_cast<std::ptrdiff_t>(cells - m.pad_len)};
}

} // namespace binviz
