// binviz - binary visualization toolkit
// Bicubic resampling of square 8-bit matrices.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>

#include "binviz/pixel_matrix.hpp"

namespace binviz {

namespace detail {

/// Keys cubic convolution kernel with a = -0.5 (Catmull-Rom).
inline double bicubic_weight(double x) {
    constexpr double a = -0.5;
    x = std::fabs(x);
    if (x <= 1.0) {
        return (a + 2.0) * x * x * x - (a + 3.0) * x * x + 1.0;
    }
    if (x < 2.0) {
        return a * x * x * x - 5.0 * a * x * x + 8.0 * a * x - 4.0 * a;
    }
    return 0.0;
}

inline std::size_t clamp_index(std::ptrdiff_t i, std::size_t side) {
    if (i < 0) {
        return 0;
    }
    if (i >= static_cast<std::ptrdiff_t>(side)) {
        return side - 1;
    }
    return static_cast<std::size_t>(i);
}

} // namespace detail

/**
 * Resize a square matrix with bicubic convolution (4x4 support, a = -0.5).
 *
 * Output pixels sample the source at pixel-center-aligned coordinates,
 * src = (dst + 0.5) * side / target - 0.5, with border samples replicated.
 * The convolution runs in double precision; results are clamped to
 * [0, 255] and then rounded half away from zero. The output carries no
 * padding (pad_len = 0) and is a pure function of (input, target_side).
 *
 * Resizing to the source side reproduces the input exactly.
 */
inline pixel_matrix resize_bicubic(const pixel_matrix& src, std::size_t target_side) {
    if (src.side == 0 || src.values.size() != src.side * src.side) {
        throw std::invalid_argument("invalid matrix");
    }
    if (target_side == 0) {
        throw std::invalid_argument("target side must be >= 1");
    }

    pixel_matrix dst;
    dst.side = target_side;
    dst.pad_len = 0;
    dst.values.resize(target_side * target_side);

    const double scale = static_cast<double>(src.side) / static_cast<double>(target_side);
    for (std::size_t dy = 0; dy < target_side; ++dy) {
        const double sy = (static_cast<double>(dy) + 0.5) * scale - 0.5;
        const auto base_y = static_cast<std::ptrdiff_t>(std::floor(sy));
        const double fy = sy - static_cast<double>(base_y);
        for (std::size_t dx = 0; dx < target_side; ++dx) {
            const double sx = (static_cast<double>(dx) + 0.5) * scale - 0.5;
            const auto base_x = static_cast<std::ptrdiff_t>(std::floor(sx));
            const double fx = sx - static_cast<double>(base_x);

            double acc = 0.0;
            for (std::ptrdiff_t j = -1; j <= 2; ++j) {
                const double wy = detail::bicubic_weight(fy - static_cast<double>(j));
                const std::size_t row = detail::clamp_index(base_y + j, src.side);
                for (std::ptrdiff_t i = -1; i <= 2; ++i) {
                    const double wx = detail::bicubic_weight(fx - static_cast<double>(i));
                    const std::size_t col = detail::clamp_index(base_x + i, src.side);
                    acc += wy * wx * static_cast<double>(src.at(row, col));
                }
            }
            acc = std::clamp(acc, 0.0, 255.0);
            dst.values[dy * target_side + dx] = static_cast<std::uint8_t>(std::round(acc));
        }
    }
    return dst;
}

} // namespace binviz
