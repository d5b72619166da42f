// binviz - binary visualization toolkit
// Block-mean image features for the baseline classifier.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "binviz/pixel_matrix.hpp"

namespace binviz {

struct labeled_feature {
    std::string label;
    std::vector<double> values;
};

/**
 * Mean-pool a square image down to side x side and flatten it row-major.
 * Block boundaries are floor(k * image_side / side), so any side up to the
 * image side works; when side divides the image side the blocks are exact.
 *
 * Throws std::invalid_argument when side is 0 or exceeds the image side.
 */
inline std::vector<double> featurize(const pixel_matrix& image, std::size_t side) {
    if (side == 0 || side > image.side) {
        throw std::invalid_argument("feature side exceeds image side");
    }
    std::vector<double> out;
    out.reserve(side * side);
    for (std::size_t br = 0; br < side; ++br) {
        const std::size_t r0 = br * image.side / side;
        const std::size_t r1 = (br + 1) * image.side / side;
        for (std::size_t bc = 0; bc < side; ++bc) {
            const std::size_t c0 = bc * image.side / side;
            const std::size_t c1 = (bc + 1) * image.side / side;
            double sum = 0.0;
            for (std::size_t r = r0; r < r1; ++r) {
                for (std::size_t c = c0; c < c1; ++c) {
                    sum += static_cast<double>(image.at(r, c));
                }
            }
            out.push_back(sum / static_cast<double>((r1 - r0) * (c1 - c0)));
        }
    }
    return out;
}

} // namespace binviz
