// binviz - binary visualization toolkit
// Raw netpbm (P5/P6) as the uncompressed alternative to PNG.

#pragma once

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "binviz/png.hpp"

namespace binviz {

/// Encode 8-bit pixels as binary PGM (1 channel) or PPM (3 channels).
inline std::vector<std::uint8_t> encode_pnm(std::size_t width, std::size_t height,
                                            std::size_t channels,
                                            std::span<const std::uint8_t> pixels) {
    if (width == 0 || height == 0 || (channels != 1 && channels != 3)) {
        throw std::invalid_argument("pnm: unsupported geometry");
    }
    if (pixels.size() != width * height * channels) {
        throw std::invalid_argument("pnm: pixel buffer size mismatch");
    }
    const std::string header = std::string(channels == 1 ? "P5" : "P6") + "\n" +
                               std::to_string(width) + " " + std::to_string(height) + "\n255\n";
    std::vector<std::uint8_t> out(header.begin(), header.end());
    out.insert(out.end(), pixels.begin(), pixels.end());
    return out;
}

/// Decode binary PGM/PPM written by encode_pnm (single whitespace tokens,
/// maxval 255).
inline decoded_image decode_pnm(std::span<const std::uint8_t> file) {
    std::size_t pos = 0;
    auto next_token = [&]() -> std::string {
        while (pos < file.size() && std::isspace(file[pos])) {
            ++pos;
        }
        std::string tok;
        while (pos < file.size() && !std::isspace(file[pos])) {
            tok.push_back(static_cast<char>(file[pos++]));
        }
        return tok;
    };

    const std::string magic = next_token();
    decoded_image img;
    if (magic == "P5") {
        img.channels = 1;
    } else if (magic == "P6") {
        img.channels = 3;
    } else {
        throw std::runtime_error("pnm: bad magic");
    }
    img.width = std::stoul(next_token());
    img.height = std::stoul(next_token());
    if (next_token() != "255") {
        throw std::runtime_error("pnm: unsupported maxval");
    }
    ++pos; // single whitespace after maxval
    const std::size_t need = img.width * img.height * img.channels;
    if (img.width == 0 || img.height == 0 || file.size() - pos < need) {
        throw std::runtime_error("pnm: truncated data");
    }
    img.pixels.assign(file.begin() + static_cast<std::ptrdiff_t>(pos),
                      file.begin() + static_cast<std::ptrdiff_t>(pos + need));
    return img;
}

} // namespace binviz
