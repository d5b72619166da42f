// binviz - binary visualization toolkit
// Minimal deterministic PNG codec for 8-bit grayscale and RGB images.
//
// The encoder always emits the same byte stream for the same pixels: scanline
// filter fixed to "None", one zlib stream (level 6) in a single IDAT chunk.
// The decoder accepts any non-interlaced 8-bit gray or RGB PNG, including
// all five scanline filters.

#pragma once

#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <cstring>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <zlib.h>

#include "binviz/image.hpp"
#include "binviz/pixel_matrix.hpp"

namespace binviz {

struct decoded_image {
    std::size_t width = 0;
    std::size_t height = 0;
    std::size_t channels = 0; // 1 = grayscale, 3 = RGB
    std::vector<std::uint8_t> pixels;
};

namespace detail {

inline void put_u32_be(std::vector<std::uint8_t>& out, std::uint32_t v) {
    out.push_back(static_cast<std::uint8_t>(v >> 24));
    out.push_back(static_cast<std::uint8_t>(v >> 16));
    out.push_back(static_cast<std::uint8_t>(v >> 8));
    out.push_back(static_cast<std::uint8_t>(v));
}

inline std::uint32_t read_u32_be(const std::uint8_t* p) {
    return (static_cast<std::uint32_t>(p[0]) << 24) | (static_cast<std::uint32_t>(p[1]) << 16) |
           (static_cast<std::uint32_t>(p[2]) << 8) | static_cast<std::uint32_t>(p[3]);
}

inline void append_chunk(std::vector<std::uint8_t>& out, const char type[4],
                         std::span<const std::uint8_t> data) {
    put_u32_be(out, static_cast<std::uint32_t>(data.size()));
    const std::size_t crc_start = out.size();
    out.insert(out.end(), type, type + 4);
    out.insert(out.end(), data.begin(), data.end());
    const auto crc = static_cast<std::uint32_t>(
        ::crc32(0L, out.data() + crc_start, static_cast<uInt>(4 + data.size())));
    put_u32_be(out, crc);
}

inline std::vector<std::uint8_t> zlib_deflate(std::span<const std::uint8_t> raw) {
    uLongf bound = ::compressBound(static_cast<uLong>(raw.size()));
    std::vector<std::uint8_t> packed(bound);
    const int rc = ::compress2(packed.data(), &bound, raw.data(),
                               static_cast<uLong>(raw.size()), 6);
    if (rc != Z_OK) {
        throw std::runtime_error("png: deflate failed");
    }
    packed.resize(bound);
    return packed;
}

inline std::uint8_t paeth(std::uint8_t a, std::uint8_t b, std::uint8_t c) {
    const int p = static_cast<int>(a) + static_cast<int>(b) - static_cast<int>(c);
    const int pa = std::abs(p - static_cast<int>(a));
    const int pb = std::abs(p - static_cast<int>(b));
    const int pc = std::abs(p - static_cast<int>(c));
    if (pa <= pb && pa <= pc) {
        return a;
    }
    return pb <= pc ? b : c;
}

inline constexpr std::uint8_t png_signature[8] = {0x89, 'P', 'N', 'G', 0x0D, 0x0A, 0x1A, 0x0A};

} // namespace detail

/// Encode interleaved 8-bit pixels (1 or 3 channels) as a PNG byte stream.
inline std::vector<std::uint8_t> encode_png(std::size_t width, std::size_t height,
                                            std::size_t channels,
                                            std::span<const std::uint8_t> pixels) {
    if (width == 0 || height == 0 || (channels != 1 && channels != 3)) {
        throw std::invalid_argument("png: unsupported geometry");
    }
    if (pixels.size() != width * height * channels) {
        throw std::invalid_argument("png: pixel buffer size mismatch");
    }

    const std::size_t stride = width * channels;
    std::vector<std::uint8_t> raw;
    raw.reserve(height * (stride + 1));
    for (std::size_t y = 0; y < height; ++y) {
        raw.push_back(0); // filter: None
        raw.insert(raw.end(), pixels.begin() + static_cast<std::ptrdiff_t>(y * stride),
                   pixels.begin() + static_cast<std::ptrdiff_t>((y + 1) * stride));
    }

    std::vector<std::uint8_t> ihdr;
    detail::put_u32_be(ihdr, static_cast<std::uint32_t>(width));
    detail::put_u32_be(ihdr, static_cast<std::uint32_t>(height));
    ihdr.push_back(8);                                // bit depth
    ihdr.push_back(channels == 1 ? 0 : 2);            // color type: gray / truecolor
    ihdr.push_back(0);                                // compression
    ihdr.push_back(0);                                // filter method
    ihdr.push_back(0);                                // no interlace

    std::vector<std::uint8_t> out;
    out.insert(out.end(), std::begin(detail::png_signature), std::end(detail::png_signature));
    detail::append_chunk(out, "IHDR", ihdr);
    detail::append_chunk(out, "IDAT", detail::zlib_deflate(raw));
    detail::append_chunk(out, "IEND", {});
    return out;
}

inline std::vector<std::uint8_t> encode_png(const pixel_matrix& m) {
    return encode_png(m.side, m.side, 1, m.values);
}

inline std::vector<std::uint8_t> encode_png(const rgb_image& img) {
    if (img.pixels.empty()) {
        throw std::invalid_argument("png: unsupported geometry");
    }
    return encode_png(img.side, img.side, 3,
                      std::span<const std::uint8_t>(img.pixels.front().data(),
                                                    img.pixels.size() * 3));
}

/// Decode a non-interlaced 8-bit gray or RGB PNG. Chunk CRCs are verified.
inline decoded_image decode_png(std::span<const std::uint8_t> file) {
    if (file.size() < 8 || std::memcmp(file.data(), detail::png_signature, 8) != 0) {
        throw std::runtime_error("png: bad signature");
    }

    decoded_image img;
    std::vector<std::uint8_t> idat;
    bool saw_ihdr = false;
    bool saw_iend = false;
    std::size_t pos = 8;

    while (pos + 8 <= file.size() && !saw_iend) {
        const std::uint32_t len = detail::read_u32_be(file.data() + pos);
        if (pos + 12 + len > file.size()) {
            throw std::runtime_error("png: truncated chunk");
        }
        const char* type = reinterpret_cast<const char*>(file.data() + pos + 4);
        const std::uint8_t* data = file.data() + pos + 8;

        const auto crc = static_cast<std::uint32_t>(
            ::crc32(0L, file.data() + pos + 4, static_cast<uInt>(4 + len)));
        if (crc != detail::read_u32_be(data + len)) {
            throw std::runtime_error("png: chunk crc mismatch");
        }

        if (std::memcmp(type, "IHDR", 4) == 0) {
            if (len != 13) {
                throw std::runtime_error("png: bad IHDR");
            }
            img.width = detail::read_u32_be(data);
            img.height = detail::read_u32_be(data + 4);
            const std::uint8_t depth = data[8];
            const std::uint8_t color = data[9];
            const std::uint8_t interlace = data[12];
            if (depth != 8 || (color != 0 && color != 2) || interlace != 0) {
                throw std::runtime_error("png: unsupported format");
            }
            img.channels = color == 0 ? 1 : 3;
            saw_ihdr = true;
        } else if (std::memcmp(type, "IDAT", 4) == 0) {
            idat.insert(idat.end(), data, data + len);
        } else if (std::memcmp(type, "IEND", 4) == 0) {
            saw_iend = true;
        }
        pos += 12 + len;
    }
    if (!saw_ihdr || !saw_iend || img.width == 0 || img.height == 0) {
        throw std::runtime_error("png: missing chunks");
    }

    const std::size_t stride = img.width * img.channels;
    const std::size_t raw_len = img.height * (stride + 1);
    std::vector<std::uint8_t> raw(raw_len);
    uLongf dest_len = raw_len;
    const int rc = ::uncompress(raw.data(), &dest_len, idat.data(),
                                static_cast<uLong>(idat.size()));
    if (rc != Z_OK || dest_len != raw_len) {
        throw std::runtime_error("png: inflate failed");
    }

    // Undo per-scanline filtering; bpp == channels at 8 bits.
    const std::size_t bpp = img.channels;
    img.pixels.resize(img.height * stride);
    for (std::size_t y = 0; y < img.height; ++y) {
        const std::uint8_t filter = raw[y * (stride + 1)];
        const std::uint8_t* src = raw.data() + y * (stride + 1) + 1;
        std::uint8_t* cur = img.pixels.data() + y * stride;
        const std::uint8_t* prev = y > 0 ? cur - stride : nullptr;
        for (std::size_t x = 0; x < stride; ++x) {
            const std::uint8_t a = x >= bpp ? cur[x - bpp] : 0;
            const std::uint8_t b = prev ? prev[x] : 0;
            const std::uint8_t c = (prev && x >= bpp) ? prev[x - bpp] : 0;
            switch (filter) {
            case 0: cur[x] = src[x]; break;
            case 1: cur[x] = static_cast<std::uint8_t>(src[x] + a); break;
            case 2: cur[x] = static_cast<std::uint8_t>(src[x] + b); break;
            case 3: cur[x] = static_cast<std::uint8_t>(src[x] + ((a + b) >> 1)); break;
            case 4: cur[x] = static_cast<std::uint8_t>(src[x] + detail::paeth(a, b, c)); break;
            default: throw std::runtime_error("png: bad filter type");
            }
        }
    }
    return img;
}

} // namespace binviz
