// binviz - binary visualization toolkit
// SHA-256 content digests (OpenSSL EVP).

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>

#include <openssl/evp.h>

namespace binviz {

namespace detail {

inline std::string to_hex(std::span<const unsigned char> digest) {
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    out.reserve(digest.size() * 2);
    for (unsigned char b : digest) {
        out.push_back(hex[b >> 4]);
        out.push_back(hex[b & 0x0F]);
    }
    return out;
}

} // namespace detail

/// Lowercase hex SHA-256 of a memory buffer.
inline std::string sha256_hex(std::span<const std::uint8_t> data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
        throw std::runtime_error("sha256: digest failed");
    }
    return detail::to_hex({digest, len});
}

/// Lowercase hex SHA-256 of a file's contents, streamed in 64 KiB chunks.
/// Throws std::runtime_error when the file cannot be read.
inline std::string sha256_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open file: " + path.string());
    }

    std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(),
                                                                &EVP_MD_CTX_free);
    if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1) {
        throw std::runtime_error("sha256: init failed");
    }

    char buf[65536];
    while (in.read(buf, sizeof(buf)) || in.gcount() > 0) {
        if (EVP_DigestUpdate(ctx.get(), buf, static_cast<std::size_t>(in.gcount())) != 1) {
            throw std::runtime_error("sha256: update failed");
        }
    }
    if (in.bad()) {
        throw std::runtime_error("error reading file: " + path.string());
    }

    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_DigestFinal_ex(ctx.get(), digest, &len) != 1) {
        throw std::runtime_error("sha256: final failed");
    }
    return detail::to_hex({digest, len});
}

} // namespace binviz
