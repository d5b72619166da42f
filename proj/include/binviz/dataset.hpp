// binviz - binary visualization toolkit
// Corpus scanning and the parallel extract pipeline.
//
// Layout of an output root, mirroring the class-per-directory convention of
// the input corpus:
//
//   <output>/entropy/<class>/<sha256>.png       colormapped entropy render
//   <output>/entropy_raw/<class>/<sha256>.png   single-channel entropy image
//   <output>/grayscale/<class>/<sha256>.png     grayscale byte image
//   <output>/manifest.jsonl                     ledger (default location)
//
// Filenames are content hashes, so identical binaries dedupe and reruns are
// idempotent. Every stage is a pure function of (file bytes, config), which
// is what makes the batch output independent of worker count.

#pragma once

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "binviz/entropy.hpp"
#include "binviz/image.hpp"
#include "binviz/manifest.hpp"
#include "binviz/pixel_matrix.hpp"
#include "binviz/png.hpp"
#include "binviz/pnm.hpp"
#include "binviz/resize.hpp"
#include "binviz/sha256.hpp"

namespace binviz {

struct extract_config {
    std::string mode = "both"; // entropy | grayscale | both
    entropy_config entropy;
    std::size_t image_size = 256;        // grayscale images are resized to this side
    std::size_t entropy_image_size = 0;  // 0 keeps the native (window-count) side
    std::string format = "png";          // png | pnm
    std::filesystem::path output_root;

    bool wants_entropy() const { return mode == "entropy" || mode == "both"; }
    bool wants_grayscale() const { return mode == "grayscale" || mode == "both"; }

    nlohmann::ordered_json snapshot() const {
        nlohmann::ordered_json j;
        j["mode"] = mode;
        j["window_size"] = entropy.window_size;
        j["step"] = entropy.step;
        j["image_size"] = image_size;
        j["entropy_image_size"] = entropy_image_size;
        j["format"] = format;
        return j;
    }
};

struct batch_summary {
    std::size_t ok = 0;
    std::size_t skipped = 0;
    std::size_t failed = 0;
};

namespace detail {

inline std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open file: " + path.string());
    }
    std::vector<std::uint8_t> data((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());
    if (in.bad()) {
        throw std::runtime_error("error reading file: " + path.string());
    }
    return data;
}

/// Write-then-rename so a crashed or concurrent duplicate writer can never
/// leave a torn file at the final path.
inline void write_file_atomic(const std::filesystem::path& path,
                              std::span<const std::uint8_t> bytes) {
    static std::atomic<std::uint64_t> temp_counter{0};
    const auto temp = path.string() + ".tmp" + std::to_string(temp_counter.fetch_add(1));
    {
        std::ofstream out(temp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw std::runtime_error("cannot write file: " + path.string());
        }
        out.write(reinterpret_cast<const char*>(bytes.data()),
                  static_cast<std::streamsize>(bytes.size()));
        if (!out) {
            throw std::runtime_error("error writing file: " + path.string());
        }
    }
    std::filesystem::rename(temp, path);
}

inline std::vector<std::uint8_t> encode_gray(const pixel_matrix& m, const std::string& format) {
    return format == "pnm" ? encode_pnm(m.side, m.side, 1, m.values) : encode_png(m);
}

inline std::vector<std::uint8_t> encode_rgb(const rgb_image& img, const std::string& format) {
    if (format == "pnm") {
        return encode_pnm(img.side, img.side, 3,
                          std::span<const std::uint8_t>(img.pixels.front().data(),
                                                        img.pixels.size() * 3));
    }
    return encode_png(img);
}

inline std::string image_extension(const std::string& format, bool rgb) {
    if (format == "pnm") {
        return rgb ? ".ppm" : ".pgm";
    }
    return ".png";
}

} // namespace detail

/**
 * Walk a class-per-directory corpus and build the initial manifest: one
 * record per regular file, labeled with its immediate parent directory
 * name, content-hashed, and sorted lexicographically by path. Files placed
 * directly in the root have no class and are ignored.
 *
 * Throws std::runtime_error when root is not a readable directory. An empty
 * corpus yields an empty manifest with its warning flag set.
 */
inline manifest scan_dataset(const std::filesystem::path& root) {
    namespace fs = std::filesystem;
    if (!fs::exists(root) || !fs::is_directory(root)) {
        throw std::runtime_error("dataset root is not a directory: " + root.string());
    }

    manifest m;
    for (const auto& entry : fs::recursive_directory_iterator(root)) {
        if (!entry.is_regular_file()) {
            continue;
        }
        const fs::path parent = entry.path().parent_path();
        if (fs::equivalent(parent, root)) {
            continue; // unlabeled file at the top level
        }
        sample_record rec;
        rec.source_path = entry.path().generic_string();
        rec.label = parent.filename().string();
        rec.size_bytes = entry.file_size();
        rec.sha256 = sha256_file(entry.path());
        m.records.push_back(std::move(rec));
    }
    std::sort(m.records.begin(), m.records.end(),
              [](const sample_record& a, const sample_record& b) {
                  return a.source_path < b.source_path;
              });
    m.empty_warning = m.records.empty();
    return m;
}

/**
 * Run extraction for one record: read the source file, compute the
 * requested representations and write them under the output root. Output
 * paths land in the record relative to the output root. Failures never
 * escape; they are recorded as status "skipped" (empty input) or "failed"
 * (I/O or processing error) with a reason.
 */
inline sample_record process_sample(sample_record rec, const extract_config& config,
                                    const color_map& map = default_colormap()) {
    rec.window_size = config.entropy.window_size;
    rec.step = config.entropy.step;
    try {
        const auto data = detail::read_file(rec.source_path);
        if (data.empty()) {
            rec.status = "skipped";
            rec.reason = "empty input";
            return rec;
        }

        if (config.wants_grayscale()) {
            pixel_matrix m = bytes_to_matrix(data);
            if (m.side != config.image_size) {
                m = resize_bicubic(m, config.image_size);
            }
            const auto rel = std::filesystem::path("grayscale") / rec.label /
                             (rec.sha256 + detail::image_extension(config.format, false));
            detail::write_file_atomic(config.output_root / rel,
                                      detail::encode_gray(m, config.format));
            rec.gray_image_path = rel.generic_string();
        }

        if (config.wants_entropy()) {
            const auto profile = sliding_entropy(data, config.entropy);
            const auto normalized = normalize_minmax(profile);
            pixel_matrix m = entropy_matrix(normalized);
            if (config.entropy_image_size > 0 && m.side != config.entropy_image_size) {
                m = resize_bicubic(m, config.entropy_image_size);
            }

            const auto raw_rel = std::filesystem::path("entropy_raw") / rec.label /
                                 (rec.sha256 + detail::image_extension(config.format, false));
            detail::write_file_atomic(config.output_root / raw_rel,
                                      detail::encode_gray(m, config.format));
            rec.entropy_raw_image_path = raw_rel.generic_string();

            const rgb_image colored = apply_colormap(m, map);
            const auto rgb_rel = std::filesystem::path("entropy") / rec.label /
                                 (rec.sha256 + detail::image_extension(config.format, true));
            detail::write_file_atomic(config.output_root / rgb_rel,
                                      detail::encode_rgb(colored, config.format));
            rec.entropy_image_path = rgb_rel.generic_string();
        }

        rec.status = "ok";
        rec.reason.clear();
    } catch (const std::exception& e) {
        rec.status = "failed";
        rec.reason = e.what();
    }
    return rec;
}

/**
 * Process every record with a bounded worker pool and fold the results back
 * into the manifest. Records are handed out by index, each worker writes
 * only its own slot, and the manifest is reassembled by the calling thread,
 * so the result is identical for any worker count.
 *
 * Throws std::runtime_error (before any work starts) when the output root
 * cannot be created.
 */
inline batch_summary run_batch(manifest& m, const extract_config& config, std::size_t jobs = 1) {
    namespace fs = std::filesystem;

    std::error_code ec;
    fs::create_directories(config.output_root, ec);
    if (ec || !fs::is_directory(config.output_root)) {
        throw std::runtime_error("output root is not writable: " + config.output_root.string());
    }

    // One directory per (representation, class), created up front so the
    // workers never race on directory creation.
    std::set<std::string> labels;
    for (const auto& rec : m.records) {
        labels.insert(rec.label);
    }
    std::vector<std::string> modes;
    if (config.wants_entropy()) {
        modes.push_back("entropy");
        modes.push_back("entropy_raw");
    }
    if (config.wants_grayscale()) {
        modes.push_back("grayscale");
    }
    for (const auto& mode : modes) {
        for (const auto& label : labels) {
            fs::create_directories(config.output_root / mode / label, ec);
            if (ec) {
                throw std::runtime_error("output root is not writable: " +
                                         (config.output_root / mode / label).string());
            }
        }
    }

    m.config = config.snapshot();

    const std::size_t n = m.records.size();
    std::vector<sample_record> results(n);
    const std::size_t workers = std::max<std::size_t>(1, std::min(jobs, n == 0 ? 1 : n));

    std::atomic<std::size_t> next{0};
    auto work = [&]() {
        for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
            results[i] = process_sample(m.records[i], config);
        }
    };

    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back(work);
        }
        for (auto& t : pool) {
            t.join();
        }
    }

    m.records = std::move(results);
    batch_summary summary;
    for (const auto& rec : m.records) {
        if (rec.status == "ok") {
            ++summary.ok;
        } else if (rec.status == "skipped") {
            ++summary.skipped;
        } else {
            ++summary.failed;
        }
    }
    return summary;
}

} // namespace binviz
