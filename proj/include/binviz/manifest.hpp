// binviz - binary visualization toolkit
// Dataset ledger: one labeled record per source file, serialized as JSON
// Lines (one header line, then one record per line) so manifests diff
// cleanly and reruns can be compared byte for byte.

#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace binviz {

inline constexpr const char* tool_version = "0.1.0";

/// One labeled input file and the artifacts produced from it. Image paths
/// are relative to the directory holding the manifest so a dataset folder
/// can be moved or compared wholesale.
struct sample_record {
    std::string source_path;
    std::string label;
    std::string sha256;
    std::uint64_t size_bytes = 0;
    std::string status = "pending"; // pending | ok | skipped | failed
    std::string reason;             // set when skipped or failed
    std::string entropy_image_path;     // colormapped RGB render
    std::string entropy_raw_image_path; // single-channel entropy intensities
    std::string gray_image_path;        // grayscale byte image
    std::size_t window_size = 0;
    std::size_t step = 0;
};

struct manifest {
    std::string version = tool_version;
    nlohmann::ordered_json config = nlohmann::ordered_json::object();
    bool empty_warning = false;
    std::vector<sample_record> records; // sorted lexicographically by source_path
};

namespace detail {

inline nlohmann::ordered_json record_to_json(const sample_record& r) {
    nlohmann::ordered_json j;
    j["source_path"] = r.source_path;
    j["label"] = r.label;
    j["sha256"] = r.sha256;
    j["size_bytes"] = r.size_bytes;
    j["status"] = r.status;
    if (!r.reason.empty()) {
        j["reason"] = r.reason;
    }
    if (!r.entropy_image_path.empty()) {
        j["entropy_image_path"] = r.entropy_image_path;
    }
    if (!r.entropy_raw_image_path.empty()) {
        j["entropy_raw_image_path"] = r.entropy_raw_image_path;
    }
    if (!r.gray_image_path.empty()) {
        j["gray_image_path"] = r.gray_image_path;
    }
    j["window_size"] = r.window_size;
    j["step"] = r.step;
    return j;
}

inline sample_record record_from_json(const nlohmann::json& j) {
    sample_record r;
    r.source_path = j.at("source_path").get<std::string>();
    r.label = j.at("label").get<std::string>();
    r.sha256 = j.at("sha256").get<std::string>();
    r.size_bytes = j.at("size_bytes").get<std::uint64_t>();
    r.status = j.at("status").get<std::string>();
    r.reason = j.value("reason", "");
    r.entropy_image_path = j.value("entropy_image_path", "");
    r.entropy_raw_image_path = j.value("entropy_raw_image_path", "");
    r.gray_image_path = j.value("gray_image_path", "");
    r.window_size = j.at("window_size").get<std::size_t>();
    r.step = j.at("step").get<std::size_t>();
    return r;
}

} // namespace detail

inline void save_manifest(const manifest& m, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot write manifest: " + path.string());
    }
    nlohmann::ordered_json header;
    header["format"] = "binviz-manifest";
    header["tool_version"] = m.version;
    header["config"] = m.config;
    if (m.empty_warning) {
        header["warning"] = "no samples found";
    }
    out << header.dump() << "\n";
    for (const auto& r : m.records) {
        out << detail::record_to_json(r).dump() << "\n";
    }
    if (!out) {
        throw std::runtime_error("error writing manifest: " + path.string());
    }
}

inline manifest load_manifest(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open manifest: " + path.string());
    }
    manifest m;
    std::string line;
    if (!std::getline(in, line)) {
        throw std::runtime_error("empty manifest file: " + path.string());
    }
    const auto header = nlohmann::ordered_json::parse(line);
    if (header.value("format", "") != "binviz-manifest") {
        throw std::runtime_error("not a binviz manifest: " + path.string());
    }
    m.version = header.value("tool_version", "");
    if (header.contains("config")) {
        m.config = header["config"];
    }
    m.empty_warning = header.contains("warning");
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        m.records.push_back(detail::record_from_json(nlohmann::json::parse(line)));
    }
    return m;
}

} // namespace binviz
