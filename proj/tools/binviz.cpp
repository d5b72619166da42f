// binviz - binary visualization toolkit
// Command-line front end: extract / stats / split / bench.

#include <array>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "binviz/centroid.hpp"
#include "binviz/dataset.hpp"
#include "binviz/features.hpp"
#include "binviz/manifest.hpp"
#include "binviz/metrics.hpp"
#include "binviz/png.hpp"
#include "binviz/pnm.hpp"
#include "binviz/split.hpp"
#include "binviz/stats.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_partial = 2;

std::array<double, 3> parse_ratios(const std::string& text) {
    std::array<double, 3> ratios{};
    std::stringstream ss(text);
    std::string part;
    std::size_t i = 0;
    while (std::getline(ss, part, ',')) {
        if (i >= 3) {
            throw std::invalid_argument("expected exactly three ratios, got: " + text);
        }
        ratios[i++] = std::stod(part);
    }
    if (i != 3) {
        throw std::invalid_argument("expected exactly three ratios, got: " + text);
    }
    return ratios;
}

binviz::decoded_image load_image(const fs::path& path) {
    const auto bytes = binviz::detail::read_file(path);
    const auto ext = path.extension().string();
    if (ext == ".pgm" || ext == ".ppm") {
        return binviz::decode_pnm(bytes);
    }
    return binviz::decode_png(bytes);
}

binviz::pixel_matrix to_gray_matrix(const binviz::decoded_image& img, const fs::path& path) {
    if (img.channels != 1 || img.width != img.height) {
        throw std::runtime_error("expected a square single-channel image: " + path.string());
    }
    binviz::pixel_matrix m;
    m.side = img.width;
    m.pad_len = 0;
    m.values = img.pixels;
    return m;
}

int run_extract(const std::string& input, const std::string& output, const std::string& mode,
                std::size_t window_size, std::size_t step, std::size_t image_size,
                std::size_t entropy_image_size, const std::string& format, std::size_t jobs,
                std::string manifest_path) {
    binviz::extract_config config;
    config.mode = mode;
    config.entropy.window_size = window_size;
    config.entropy.step = step == 0 ? window_size : step;
    config.image_size = image_size;
    config.entropy_image_size = entropy_image_size;
    config.format = format;
    config.output_root = output;

    auto m = binviz::scan_dataset(input);
    if (m.empty_warning) {
        std::cerr << "warning: no samples found under " << input << "\n";
    }

    const auto summary = binviz::run_batch(m, config, jobs);

    if (manifest_path.empty()) {
        manifest_path = (config.output_root / "manifest.jsonl").string();
    }
    binviz::save_manifest(m, manifest_path);

    std::cout << "processed " << m.records.size() << " records: ok " << summary.ok
              << ", skipped " << summary.skipped << ", failed " << summary.failed << "\n";
    std::cout << "manifest: " << manifest_path << "\n";
    return summary.failed > 0 ? exit_partial : exit_ok;
}

int run_stats(const std::string& manifest_path, std::size_t top, const std::string& json_path) {
    const auto m = binviz::load_manifest(manifest_path);
    const auto stats = binviz::compute_stats(m, top);

    std::cout << "Total instances  " << stats.total << "\n";
    std::cout << "Classes          " << stats.per_class.size() << "\n";
    std::cout << "Class distribution:\n";
    for (const auto& [label, count] : stats.per_class) {
        std::cout << "  " << label << "  " << count << "\n";
    }
    std::cout << "Top " << stats.top_k.size() << " classes:\n";
    for (std::size_t i = 0; i < stats.top_k.size(); ++i) {
        std::cout << "  " << (i + 1) << "  " << stats.top_k[i].first << "  "
                  << stats.top_k[i].second << "\n";
    }

    if (!json_path.empty()) {
        nlohmann::ordered_json j;
        j["total"] = stats.total;
        j["classes"] = stats.per_class.size();
        j["per_class"] = stats.per_class;
        j["top_k"] = nlohmann::ordered_json::array();
        for (const auto& [label, count] : stats.top_k) {
            j["top_k"].push_back({label, count});
        }
        std::ofstream out(json_path, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw std::runtime_error("cannot write stats file: " + json_path);
        }
        out << j.dump(2) << "\n";
    }
    return exit_ok;
}

int run_split(const std::string& manifest_path, const std::string& ratios_text,
              std::uint64_t seed, const std::string& out_path) {
    const auto ratios = parse_ratios(ratios_text);
    const auto m = binviz::load_manifest(manifest_path);
    const auto split = binviz::split_dataset(m, ratios, seed);
    binviz::save_split(split, out_path);

    std::array<std::size_t, 3> counts{};
    for (const auto& [path, name] : split.entries) {
        for (std::size_t s = 0; s < 3; ++s) {
            if (name == binviz::split_names[s]) {
                ++counts[s];
            }
        }
    }
    std::cout << "split " << split.entries.size() << " records: train " << counts[0] << ", val "
              << counts[1] << ", test " << counts[2] << " (seed " << seed << ")\n";
    return exit_ok;
}

int run_bench(const std::string& manifest_path, const std::string& split_path,
              const std::string& mode, std::size_t feature_side, const std::string& report_path,
              std::string images_root) {
    const auto m = binviz::load_manifest(manifest_path);
    const auto split = binviz::load_split(split_path);
    if (images_root.empty()) {
        images_root = fs::path(manifest_path).parent_path().string();
    }

    std::unordered_map<std::string, std::string> split_of;
    for (const auto& [path, name] : split.entries) {
        split_of[path] = name;
    }

    std::vector<binviz::labeled_feature> train;
    std::vector<std::pair<std::string, std::vector<double>>> test; // truth, feature
    std::size_t unusable = 0;
    for (const auto& rec : m.records) {
        if (rec.status != "ok") {
            continue;
        }
        const std::string& image_rel =
            mode == "entropy" ? rec.entropy_raw_image_path : rec.gray_image_path;
        const auto it = split_of.find(rec.source_path);
        if (image_rel.empty() || it == split_of.end()) {
            ++unusable;
            continue;
        }
        if (it->second != "train" && it->second != "test") {
            continue; // val is unused by the centroid baseline
        }
        const auto img = to_gray_matrix(load_image(fs::path(images_root) / image_rel),
                                        fs::path(images_root) / image_rel);
        auto feature = binviz::featurize(img, feature_side);
        if (it->second == "train") {
            train.push_back({rec.label, std::move(feature)});
        } else {
            test.emplace_back(rec.label, std::move(feature));
        }
    }
    if (unusable > 0) {
        std::cerr << "warning: " << unusable << " records lacked a usable " << mode
                  << " image or split assignment\n";
    }
    if (train.empty() || test.empty()) {
        throw std::runtime_error("bench needs non-empty train and test splits");
    }

    const auto model = binviz::train_centroids(train);

    std::vector<std::string> classes = model.classes;
    for (const auto& [truth, feature] : test) {
        if (std::find(classes.begin(), classes.end(), truth) == classes.end()) {
            classes.push_back(truth);
        }
    }
    std::sort(classes.begin(), classes.end());

    binviz::confusion_matrix cm(classes);
    for (const auto& [truth, feature] : test) {
        cm.add(truth, binviz::predict(model, feature));
    }
    const auto report = binviz::compute_metrics(cm);

    nlohmann::ordered_json j;
    j["format"] = "binviz-report";
    j["mode"] = mode;
    j["feature_side"] = feature_side;
    j["train_samples"] = train.size();
    j["test_samples"] = test.size();
    j["classes"] = cm.classes;
    j["confusion"] = cm.counts;
    j["metrics"]["accuracy"] = report.accuracy;
    j["metrics"]["macro_precision"] = report.macro_precision;
    j["metrics"]["macro_recall"] = report.macro_recall;
    j["metrics"]["macro_f1"] = report.macro_f1;
    for (const auto& [label, cmx] : report.per_class) {
        nlohmann::ordered_json pc;
        pc["precision"] = cmx.precision;
        pc["recall"] = cmx.recall;
        pc["f1"] = cmx.f1;
        pc["support"] = cmx.support;
        j["metrics"]["per_class"][label] = pc;
    }
    std::ofstream out(report_path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot write report: " + report_path);
    }
    out << j.dump(2) << "\n";

    std::cout << "bench (" << mode << "): accuracy " << report.accuracy << ", macro F1 "
              << report.macro_f1 << " over " << test.size() << " test samples\n";
    std::cout << "report: " << report_path << "\n";
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"binviz - turn binary files into entropy and grayscale image datasets"};
    app.require_subcommand(1);

    // extract
    std::string in_dir;
    std::string out_dir;
    std::string mode = "both";
    std::size_t window_size = 256;
    std::size_t step = 0; // 0 = same as window size
    std::size_t image_size = 256;
    std::size_t entropy_image_size = 0;
    std::string format = "png";
    std::size_t jobs = std::max(1u, std::thread::hardware_concurrency());
    std::string manifest_path;

    auto* extract = app.add_subcommand("extract", "Scan a corpus and generate images");
    extract->add_option("--input", in_dir, "Class-per-directory input corpus")->required();
    extract->add_option("--output", out_dir, "Output dataset root")->required();
    extract->add_option("--mode", mode, "Representations to produce")
        ->check(CLI::IsMember({"entropy", "grayscale", "both"}));
    extract->add_option("--window-size", window_size, "Entropy window in bytes")
        ->check(CLI::PositiveNumber);
    extract->add_option("--step", step, "Window step in bytes (0 = window size)");
    extract->add_option("--image-size", image_size, "Grayscale output side in pixels")
        ->check(CLI::PositiveNumber);
    extract->add_option("--entropy-image-size", entropy_image_size,
                        "Resize entropy images to this side (0 = native)");
    extract->add_option("--format", format, "Image file format")
        ->check(CLI::IsMember({"png", "pnm"}));
    extract->add_option("--jobs", jobs, "Worker thread count")->check(CLI::PositiveNumber);
    extract->add_option("--manifest", manifest_path,
                        "Manifest output path (default <output>/manifest.jsonl)");

    // stats
    std::string stats_manifest;
    std::size_t top = 10;
    std::string stats_json;
    auto* stats = app.add_subcommand("stats", "Report dataset statistics from a manifest");
    stats->add_option("--manifest", stats_manifest, "Manifest path")->required();
    stats->add_option("--top", top, "Top-k classes to list")->check(CLI::PositiveNumber);
    stats->add_option("--json", stats_json, "Also write statistics as JSON to this path");

    // split
    std::string split_manifest;
    std::string ratios_text = "0.7,0.1,0.2";
    std::uint64_t seed = 0;
    std::string split_out;
    auto* split = app.add_subcommand("split", "Stratified train/val/test assignment");
    split->add_option("--manifest", split_manifest, "Manifest path")->required();
    split->add_option("--ratios", ratios_text, "train,val,test fractions summing to 1");
    split->add_option("--seed", seed, "Shuffle seed");
    split->add_option("--out", split_out, "Split file output path")->required();

    // bench
    std::string bench_manifest;
    std::string bench_split;
    std::string bench_mode = "grayscale";
    std::size_t feature_side = 32;
    std::string report_path;
    std::string images_root;
    auto* bench = app.add_subcommand("bench", "Nearest-centroid baseline on extracted images");
    bench->add_option("--manifest", bench_manifest, "Manifest path")->required();
    bench->add_option("--split", bench_split, "Split file path")->required();
    bench->add_option("--mode", bench_mode, "Representation to evaluate")
        ->check(CLI::IsMember({"entropy", "grayscale"}));
    bench->add_option("--feature-side", feature_side, "Mean-pool side for features")
        ->check(CLI::PositiveNumber);
    bench->add_option("--report", report_path, "Metrics report output path")->required();
    bench->add_option("--images-root", images_root,
                      "Directory image paths are relative to (default: manifest directory)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (extract->parsed()) {
            return run_extract(in_dir, out_dir, mode, window_size, step, image_size,
                               entropy_image_size, format, jobs, manifest_path);
        }
        if (stats->parsed()) {
            return run_stats(stats_manifest, top, stats_json);
        }
        if (split->parsed()) {
            return run_split(split_manifest, ratios_text, seed, split_out);
        }
        if (bench->parsed()) {
            return run_bench(bench_manifest, bench_split, bench_mode, feature_side, report_path,
                             images_root);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_ok;
}
