// Acceptance suite: end-to-end checks of the library and CLI, one pass/fail
// line per criterion. Usage: binviz_acceptance <path-to-binviz-cli>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

#include <json.hpp>

#include "binviz/dataset.hpp"
#include "binviz/entropy.hpp"
#include "binviz/manifest.hpp"
#include "binviz/metrics.hpp"
#include "binviz/pixel_matrix.hpp"
#include "binviz/resize.hpp"
#include "binviz/split.hpp"
#include "binviz/stats.hpp"
#include "support/oracles.hpp"

namespace fs = std::filesystem;
using clock_type = std::chrono::steady_clock;

namespace {

std::string g_cli;
fs::path g_root;

double seconds_since(clock_type::time_point start) {
    return std::chrono::duration<double>(clock_type::now() - start).count();
}

int run_cli(const std::string& args) {
    const std::string cmd = "\"" + g_cli + "\" " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    if (status == -1 || !WIFEXITED(status)) {
        return -1;
    }
    return WEXITSTATUS(status);
}

void write_bytes(const fs::path& p, const std::vector<std::uint8_t>& bytes) {
    fs::create_directories(p.parent_path());
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
}

std::vector<std::uint8_t> read_bytes(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<std::uint8_t> gen_random(std::mt19937_64& rng, std::size_t n) {
    std::vector<std::uint8_t> out(n);
    for (auto& b : out) {
        b = static_cast<std::uint8_t>(rng() & 0xFF);
    }
    return out;
}

// Mostly zero-filled with short random bursts: low entropy, dark grayscale.
std::vector<std::uint8_t> gen_zeroheavy(std::mt19937_64& rng, std::size_t n) {
    std::vector<std::uint8_t> out(n, 0);
    std::size_t pos = 0;
    while (pos < n) {
        pos += 3072; // leave 3 KiB of zeros
        for (std::size_t i = 0; i < 1024 && pos < n; ++i, ++pos) {
            out[pos] = static_cast<std::uint8_t>(rng() & 0xFF);
        }
    }
    return out;
}

// Word runs separated by newline padding, like config or resource text:
// mid entropy with periodic low-entropy dips.
std::vector<std::uint8_t> gen_textlike(std::mt19937_64& rng, std::size_t n) {
    std::vector<std::uint8_t> out;
    out.reserve(n);
    while (out.size() < n) {
        const std::size_t paragraph_end = std::min(n, out.size() + 1024);
        while (out.size() < paragraph_end) {
            const std::size_t word_len = 3 + rng() % 7;
            for (std::size_t i = 0; i < word_len && out.size() < paragraph_end; ++i) {
                out.push_back(static_cast<std::uint8_t>('a' + rng() % 26));
            }
            if (out.size() < paragraph_end) {
                out.push_back(' ');
            }
        }
        const std::size_t pad_end = std::min(n, out.size() + 256);
        while (out.size() < pad_end) {
            out.push_back('\n');
        }
    }
    return out;
}

bool trees_identical(const fs::path& a, const fs::path& b, std::string& detail) {
    auto list = [](const fs::path& root) {
        std::vector<std::string> rel;
        for (const auto& e : fs::recursive_directory_iterator(root)) {
            if (e.is_regular_file()) {
                rel.push_back(fs::relative(e.path(), root).generic_string());
            }
        }
        std::sort(rel.begin(), rel.end());
        return rel;
    };
    const auto files_a = list(a);
    const auto files_b = list(b);
    if (files_a != files_b) {
        detail = "directory listings differ";
        return false;
    }
    for (const auto& rel : files_a) {
        if (read_bytes(a / rel) != read_bytes(b / rel)) {
            detail = "byte mismatch in " + rel;
            return false;
        }
    }
    return true;
}

binviz::manifest synthetic_manifest(const std::vector<std::pair<std::string, std::size_t>>& classes) {
    binviz::manifest m;
    for (const auto& [label, count] : classes) {
        for (std::size_t i = 0; i < count; ++i) {
            binviz::sample_record rec;
            rec.source_path = label + "/" + std::to_string(i);
            rec.label = label;
            rec.sha256 = std::string(64, '0');
            rec.size_bytes = 1;
            rec.status = "ok";
            rec.window_size = 256;
            rec.step = 256;
            m.records.push_back(std::move(rec));
        }
    }
    std::sort(m.records.begin(), m.records.end(),
              [](const auto& x, const auto& y) { return x.source_path < y.source_path; });
    return m;
}

// ---------------------------------------------------------------------------
// Criteria
// ---------------------------------------------------------------------------

bool entropy_oracle(std::string& detail) {
    const auto start = clock_type::now();

    std::vector<std::uint8_t> same(256, 0x00);
    if (binviz::shannon_entropy(same) != 0.0) {
        detail = "all-same anchor failed";
        return false;
    }
    std::vector<std::uint8_t> uniform(256);
    std::iota(uniform.begin(), uniform.end(), 0);
    if (binviz::shannon_entropy(uniform) != 8.0) {
        detail = "uniform-256 anchor failed";
        return false;
    }
    std::vector<std::uint8_t> two(256);
    std::fill(two.begin(), two.begin() + 128, 0xAA);
    std::fill(two.begin() + 128, two.end(), 0x55);
    if (binviz::shannon_entropy(two) != 1.0) {
        detail = "two-symbol anchor failed";
        return false;
    }

    std::mt19937_64 rng(20240601);
    for (int i = 0; i < 1000; ++i) {
        const auto window = gen_random(rng, 1 + rng() % 1024);
        const double got = binviz::shannon_entropy(window);
        const double want = oracle::naive_entropy(window);
        if (std::fabs(got - want) > 1e-12) {
            detail = "window " + std::to_string(i) + " off by " + std::to_string(got - want);
            return false;
        }
    }
    const double elapsed = seconds_since(start);
    if (elapsed >= 10.0) {
        detail = "took " + std::to_string(elapsed) + "s (limit 10s)";
        return false;
    }
    detail = "1000 windows within 1e-12, anchors exact";
    return true;
}

bool window_count_law(std::string& detail) {
    std::mt19937_64 rng(20240602);
    for (int i = 0; i < 500; ++i) {
        const std::size_t w = 1 + rng() % 512;
        const std::size_t n = w + rng() % 8192;
        const std::size_t s = 1 + rng() % 512;
        const auto offsets = oracle::naive_window_offsets(n, w, s);
        const std::size_t expected = (n - w) / s + 1;
        const std::size_t got = binviz::window_count(n, binviz::entropy_config{w, s});
        if (got != expected || got != offsets.size()) {
            detail = "n=" + std::to_string(n) + " w=" + std::to_string(w) +
                     " s=" + std::to_string(s) + ": got " + std::to_string(got);
            return false;
        }
    }
    detail = "500 random (n, w, s) triples match floor((n-w)/s)+1";
    return true;
}

bool proposition_roundtrip(std::string& detail) {
    std::mt19937_64 rng(20240603);
    for (int i = 0; i < 1000; ++i) {
        const auto data = gen_random(rng, 1 + rng() % 10000);
        const auto back = binviz::matrix_to_bytes(binviz::bytes_to_matrix(data));
        if (back != data) {
            detail = "round trip failed at length " + std::to_string(data.size());
            return false;
        }
    }
    detail = "1000 random streams of length 1..10000 recovered exactly";
    return true;
}

bool bicubic_oracle(std::string& detail) {
    std::mt19937_64 rng(20240604);

    binviz::pixel_matrix constant;
    constant.side = 4;
    constant.values.assign(16, 7);
    const auto up = binviz::resize_bicubic(constant, 256);
    if (!std::all_of(up.values.begin(), up.values.end(),
                     [](std::uint8_t v) { return v == 7; })) {
        detail = "constant case failed";
        return false;
    }

    for (int i = 0; i < 60; ++i) {
        binviz::pixel_matrix m;
        m.side = 1 + rng() % 20;
        m.values = gen_random(rng, m.side * m.side);

        const auto identity = binviz::resize_bicubic(m, m.side);
        if (identity.values != m.values) {
            detail = "identity case failed at side " + std::to_string(m.side);
            return false;
        }

        const std::size_t target = 1 + rng() % 48;
        const auto got = binviz::resize_bicubic(m, target);
        const auto want = oracle::bicubic_reference(m.values, m.side, target);
        if (got.values != want) {
            detail = "mismatch resizing " + std::to_string(m.side) + " -> " +
                     std::to_string(target);
            return false;
        }
    }
    detail = "60 random matrices match the reference exactly; constant and identity hold";
    return true;
}

bool extract_determinism(std::string& detail) {
    const fs::path corpus = g_root / "det_corpus";
    std::mt19937_64 rng(20240605);
    for (int i = 0; i < 50; ++i) {
        const std::string label = i % 3 == 0 ? "A" : (i % 3 == 1 ? "B" : "C");
        std::vector<std::uint8_t> data;
        switch (i % 4) {
        case 0: data = gen_random(rng, 200 + rng() % 4000); break;
        case 1: data = gen_zeroheavy(rng, 4096 + rng() % 4096); break;
        case 2: data = gen_textlike(rng, 2048 + rng() % 2048); break;
        default: data = gen_random(rng, 1 + rng() % 200); break; // shorter than one window
        }
        write_bytes(corpus / label / ("f" + std::to_string(i) + ".bin"), data);
    }

    const fs::path out1 = g_root / "det_out1";
    const fs::path out2 = g_root / "det_out2";
    const std::string common = " --mode both --window-size 256 --step 256 --image-size 256";
    if (run_cli("extract --input \"" + corpus.string() + "\" --output \"" + out1.string() +
                "\" --jobs 1" + common) != 0) {
        detail = "extract with jobs=1 failed";
        return false;
    }
    if (run_cli("extract --input \"" + corpus.string() + "\" --output \"" + out2.string() +
                "\" --jobs 8" + common) != 0) {
        detail = "extract with jobs=8 failed";
        return false;
    }
    if (!trees_identical(out1, out2, detail)) {
        return false;
    }
    detail = "jobs=1 and jobs=8 trees (images + manifest) byte-identical";
    return true;
}

bool complexity_smoke(std::string& detail) {
    const fs::path base = g_root / "scaling";
    std::mt19937_64 rng(20240606);
    const std::array<std::size_t, 3> sizes = {1u << 20, 2u << 20, 4u << 20};
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        write_bytes(base / ("in" + std::to_string(i)) / "X" / "f.bin",
                    gen_random(rng, sizes[i]));
    }

    auto run_once = [&](std::size_t i) {
        binviz::extract_config config;
        config.output_root = base / ("out" + std::to_string(i));
        auto m = binviz::scan_dataset(base / ("in" + std::to_string(i)));
        const auto summary = binviz::run_batch(m, config, 1);
        return summary.ok == 1;
    };

    // Warm the page cache, then take the median of three timed runs.
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (!run_once(i)) {
            detail = "pipeline failed on size " + std::to_string(sizes[i]);
            return false;
        }
    }
    std::array<double, 3> median_time{};
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        std::array<double, 3> reps{};
        for (auto& t : reps) {
            const auto start = clock_type::now();
            run_once(i);
            t = seconds_since(start);
        }
        std::sort(reps.begin(), reps.end());
        median_time[i] = reps[1];
    }

    const double r1 = median_time[1] / median_time[0];
    const double r2 = median_time[2] / median_time[1];
    std::ostringstream os;
    os << "doubling ratios " << r1 << ", " << r2 << " (1/2/4 MiB medians " << median_time[0]
       << "/" << median_time[1] << "/" << median_time[2] << "s)";
    detail = os.str();
    return r1 >= 1.6 && r1 <= 2.6 && r2 >= 1.6 && r2 <= 2.6;
}

bool split_contract(std::string& detail) {
    const auto m = synthetic_manifest({{"small", 10}, {"mid", 100}, {"big", 1000}});
    const std::array<double, 3> ratios = {0.7, 0.1, 0.2};
    const auto s1 = binviz::split_dataset(m, ratios, 4242);
    const auto s2 = binviz::split_dataset(m, ratios, 4242);
    if (s1.entries != s2.entries) {
        detail = "same seed produced different assignments";
        return false;
    }

    std::map<std::string, std::array<std::size_t, 3>> counts;
    for (std::size_t i = 0; i < m.records.size(); ++i) {
        for (std::size_t k = 0; k < 3; ++k) {
            if (s1.entries[i].second == binviz::split_names[k]) {
                ++counts[m.records[i].label][k];
            }
        }
    }
    const std::map<std::string, std::array<std::size_t, 3>> expected = {
        {"small", {7, 1, 2}}, {"mid", {70, 10, 20}}, {"big", {700, 100, 200}}};
    for (const auto& [label, want] : expected) {
        if (counts[label] != want) {
            detail = "class " + label + " got " + std::to_string(counts[label][0]) + "/" +
                     std::to_string(counts[label][1]) + "/" + std::to_string(counts[label][2]);
            return false;
        }
    }
    detail = "classes {10,100,1000} split 70/10/20 exactly; seed reproduces assignment";
    return true;
}

bool stats_format(std::string& detail) {
    // 71 malware-style classes totaling 20000 plus one goodware class of 10000.
    std::vector<std::pair<std::string, std::size_t>> classes;
    std::size_t malware_total = 0;
    for (int i = 0; i < 10; ++i) {
        const std::size_t count = 2000 - 100 * static_cast<std::size_t>(i);
        classes.emplace_back("mal" + std::string(i < 10 ? "0" : "") + std::to_string(i), count);
        malware_total += count;
    }
    for (int i = 10; i < 70; ++i) {
        classes.emplace_back("mal" + std::to_string(i), 73);
        malware_total += 73;
    }
    classes.emplace_back("mal70", 20000 - malware_total);
    classes.emplace_back("goodware", 10000);

    const auto m = synthetic_manifest(classes);
    const auto stats = binviz::compute_stats(m, 10);
    if (stats.total != 30000) {
        detail = "total " + std::to_string(stats.total) + " != 30000";
        return false;
    }
    if (stats.per_class.size() != 72 || stats.per_class.at("goodware") != 10000) {
        detail = "class breakdown wrong";
        return false;
    }
    const std::vector<std::pair<std::string, std::uint64_t>> expected_top = {
        {"goodware", 10000}, {"mal00", 2000}, {"mal01", 1900}, {"mal02", 1800},
        {"mal03", 1700},     {"mal04", 1600}, {"mal05", 1500}, {"mal06", 1400},
        {"mal07", 1300},     {"mal08", 1200}};
    if (stats.top_k != expected_top) {
        detail = "top-10 ordering wrong";
        return false;
    }

    // Same numbers through the CLI.
    const fs::path mpath = g_root / "stats_manifest.jsonl";
    const fs::path jpath = g_root / "stats.json";
    binviz::save_manifest(m, mpath);
    if (run_cli("stats --manifest \"" + mpath.string() + "\" --top 10 --json \"" +
                jpath.string() + "\"") != 0) {
        detail = "stats CLI failed";
        return false;
    }
    std::ifstream jin(jpath);
    const auto j = nlohmann::json::parse(jin);
    if (j["total"].get<std::uint64_t>() != 30000 || j["classes"].get<std::size_t>() != 72 ||
        j["top_k"][0][0].get<std::string>() != "goodware") {
        detail = "CLI stats JSON diverges";
        return false;
    }
    detail = "72-class synthetic: total 30000, goodware 10000, top-10 ordered";
    return true;
}

bool baseline_discriminability(std::string& detail) {
    const auto start = clock_type::now();
    const fs::path corpus = g_root / "bench_corpus";
    std::mt19937_64 rng(20240609);
    const std::size_t files_per_class = 50;
    for (std::size_t i = 0; i < files_per_class; ++i) {
        const std::size_t n = 65536 + rng() % 98304; // 64..160 KiB
        write_bytes(corpus / "random" / ("r" + std::to_string(i) + ".bin"), gen_random(rng, n));
        write_bytes(corpus / "zeroheavy" / ("z" + std::to_string(i) + ".bin"),
                    gen_zeroheavy(rng, n));
        write_bytes(corpus / "textlike" / ("t" + std::to_string(i) + ".bin"),
                    gen_textlike(rng, n));
    }

    const fs::path out = g_root / "bench_out";
    const fs::path manifest = out / "manifest.jsonl";
    const fs::path split = out / "split.jsonl";
    if (run_cli("extract --input \"" + corpus.string() + "\" --output \"" + out.string() +
                "\" --mode both --entropy-image-size 256 --jobs 4") != 0) {
        detail = "extract failed";
        return false;
    }
    if (run_cli("split --manifest \"" + manifest.string() +
                "\" --ratios 0.7,0.1,0.2 --seed 1234 --out \"" + split.string() + "\"") != 0) {
        detail = "split failed";
        return false;
    }

    std::array<double, 2> accuracy{};
    const std::array<std::string, 2> modes = {"entropy", "grayscale"};
    for (std::size_t k = 0; k < 2; ++k) {
        const fs::path report = out / ("report_" + modes[k] + ".json");
        if (run_cli("bench --manifest \"" + manifest.string() + "\" --split \"" +
                    split.string() + "\" --mode " + modes[k] + " --feature-side 32 --report \"" +
                    report.string() + "\"") != 0) {
            detail = "bench failed for mode " + modes[k];
            return false;
        }
        std::ifstream jin(report);
        const auto j = nlohmann::json::parse(jin);
        accuracy[k] = j["metrics"]["accuracy"].get<double>();
    }

    const double elapsed = seconds_since(start);
    std::ostringstream os;
    os << "entropy acc " << accuracy[0] << ", grayscale acc " << accuracy[1] << " ("
       << elapsed << "s end to end)";
    detail = os.str();
    return accuracy[0] >= 0.95 && accuracy[1] >= 0.95 && elapsed < 300.0;
}

bool metric_formulas(std::string& detail) {
    std::mt19937_64 rng(20240610);
    for (int round = 0; round < 100; ++round) {
        const std::size_t k = 2 + rng() % 7;
        std::vector<std::string> names;
        for (std::size_t c = 0; c < k; ++c) {
            names.push_back("c" + std::to_string(c));
        }
        binviz::confusion_matrix cm(names);
        bool any = false;
        for (auto& row : cm.counts) {
            for (auto& cell : row) {
                cell = rng() % 3 == 0 ? 0 : rng() % 25;
                any = any || cell > 0;
            }
        }
        if (!any) {
            cm.counts[k - 1][0] = 2; // keep a zero diagonal but non-empty matrix
        }
        const auto got = binviz::compute_metrics(cm);
        const auto want = oracle::metrics_reference(cm.counts);
        bool ok = got.accuracy == want.accuracy &&
                  std::fabs(got.macro_precision - want.macro_precision) <= 1e-12 &&
                  std::fabs(got.macro_recall - want.macro_recall) <= 1e-12 &&
                  std::fabs(got.macro_f1 - want.macro_f1) <= 1e-12;
        for (std::size_t c = 0; ok && c < k; ++c) {
            ok = got.per_class[c].second.precision == want.precision[c] &&
                 got.per_class[c].second.recall == want.recall[c] &&
                 got.per_class[c].second.f1 == want.f1[c];
        }
        if (!ok) {
            detail = "divergence on matrix " + std::to_string(round);
            return false;
        }
    }
    detail = "100 random matrices match direct formulas, zero denominators included";
    return true;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: binviz_acceptance <path-to-binviz-cli>\n";
        return 2;
    }
    g_cli = argv[1];
    g_root = fs::temp_directory_path() / ("binviz_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(g_root);

    const std::vector<std::pair<std::string, std::function<bool(std::string&)>>> criteria = {
        {"entropy-oracle", entropy_oracle},
        {"window-count-law", window_count_law},
        {"proposition-roundtrip", proposition_roundtrip},
        {"bicubic-oracle", bicubic_oracle},
        {"extract-determinism", extract_determinism},
        {"complexity-smoke", complexity_smoke},
        {"split-contract", split_contract},
        {"stats-format", stats_format},
        {"baseline-discriminability", baseline_discriminability},
        {"metric-formulas", metric_formulas},
    };

    std::size_t passed = 0;
    for (const auto& [name, fn] : criteria) {
        std::string detail;
        bool ok = false;
        const auto start = clock_type::now();
        try {
            ok = fn(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double elapsed = seconds_since(start);
        std::ostringstream line;
        line << (ok ? "[PASS] " : "[FAIL] ") << name << " - " << detail << " (" << std::fixed
             << elapsed << "s)";
        std::cout << line.str() << std::endl;
        if (ok) {
            ++passed;
        }
    }

    std::error_code ec;
    fs::remove_all(g_root, ec);

    std::cout << "acceptance: " << passed << "/" << criteria.size() << " criteria passed"
              << std::endl;
    return passed == criteria.size() ? 0 : 1;
}
