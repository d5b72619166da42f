// binviz - binary visualization toolkit
// Confusion matrices and accuracy / macro precision / recall / F1.

#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace binviz {

/// Square grid of prediction counts: counts[i][j] is the number of samples
/// of true class i predicted as class j.
struct confusion_matrix {
    std::vector<std::string> classes;
    std::vector<std::vector<std::uint64_t>> counts;

    explicit confusion_matrix(std::vector<std::string> class_names = {})
        : classes(std::move(class_names)),
          counts(classes.size(), std::vector<std::uint64_t>(classes.size(), 0)) {}

    std::size_t index_of(const std::string& name) const {
        const auto it = std::find(classes.begin(), classes.end(), name);
        if (it == classes.end()) {
            throw std::invalid_argument("unknown class: " + name);
        }
        return static_cast<std::size_t>(it - classes.begin());
    }

    void add(const std::string& truth, const std::string& predicted) {
        ++counts[index_of(truth)][index_of(predicted)];
    }

    std::uint64_t total() const {
        std::uint64_t t = 0;
        for (const auto& row : counts) {
            for (std::uint64_t c : row) {
                t += c;
            }
        }
        return t;
    }
};

struct class_metrics {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    std::uint64_t support = 0; // row sum: samples whose true class this is
};

struct metrics_report {
    double accuracy = 0.0;
    double macro_precision = 0.0;
    double macro_recall = 0.0;
    double macro_f1 = 0.0;
    std::vector<std::pair<std::string, class_metrics>> per_class;
};

/**
 * Derive the metric surface from a confusion matrix.
 *
 * accuracy = trace / total. Per class: precision = diagonal / column sum,
 * recall = diagonal / row sum, F1 = harmonic mean; each is 0 by convention
 * when its denominator is 0, so absent or never-predicted classes do not
 * divide by zero. Macro metrics are unweighted class means.
 *
 * Throws std::invalid_argument when the matrix holds no samples.
 */
inline metrics_report compute_metrics(const confusion_matrix& cm) {
    const std::uint64_t total = cm.total();
    if (total == 0) {
        throw std::invalid_argument("empty confusion matrix");
    }
    const std::size_t k = cm.classes.size();

    metrics_report report;
    std::uint64_t trace = 0;
    for (std::size_t c = 0; c < k; ++c) {
        trace += cm.counts[c][c];
    }
    report.accuracy = static_cast<double>(trace) / static_cast<double>(total);

    for (std::size_t c = 0; c < k; ++c) {
        std::uint64_t row_sum = 0;
        std::uint64_t col_sum = 0;
        for (std::size_t j = 0; j < k; ++j) {
            row_sum += cm.counts[c][j];
            col_sum += cm.counts[j][c];
        }
        const double diag = static_cast<double>(cm.counts[c][c]);

        class_metrics cmx;
        cmx.support = row_sum;
        cmx.precision = col_sum == 0 ? 0.0 : diag / static_cast<double>(col_sum);
        cmx.recall = row_sum == 0 ? 0.0 : diag / static_cast<double>(row_sum);
        const double pr = cmx.precision + cmx.recall;
        cmx.f1 = pr == 0.0 ? 0.0 : 2.0 * cmx.precision * cmx.recall / pr;

        report.macro_precision += cmx.precision;
        report.macro_recall += cmx.recall;
        report.macro_f1 += cmx.f1;
        report.per_class.emplace_back(cm.classes[c], cmx);
    }
    if (k > 0) {
        report.macro_precision /= static_cast<double>(k);
        report.macro_recall /= static_cast<double>(k);
        report.macro_f1 /= static_cast<double>(k);
    }
    return report;
}

} // namespace binviz
