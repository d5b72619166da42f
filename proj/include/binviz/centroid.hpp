// binviz - binary visualization toolkit
// Nearest-centroid classifier: per-class mean vectors, Euclidean argmin.

#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "binviz/features.hpp"

namespace binviz {

struct centroid_model {
    std::vector<std::string> classes; // lexicographic order
    std::vector<std::vector<double>> centroids;
};

/// Per-class elementwise mean of the training vectors. Every class present
/// must have at least one sample and all vectors the same length.
inline centroid_model train_centroids(const std::vector<labeled_feature>& samples) {
    if (samples.empty()) {
        throw std::invalid_argument("no training samples");
    }
    const std::size_t dim = samples.front().values.size();

    std::map<std::string, std::pair<std::vector<double>, std::size_t>> sums;
    for (const auto& s : samples) {
        if (s.values.size() != dim) {
            throw std::invalid_argument("inconsistent feature length");
        }
        auto& [sum, count] = sums[s.label];
        if (sum.empty()) {
            sum.assign(dim, 0.0);
        }
        for (std::size_t i = 0; i < dim; ++i) {
            sum[i] += s.values[i];
        }
        ++count;
    }

    centroid_model model;
    for (auto& [label, acc] : sums) {
        auto& [sum, count] = acc;
        for (double& v : sum) {
            v /= static_cast<double>(count);
        }
        model.classes.push_back(label);
        model.centroids.push_back(std::move(sum));
    }
    return model;
}

/// Class of the nearest centroid by Euclidean distance. Exact ties go to
/// the lexicographically smallest class name.
inline const std::string& predict(const centroid_model& model, std::span<const double> feature) {
    if (model.classes.empty()) {
        throw std::invalid_argument("empty model");
    }
    std::size_t best = 0;
    double best_dist = -1.0;
    for (std::size_t c = 0; c < model.classes.size(); ++c) {
        const auto& centroid = model.centroids[c];
        if (centroid.size() != feature.size()) {
            throw std::invalid_argument("feature length does not match model");
        }
        double dist = 0.0;
        for (std::size_t i = 0; i < feature.size(); ++i) {
            const double d = feature[i] - centroid[i];
            dist += d * d;
        }
        if (best_dist < 0.0 || dist < best_dist) {
            best_dist = dist;
            best = c;
        }
    }
    return model.classes[best];
}

} // namespace binviz
