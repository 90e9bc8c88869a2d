#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "semsketch/corpus.hpp"

namespace semsketch {

struct ScoreReport {
    double accuracy = 0.0;
    std::uint64_t n_correct = 0;
    std::uint64_t n_total = 0;
    // Predictions for contexts that are not in gold; ignored for scoring.
    std::uint64_t n_extraneous = 0;
    // gold sketch id -> (correct, total)
    std::map<std::string, std::pair<std::uint64_t, std::uint64_t>> per_sketch;
};

// Shared-task accuracy: matched pairs divided by |gold|. A context absent
// from pred counts as wrong. Empty gold scores 0 with n_total 0.
ScoreReport accuracy(const Mapping& pred, const Mapping& gold);

// "0.7000" style, four fractional digits.
std::string format_accuracy(double value);

}  // namespace semsketch
