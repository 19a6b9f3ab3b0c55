#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "holz/text.hpp"

namespace holz {

// k-th order empirical entropy of the body in bits per symbol. Contexts are
// the k-grams of the body itself (no virtual prefix, no wraparound), each
// weighted by the symbols that follow it; the sum is normalized by n.
// Requires n > k.
double empirical_entropy(const Text& text, unsigned k);

struct StatsReport {
    std::string name;
    uint64_t n = 0;
    uint32_t sigma = 0;       // distinct symbols occurring in the body
    uint64_t z = 0;           // factors in the textual greedy parse
    uint64_t r = 0;           // runs in the BWT of body + terminator
    std::array<double, 5> h{}; // H0..H4; 0 where n <= k
};

StatsReport dataset_stats(const Text& text);

} // namespace holz
