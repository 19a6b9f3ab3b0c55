#include "holz/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "holz/lz_text.hpp"
#include "holz/suffix_index.hpp"

namespace holz {

double empirical_entropy(const Text& text, unsigned k) {
    const size_t n = text.n();
    if (n <= k) {
        throw std::invalid_argument("empirical_entropy: body not longer than k");
    }
    const std::vector<uint32_t>& s = text.symbols;

    // Group the positions that share a k-context, sub-grouped by the symbol
    // that follows; each context contributes its unnormalized zero-order
    // entropy. Sorting keeps memory flat for any alphabet.
    std::vector<uint32_t> order(n - k);
    std::iota(order.begin(), order.end(), uint32_t{0});
    std::sort(order.begin(), order.end(), [&](uint32_t x, uint32_t y) {
        for (unsigned j = 0; j <= k; ++j) {
            if (s[x + j] != s[y + j]) {
                return s[x + j] < s[y + j];
            }
        }
        return false;
    });

    auto same_context = [&](uint32_t x, uint32_t y) {
        for (unsigned j = 0; j < k; ++j) {
            if (s[x + j] != s[y + j]) {
                return false;
            }
        }
        return true;
    };

    double sum = 0.0;
    size_t g = 0;
    while (g < order.size()) {
        size_t g_end = g + 1;
        while (g_end < order.size() && same_context(order[g], order[g_end])) {
            ++g_end;
        }
        const double group = static_cast<double>(g_end - g);
        size_t i = g;
        while (i < g_end) {
            size_t i_end = i + 1;
            while (i_end < g_end && s[order[i] + k] == s[order[i_end] + k]) {
                ++i_end;
            }
            const double cnt = static_cast<double>(i_end - i);
            sum += cnt * std::log2(group / cnt);
            i = i_end;
        }
        g = g_end;
    }
    return sum / static_cast<double>(n);
}

StatsReport dataset_stats(const Text& text) {
    StatsReport report;
    report.n = text.n();

    std::vector<bool> occurs(text.sigma, false);
    for (const uint32_t c : text.symbols) {
        occurs[c] = true;
    }
    report.sigma = static_cast<uint32_t>(std::count(occurs.begin(), occurs.end(), true));

    if (text.n() > 0) {
        report.z = greedy_parse_nsvpsv(text).z();
        report.r = static_bwt_runs(text).runs;
    }
    for (unsigned k = 0; k < report.h.size(); ++k) {
        report.h[k] = text.n() > k ? empirical_entropy(text, k) : 0.0;
    }
    return report;
}

} // namespace holz
