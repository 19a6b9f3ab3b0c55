#include "holz/suffix_index.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "holz/sais.hpp"

namespace holz {

SuffixIndex SuffixIndex::build(std::vector<uint32_t> seq, uint32_t sigma, bool with_lce) {
    SuffixIndex idx;
    idx.sigma_ = sigma;
    idx.seq_ = std::move(seq);
    size_t n = idx.seq_.size();
    idx.m_ = n + 1;

    // The empty suffix (sentinel position n) sorts first by definition.
    idx.sa_.assign(idx.m_, 0);
    idx.sa_[0] = static_cast<uint32_t>(n);
    if (n > 0) {
        std::vector<uint32_t> pure = suffix_array(idx.seq_, sigma);
        std::copy(pure.begin(), pure.end(), idx.sa_.begin() + 1);
    }
    idx.isa_.assign(idx.m_, 0);
    for (size_t r = 0; r < idx.m_; ++r) {
        idx.isa_[idx.sa_[r]] = static_cast<uint32_t>(r);
    }

    // Kasai, with the sentinel position contributing zero everywhere.
    idx.lcp_.assign(idx.m_, 0);
    uint32_t h = 0;
    for (size_t i = 0; i < n; ++i) {
        uint32_t r = idx.isa_[i];
        size_t j = idx.sa_[r - 1]; // r >= 1: rank 0 is the sentinel suffix
        while (i + h < n && j + h < n && idx.seq_[i + h] == idx.seq_[j + h]) {
            ++h;
        }
        idx.lcp_[r] = h;
        if (h > 0) {
            --h;
        }
    }

    if (with_lce && idx.m_ > 1) {
        size_t levels = std::bit_width(idx.m_) - 1;
        idx.levels_.reserve(levels);
        const std::vector<uint32_t>* prev = &idx.lcp_;
        for (size_t k = 1; (size_t{1} << k) <= idx.m_; ++k) {
            size_t span = size_t{1} << k;
            std::vector<uint32_t> level(idx.m_ - span + 1);
            for (size_t i = 0; i + span <= idx.m_; ++i) {
                level[i] = std::min((*prev)[i], (*prev)[i + span / 2]);
            }
            idx.levels_.push_back(std::move(level));
            prev = &idx.levels_.back();
        }
    }
    return idx;
}

uint32_t SuffixIndex::lcp_min(size_t lo, size_t hi) const {
    if (lo > hi || hi >= m_) {
        throw std::invalid_argument("lcp_min: bad range");
    }
    if (lo == hi) {
        return lcp_[lo];
    }
    if (levels_.empty()) {
        throw std::logic_error("lcp_min: index built without the LCE table");
    }
    size_t k = std::bit_width(hi - lo + 1) - 1;
    if (k == 0) {
        return std::min(lcp_[lo], lcp_[hi]);
    }
    const auto& level = levels_[k - 1];
    return std::min(level[lo], level[hi - (size_t{1} << k) + 1]);
}

uint64_t SuffixIndex::lce(size_t i, size_t j) const {
    if (i >= m_ || j >= m_) {
        throw std::invalid_argument("lce: position out of range");
    }
    size_t n = m_ - 1;
    if (i == j) {
        return n - i;
    }
    uint32_t a = isa_[i];
    uint32_t b = isa_[j];
    if (a > b) {
        std::swap(a, b);
    }
    return lcp_min(a + 1, b);
}

PsvNsv build_psv_nsv(const SuffixIndex& idx) {
    const auto& sa = idx.sa();
    size_t m = sa.size();
    PsvNsv out;
    out.psv.assign(m, PsvNsv::kNone);
    out.nsv.assign(m, PsvNsv::kNone);
    std::vector<uint32_t> stack;
    for (size_t i = 0; i < m; ++i) {
        while (!stack.empty() && sa[stack.back()] > sa[i]) {
            out.nsv[stack.back()] = static_cast<uint32_t>(i);
            stack.pop_back();
        }
        if (!stack.empty()) {
            out.psv[i] = stack.back();
        }
        stack.push_back(static_cast<uint32_t>(i));
    }
    return out;
}

BwtRuns static_bwt_runs(const Text& text) {
    BwtRuns out;
    size_t n = text.n();
    out.bwt.reserve(n + 1);
    // Sort the suffixes of body + terminator; the terminator (rank 0) is
    // preceded by the last body symbol, and position 0 by the terminator.
    SuffixIndex idx = SuffixIndex::build(text.symbols, text.sigma, /*with_lce=*/false);
    for (size_t r = 0; r < idx.size(); ++r) {
        uint32_t pos = idx.sa()[r];
        out.bwt.push_back(pos == 0 ? text.sigma : text.symbols[pos - 1]);
    }
    for (size_t i = 0; i < out.bwt.size(); ++i) {
        if (i == 0 || out.bwt[i] != out.bwt[i - 1]) {
            ++out.runs;
        }
    }
    return out;
}

} // namespace holz
