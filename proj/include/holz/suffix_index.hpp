#pragma once

#include <cstdint>
#include <vector>

#include "holz/text.hpp"

namespace holz {

// Static index over a symbol sequence plus one implicit end sentinel that
// sorts before everything. Positions run over [0..m-1] where m-1 is the
// sentinel position (the empty suffix, always rank 0 in sa).
class SuffixIndex {
  public:
    // `seq` values must be < sigma. The LCE sparse table costs O(m log m)
    // words; callers that only need sa/isa/lcp can skip it.
    static SuffixIndex build(std::vector<uint32_t> seq, uint32_t sigma, bool with_lce = true);

    size_t size() const { return m_; }                  // including the sentinel position
    uint32_t sigma() const { return sigma_; }
    const std::vector<uint32_t>& seq() const { return seq_; } // without the sentinel
    const std::vector<uint32_t>& sa() const { return sa_; }
    const std::vector<uint32_t>& isa() const { return isa_; }
    const std::vector<uint32_t>& lcp() const { return lcp_; }

    // Longest common prefix length of the suffixes starting at i and j.
    uint64_t lce(size_t i, size_t j) const;

    // Minimum of lcp[lo..hi], inclusive; requires the sparse table.
    uint32_t lcp_min(size_t lo, size_t hi) const;

    bool has_lce() const { return !levels_.empty() || m_ <= 1; }

  private:
    size_t m_ = 0;
    uint32_t sigma_ = 0;
    std::vector<uint32_t> seq_;
    std::vector<uint32_t> sa_;
    std::vector<uint32_t> isa_;
    std::vector<uint32_t> lcp_;
    std::vector<std::vector<uint32_t>> levels_; // sparse table over lcp_, doubling windows
};

// Previous/next smaller value over sa positions: psv[i] is the largest j < i
// with sa[j] < sa[i], nsv[i] the smallest j > i with sa[j] < sa[i]; kNone
// where absent.
struct PsvNsv {
    static constexpr uint32_t kNone = UINT32_MAX;
    std::vector<uint32_t> psv;
    std::vector<uint32_t> nsv;
};

PsvNsv build_psv_nsv(const SuffixIndex& idx);

// BWT of the dataset body with one appended terminator that sorts smallest
// (no virtual alphabet prefix). The terminator appears in the output as the
// symbol value text.sigma. runs = number of maximal equal-symbol blocks.
struct BwtRuns {
    std::vector<uint32_t> bwt;
    uint64_t runs = 0;
};

BwtRuns static_bwt_runs(const Text& text);

} // namespace holz
