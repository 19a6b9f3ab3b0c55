#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace holz {

// Plain bit vector with rank/select support, immutable after build.
class StaticBitRank {
  public:
    explicit StaticBitRank(const std::vector<bool>& bits);
    StaticBitRank() = default;

    size_t size() const { return n_; }
    bool get(size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
    size_t rank1(size_t i) const; // ones in [0..i)
    size_t rank0(size_t i) const { return i - rank1(i); }
    size_t rank(bool bit, size_t i) const { return bit ? rank1(i) : rank0(i); }
    // 0-based position of the k-th (1-based) occurrence of `bit`.
    size_t select(bool bit, size_t k) const;

  private:
    size_t n_ = 0;
    std::vector<uint64_t> words_;
    std::vector<uint32_t> super_; // ones before each 8-word block
};

// Wavelet matrix over unsigned values: one reordered bit level per value bit,
// most significant first. Supports access plus range predecessor/successor
// queries, which is all the parsers need.
class StaticWaveletMatrix {
  public:
    StaticWaveletMatrix() = default;
    explicit StaticWaveletMatrix(const std::vector<uint64_t>& values);

    size_t size() const { return n_; }
    unsigned depth() const { return depth_; }
    uint64_t access(size_t i) const;

    struct Hit {
        uint64_t value;
        size_t index; // a position in the queried range holding `value`
    };

    // Largest value < v (resp. smallest value > v) among positions [b..e),
    // half-open. Returns nothing if the range holds no such value.
    std::optional<Hit> range_pred(size_t b, size_t e, uint64_t v) const;
    std::optional<Hit> range_succ(size_t b, size_t e, uint64_t v) const;

  private:
    struct Frame {
        unsigned level;
        size_t b, e;
        uint64_t prefix; // value bits fixed above `level`
    };

    std::optional<Hit> extreme(Frame frame, bool want_max) const;
    size_t locate(uint64_t value, size_t bottom_index) const;

    size_t n_ = 0;
    unsigned depth_ = 0;
    std::vector<StaticBitRank> levels_;
    std::vector<size_t> zeros_; // zero count per level
};

// Inclusive-range helpers mirroring the query surface used by the parsers.
std::optional<StaticWaveletMatrix::Hit> wt_range_pred(const StaticWaveletMatrix& wt, size_t lo,
                                                      size_t hi, uint64_t v);
std::optional<StaticWaveletMatrix::Hit> wt_range_succ(const StaticWaveletMatrix& wt, size_t lo,
                                                      size_t hi, uint64_t v);

} // namespace holz
