#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "holz/dynamic_bits.hpp"

namespace holz {

// Insert-only dynamic integer sequence: a wavelet matrix whose levels are
// dynamic bit vectors, most significant value bit first. Fixed depth of
// ceil(log2(alphabet)) levels chosen at construction.
class DynSequence {
  public:
    explicit DynSequence(uint64_t alphabet); // values range over [0..alphabet)

    size_t size() const { return n_; }
    uint64_t alphabet() const { return alphabet_; }
    unsigned depth() const { return depth_; }

    void insert(size_t pos, uint64_t sym); // shifts positions >= pos up by one
    uint64_t access(size_t i) const;
    size_t rank(uint64_t sym, size_t i) const; // occurrences of sym in [0..i)
    // 0-based position of the k-th (1-based) occurrence of sym.
    size_t select(uint64_t sym, size_t k) const;

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

    uint64_t alphabet_ = 0;
    unsigned depth_ = 0;
    size_t n_ = 0;
    std::vector<DynBitVector> levels_;
    std::vector<size_t> zeros_; // zero count per level
};

} // namespace holz
