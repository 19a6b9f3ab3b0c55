#pragma once

#include <cstdint>
#include <vector>

namespace holz {

// Insert-only dynamic bit vector: fixed-capacity bit blocks indexed by Fenwick
// trees over block sizes and block one-counts. Insert, access, rank and
// select all run in O(block + log #blocks).
class DynBitVector {
  public:
    static constexpr uint32_t kBlockBits = 4096;

    DynBitVector() = default;

    size_t size() const { return n_; }
    size_t ones() const { return ones_; }
    size_t count(bool bit) const { return bit ? ones_ : n_ - ones_; }

    void insert(size_t pos, bool bit); // shifts positions >= pos up by one
    bool access(size_t pos) const;
    size_t rank1(size_t pos) const; // ones in [0..pos)
    size_t rank0(size_t pos) const { return pos - rank1(pos); }
    size_t rank(bool bit, size_t pos) const { return bit ? rank1(pos) : rank0(pos); }
    // 0-based position of the k-th (1-based) occurrence of `bit`.
    size_t select(bool bit, size_t k) const;

  private:
    struct Block {
        std::vector<uint64_t> words;
        uint32_t bits = 0;
        uint32_t ones = 0;
    };

    struct Located {
        size_t block;
        size_t offset;      // bit offset inside the block
        size_t ones_before; // ones in blocks before it
    };

    Located locate_pos(size_t pos) const;
    void split(size_t bi);
    void rebuild_fenwick();
    void fenwick_add(size_t bi, uint64_t dsize, uint64_t dones);

    std::vector<Block> blocks_;
    // 1-indexed Fenwick trees over blocks_, kept structurally in sync.
    std::vector<uint64_t> fen_size_;
    std::vector<uint64_t> fen_ones_;
    size_t n_ = 0;
    size_t ones_ = 0;
};

} // namespace holz
