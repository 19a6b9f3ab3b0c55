#include "holz/dynamic_bits.hpp"

#include <bit>
#include <stdexcept>

namespace holz {

namespace {

void block_insert(std::vector<uint64_t>& words, uint32_t bits, size_t offset, bool bit) {
    if (bits % 64 == 0) {
        words.push_back(0);
    }
    size_t w = offset / 64;
    size_t b = offset % 64;
    uint64_t word = words[w];
    uint64_t low_mask = b == 0 ? 0 : (uint64_t{1} << b) - 1;
    uint64_t carry = word >> 63;
    words[w] = (word & low_mask) | ((word & ~low_mask) << 1) | (uint64_t{bit} << b);
    for (size_t k = w + 1; k < words.size(); ++k) {
        uint64_t next_carry = words[k] >> 63;
        words[k] = (words[k] << 1) | carry;
        carry = next_carry;
    }
}

size_t block_rank1(const std::vector<uint64_t>& words, size_t offset) {
    size_t ones = 0;
    size_t w = offset / 64;
    for (size_t k = 0; k < w; ++k) {
        ones += std::popcount(words[k]);
    }
    if (offset % 64 != 0) {
        ones += std::popcount(words[w] & ((uint64_t{1} << (offset % 64)) - 1));
    }
    return ones;
}

// Position of the k-th (1-based) `bit` within the block; k must be valid.
size_t block_select(const std::vector<uint64_t>& words, bool bit, size_t k) {
    for (size_t w = 0; w < words.size(); ++w) {
        uint64_t word = bit ? words[w] : ~words[w];
        size_t pop = std::popcount(word);
        if (pop >= k) {
            for (size_t b = 0;; ++b) {
                if ((word >> b) & 1u) {
                    if (--k == 0) {
                        return w * 64 + b;
                    }
                }
            }
        }
        k -= pop;
    }
    throw std::logic_error("block_select: exhausted block");
}

} // namespace

void DynBitVector::rebuild_fenwick() {
    size_t nb = blocks_.size();
    fen_size_.assign(nb + 1, 0);
    fen_ones_.assign(nb + 1, 0);
    for (size_t i = 1; i <= nb; ++i) {
        fen_size_[i] += blocks_[i - 1].bits;
        fen_ones_[i] += blocks_[i - 1].ones;
        size_t j = i + (i & (0 - i));
        if (j <= nb) {
            fen_size_[j] += fen_size_[i];
            fen_ones_[j] += fen_ones_[i];
        }
    }
}

void DynBitVector::fenwick_add(size_t bi, uint64_t dsize, uint64_t dones) {
    for (size_t i = bi + 1; i < fen_size_.size(); i += i & (0 - i)) {
        fen_size_[i] += dsize;
        fen_ones_[i] += dones;
    }
}

DynBitVector::Located DynBitVector::locate_pos(size_t pos) const {
    size_t nb = blocks_.size();
    size_t idx = 0;
    size_t rem = pos;
    size_t ones_before = 0;
    for (size_t step = std::bit_floor(nb); step != 0; step >>= 1) {
        size_t next = idx + step;
        if (next <= nb && fen_size_[next] <= rem) {
            rem -= fen_size_[next];
            ones_before += fen_ones_[next];
            idx = next;
        }
    }
    return {idx, rem, ones_before};
}

void DynBitVector::insert(size_t pos, bool bit) {
    if (pos > n_) {
        throw std::invalid_argument("DynBitVector::insert: position out of range");
    }
    if (blocks_.empty()) {
        blocks_.emplace_back();
        rebuild_fenwick();
    }
    size_t bi;
    size_t offset;
    if (pos == n_) {
        bi = blocks_.size() - 1;
        offset = blocks_[bi].bits;
    } else {
        Located at = locate_pos(pos);
        bi = at.block;
        offset = at.offset;
    }
    Block& blk = blocks_[bi];
    block_insert(blk.words, blk.bits, offset, bit);
    ++blk.bits;
    blk.ones += bit;
    ++n_;
    ones_ += bit;
    fenwick_add(bi, 1, bit);
    if (blk.bits == kBlockBits) {
        split(bi);
    }
}

void DynBitVector::split(size_t bi) {
    Block& blk = blocks_[bi];
    Block upper;
    upper.words.assign(blk.words.begin() + kBlockBits / 128, blk.words.end());
    upper.bits = kBlockBits / 2;
    upper.ones = blk.ones - static_cast<uint32_t>(block_rank1(blk.words, kBlockBits / 2));
    blk.words.resize(kBlockBits / 128);
    blk.bits = kBlockBits / 2;
    blk.ones -= upper.ones;
    blocks_.insert(blocks_.begin() + bi + 1, std::move(upper));
    rebuild_fenwick();
}

bool DynBitVector::access(size_t pos) const {
    if (pos >= n_) {
        throw std::invalid_argument("DynBitVector::access: position out of range");
    }
    Located at = locate_pos(pos);
    return (blocks_[at.block].words[at.offset / 64] >> (at.offset % 64)) & 1u;
}

size_t DynBitVector::rank1(size_t pos) const {
    if (pos > n_) {
        throw std::invalid_argument("DynBitVector::rank: position out of range");
    }
    if (pos == n_) {
        return ones_;
    }
    Located at = locate_pos(pos);
    return at.ones_before + block_rank1(blocks_[at.block].words, at.offset);
}

size_t DynBitVector::select(bool bit, size_t k) const {
    if (k == 0 || k > count(bit)) {
        throw std::invalid_argument("DynBitVector::select: rank out of range");
    }
    size_t nb = blocks_.size();
    size_t idx = 0;
    size_t rem = k;
    size_t pos_before = 0;
    for (size_t step = std::bit_floor(nb); step != 0; step >>= 1) {
        size_t next = idx + step;
        if (next <= nb) {
            uint64_t cnt = bit ? fen_ones_[next] : fen_size_[next] - fen_ones_[next];
            if (cnt < rem) {
                rem -= cnt;
                pos_before += fen_size_[next];
                idx = next;
            }
        }
    }
    return pos_before + block_select(blocks_[idx].words, bit, rem);
}

} // namespace holz
