#include "holz/static_wavelet.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace holz {

StaticBitRank::StaticBitRank(const std::vector<bool>& bits) : n_(bits.size()) {
    words_.assign((n_ + 63) / 64 + 1, 0);
    for (size_t i = 0; i < n_; ++i) {
        if (bits[i]) {
            words_[i / 64] |= uint64_t{1} << (i % 64);
        }
    }
    super_.assign(words_.size() / 8 + 2, 0);
    uint32_t ones = 0;
    for (size_t w = 0; w < words_.size(); ++w) {
        if (w % 8 == 0) {
            super_[w / 8] = ones;
        }
        ones += static_cast<uint32_t>(std::popcount(words_[w]));
    }
    super_[(words_.size() + 7) / 8] = ones;
}

size_t StaticBitRank::rank1(size_t i) const {
    size_t w = i / 64;
    size_t ones = super_[w / 8];
    for (size_t k = (w / 8) * 8; k < w; ++k) {
        ones += std::popcount(words_[k]);
    }
    if (i % 64 != 0) {
        ones += std::popcount(words_[w] & ((uint64_t{1} << (i % 64)) - 1));
    }
    return ones;
}

size_t StaticBitRank::select(bool bit, size_t k) const {
    // Find the superblock, then the word, then the bit.
    size_t lo = 0;
    size_t hi = (words_.size() + 7) / 8;
    while (lo < hi) {
        size_t mid = (lo + hi + 1) / 2;
        size_t count = bit ? super_[mid] : mid * 8 * 64 - super_[mid];
        if (count < k) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    size_t remaining = k - (bit ? super_[lo] : lo * 8 * 64 - super_[lo]);
    for (size_t w = lo * 8; w < words_.size(); ++w) {
        uint64_t word = bit ? words_[w] : ~words_[w];
        size_t pop = std::popcount(word);
        if (pop >= remaining) {
            for (size_t b = 0; b < 64; ++b) {
                if ((word >> b) & 1u) {
                    if (--remaining == 0) {
                        return w * 64 + b;
                    }
                }
            }
        }
        remaining -= pop;
    }
    throw std::invalid_argument("StaticBitRank::select: not enough matching bits");
}

StaticWaveletMatrix::StaticWaveletMatrix(const std::vector<uint64_t>& values) : n_(values.size()) {
    uint64_t max_value = 0;
    for (uint64_t v : values) {
        max_value = std::max(max_value, v);
    }
    depth_ = std::max<unsigned>(1, std::bit_width(max_value));
    levels_.reserve(depth_);
    zeros_.reserve(depth_);
    std::vector<uint64_t> cur = values;
    std::vector<uint64_t> next(n_);
    std::vector<bool> bits(n_);
    for (unsigned k = 0; k < depth_; ++k) {
        unsigned shift = depth_ - 1 - k;
        for (size_t i = 0; i < n_; ++i) {
            bits[i] = (cur[i] >> shift) & 1u;
        }
        levels_.emplace_back(bits);
        size_t z = 0;
        for (size_t i = 0; i < n_; ++i) {
            if (!bits[i]) {
                next[z++] = cur[i];
            }
        }
        zeros_.push_back(z);
        for (size_t i = 0; i < n_; ++i) {
            if (bits[i]) {
                next[z++] = cur[i];
            }
        }
        std::swap(cur, next);
    }
}

uint64_t StaticWaveletMatrix::access(size_t i) const {
    uint64_t value = 0;
    for (unsigned k = 0; k < depth_; ++k) {
        bool bit = levels_[k].get(i);
        value = (value << 1) | (bit ? 1u : 0u);
        i = bit ? zeros_[k] + levels_[k].rank1(i) : levels_[k].rank0(i);
    }
    return value;
}

std::optional<StaticWaveletMatrix::Hit> StaticWaveletMatrix::extreme(Frame frame,
                                                                     bool want_max) const {
    for (unsigned k = frame.level; k < depth_; ++k) {
        const auto& lvl = levels_[k];
        size_t lb = lvl.rank0(frame.b);
        size_t le = lvl.rank0(frame.e);
        size_t rb = zeros_[k] + lvl.rank1(frame.b);
        size_t re = zeros_[k] + lvl.rank1(frame.e);
        bool go_right = want_max ? (rb < re) : (lb >= le);
        if (go_right) {
            frame = {k + 1, rb, re, (frame.prefix << 1) | 1u};
        } else {
            frame = {k + 1, lb, le, frame.prefix << 1};
        }
    }
    return Hit{frame.prefix, locate(frame.prefix, frame.b)};
}

size_t StaticWaveletMatrix::locate(uint64_t value, size_t bottom_index) const {
    size_t i = bottom_index;
    for (unsigned k = depth_; k-- > 0;) {
        bool bit = (value >> (depth_ - 1 - k)) & 1u;
        i = bit ? levels_[k].select(true, i - zeros_[k] + 1) : levels_[k].select(false, i + 1);
    }
    return i;
}

std::optional<StaticWaveletMatrix::Hit> StaticWaveletMatrix::range_pred(size_t b, size_t e,
                                                                        uint64_t v) const {
    if (b >= e || e > n_) {
        return std::nullopt;
    }
    if (depth_ < 64 && v >= (uint64_t{1} << depth_)) {
        return extreme(Frame{0, b, e, 0}, /*want_max=*/true); // everything stored is smaller
    }
    std::optional<Frame> best;
    Frame cur{0, b, e, 0};
    for (unsigned k = 0; k < depth_; ++k) {
        const auto& lvl = levels_[k];
        size_t lb = lvl.rank0(cur.b);
        size_t le = lvl.rank0(cur.e);
        size_t rb = zeros_[k] + lvl.rank1(cur.b);
        size_t re = zeros_[k] + lvl.rank1(cur.e);
        bool bit = (v >> (depth_ - 1 - k)) & 1u;
        if (bit) {
            if (lb < le) {
                best = Frame{k + 1, lb, le, cur.prefix << 1};
            }
            cur = {k + 1, rb, re, (cur.prefix << 1) | 1u};
        } else {
            cur = {k + 1, lb, le, cur.prefix << 1};
        }
        if (cur.b >= cur.e) {
            break;
        }
    }
    if (!best) {
        return std::nullopt;
    }
    return extreme(*best, /*want_max=*/true);
}

std::optional<StaticWaveletMatrix::Hit> StaticWaveletMatrix::range_succ(size_t b, size_t e,
                                                                        uint64_t v) const {
    if (b >= e || e > n_) {
        return std::nullopt;
    }
    if (depth_ < 64 && v >= (uint64_t{1} << depth_)) {
        return std::nullopt; // nothing stored can exceed it
    }
    std::optional<Frame> best;
    Frame cur{0, b, e, 0};
    for (unsigned k = 0; k < depth_; ++k) {
        const auto& lvl = levels_[k];
        size_t lb = lvl.rank0(cur.b);
        size_t le = lvl.rank0(cur.e);
        size_t rb = zeros_[k] + lvl.rank1(cur.b);
        size_t re = zeros_[k] + lvl.rank1(cur.e);
        bool bit = (v >> (depth_ - 1 - k)) & 1u;
        if (!bit) {
            if (rb < re) {
                best = Frame{k + 1, rb, re, (cur.prefix << 1) | 1u};
            }
            cur = {k + 1, lb, le, cur.prefix << 1};
        } else {
            cur = {k + 1, rb, re, (cur.prefix << 1) | 1u};
        }
        if (cur.b >= cur.e) {
            break;
        }
    }
    if (!best) {
        return std::nullopt;
    }
    return extreme(*best, /*want_max=*/false);
}

std::optional<StaticWaveletMatrix::Hit> wt_range_pred(const StaticWaveletMatrix& wt, size_t lo,
                                                      size_t hi, uint64_t v) {
    return wt.range_pred(lo, hi + 1, v);
}

std::optional<StaticWaveletMatrix::Hit> wt_range_succ(const StaticWaveletMatrix& wt, size_t lo,
                                                      size_t hi, uint64_t v) {
    return wt.range_succ(lo, hi + 1, v);
}

} // namespace holz
