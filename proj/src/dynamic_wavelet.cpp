#include "holz/dynamic_wavelet.hpp"

#include <bit>
#include <stdexcept>

namespace holz {

DynSequence::DynSequence(uint64_t alphabet) : alphabet_(alphabet) {
    if (alphabet == 0) {
        throw std::invalid_argument("DynSequence: empty alphabet");
    }
    depth_ = std::max<unsigned>(1, std::bit_width(alphabet - 1));
    levels_.resize(depth_);
    zeros_.assign(depth_, 0);
}

void DynSequence::insert(size_t pos, uint64_t sym) {
    if (pos > n_) {
        throw std::invalid_argument("DynSequence::insert: position out of range");
    }
    if (sym >= alphabet_) {
        throw std::invalid_argument("DynSequence::insert: symbol out of alphabet");
    }
    for (unsigned k = 0; k < depth_; ++k) {
        bool bit = (sym >> (depth_ - 1 - k)) & 1u;
        size_t r = levels_[k].rank(bit, pos);
        levels_[k].insert(pos, bit);
        if (bit) {
            pos = zeros_[k] + r;
        } else {
            ++zeros_[k];
            pos = r;
        }
    }
    ++n_;
}

uint64_t DynSequence::access(size_t i) const {
    if (i >= n_) {
        throw std::invalid_argument("DynSequence::access: position out of range");
    }
    uint64_t value = 0;
    for (unsigned k = 0; k < depth_; ++k) {
        bool bit = levels_[k].access(i);
        value = (value << 1) | (bit ? 1u : 0u);
        i = bit ? zeros_[k] + levels_[k].rank1(i) : levels_[k].rank0(i);
    }
    return value;
}

size_t DynSequence::rank(uint64_t sym, size_t i) const {
    if (i > n_) {
        throw std::invalid_argument("DynSequence::rank: position out of range");
    }
    if (sym >= alphabet_) {
        throw std::invalid_argument("DynSequence::rank: symbol out of alphabet");
    }
    size_t b = 0;
    for (unsigned k = 0; k < depth_; ++k) {
        bool bit = (sym >> (depth_ - 1 - k)) & 1u;
        if (bit) {
            b = zeros_[k] + levels_[k].rank1(b);
            i = zeros_[k] + levels_[k].rank1(i);
        } else {
            b = levels_[k].rank0(b);
            i = levels_[k].rank0(i);
        }
    }
    return i - b;
}

size_t DynSequence::select(uint64_t sym, size_t k) const {
    if (sym >= alphabet_) {
        throw std::invalid_argument("DynSequence::select: symbol out of alphabet");
    }
    if (k == 0 || k > rank(sym, n_)) {
        throw std::invalid_argument("DynSequence::select: rank out of range");
    }
    size_t b = 0;
    for (unsigned lvl = 0; lvl < depth_; ++lvl) {
        bool bit = (sym >> (depth_ - 1 - lvl)) & 1u;
        b = bit ? zeros_[lvl] + levels_[lvl].rank1(b) : levels_[lvl].rank0(b);
    }
    return locate(sym, b + k - 1);
}

size_t DynSequence::locate(uint64_t value, size_t bottom_index) const {
    size_t i = bottom_index;
    for (unsigned k = depth_; k-- > 0;) {
        bool bit = (value >> (depth_ - 1 - k)) & 1u;
        i = bit ? levels_[k].select(true, i - zeros_[k] + 1) : levels_[k].select(false, i + 1);
    }
    return i;
}

std::optional<DynSequence::Hit> DynSequence::extreme(Frame frame, bool want_max) const {
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

std::optional<DynSequence::Hit> DynSequence::range_pred(size_t b, size_t e, uint64_t v) const {
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

std::optional<DynSequence::Hit> DynSequence::range_succ(size_t b, size_t e, uint64_t v) const {
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

} // namespace holz
