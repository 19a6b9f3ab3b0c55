#include "holz/dynamic_bwt.hpp"

#include <bit>
#include <stdexcept>

namespace holz {

DynBWT::DynBWT(uint32_t sigma) : seq_(sigma == 0 ? 1 : sigma), sigma_(sigma) {
    if (sigma == 0) {
        throw std::invalid_argument("DynBWT: empty alphabet");
    }
    count_fen_.assign(sigma + size_t{1}, 0);
    for (uint32_t c = sigma; c-- > 0;) {
        extend(c);
    }
}

uint64_t DynBWT::cum_below(uint32_t c) const {
    uint64_t sum = 1; // the $ row
    for (size_t i = c; i > 0; i -= i & (0 - i)) {
        sum += count_fen_[i];
    }
    return sum;
}

size_t DynBWT::rank_bwt(uint32_t c, size_t row) const {
    return seq_.rank(c, row - (row > dollar_row_));
}

size_t DynBWT::extend(uint32_t c) {
    if (c >= sigma_) {
        throw std::invalid_argument("DynBWT::extend: symbol out of alphabet");
    }
    size_t d = dollar_row_;
    size_t e = cum_below(c) + seq_.rank(c, d);
    seq_.insert(d, c);
    for (size_t i = c + 1; i < count_fen_.size(); i += i & (0 - i)) {
        ++count_fen_[i];
    }
    dollar_row_ = e;
    return e;
}

std::optional<RowRange> DynBWT::backward_step(RowRange range, uint32_t c) const {
    if (range.lo > range.hi || range.hi >= rows()) {
        throw std::invalid_argument("DynBWT::backward_step: bad range");
    }
    if (c >= sigma_) {
        throw std::invalid_argument("DynBWT::backward_step: symbol out of alphabet");
    }
    size_t lo = cum_below(c) + rank_bwt(c, range.lo);
    size_t hi = cum_below(c) + rank_bwt(c, range.hi + 1);
    if (lo >= hi) {
        return std::nullopt;
    }
    return RowRange{lo, hi - 1};
}

uint32_t DynBWT::bwt_symbol(size_t row) const {
    if (row >= rows() || row == dollar_row_) {
        throw std::invalid_argument("DynBWT::bwt_symbol: no symbol at this row");
    }
    return static_cast<uint32_t>(seq_.access(row - (row > dollar_row_)));
}

size_t DynBWT::lf(size_t row) const {
    uint32_t c = bwt_symbol(row); // validates the row
    return cum_below(c) + rank_bwt(c, row);
}

size_t DynBWT::fl(size_t row) const {
    if (row == 0 || row >= rows()) {
        throw std::invalid_argument("DynBWT::fl: row has no preceding character");
    }
    // Find the symbol c whose F block contains `row`: the largest c with
    // cum_below(c) <= row, by descending the count Fenwick.
    size_t k = row; // 1-based rank among non-$ rows
    size_t c = 0;
    for (size_t step = std::bit_floor(count_fen_.size() - 1); step != 0; step >>= 1) {
        size_t next = c + step;
        if (next < count_fen_.size() && count_fen_[next] < k) {
            k -= count_fen_[next];
            c = next;
        }
    }
    size_t s = seq_.select(c, k);
    return s + (s >= dollar_row_);
}

void InsertMarks::record(size_t row) {
    for (size_t& m : rows_) {
        m += m >= row;
    }
    rows_.push_back(row);
}

size_t InsertMarks::count_between(size_t a, size_t b) const {
    if (a > b) {
        std::swap(a, b);
    }
    size_t cnt = 0;
    for (size_t m : rows_) {
        cnt += m > a && m < b;
    }
    return cnt;
}

} // namespace holz
