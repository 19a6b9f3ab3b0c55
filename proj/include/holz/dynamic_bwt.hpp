#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "holz/dynamic_wavelet.hpp"

namespace holz {

// Inclusive row interval.
struct RowRange {
    size_t lo;
    size_t hi;

    size_t count() const { return hi - lo + 1; }
    bool contains(size_t row) const { return lo <= row && row <= hi; }
    bool operator==(const RowRange&) const = default;
};

// BWT of reverse(processed text) + terminator, extended one character at a
// time. Rows are the co-lexicographically ordered prefixes of the processed
// text, 0-based; the terminator $ sorts below every symbol, so row 0 is the
// empty prefix. dollar_row is the row of the full processed prefix — the one
// whose BWT symbol is $.
//
// Internally the BWT is stored without the $: seq_ holds the symbols only,
// and every row index is adjusted around dollar_row_.
class DynBWT {
  public:
    explicit DynBWT(uint32_t sigma); // indexes the virtual alphabet prefix

    uint32_t sigma() const { return sigma_; }
    size_t rows() const { return seq_.size() + 1; }
    size_t dollar_row() const { return dollar_row_; }
    RowRange full_range() const { return {0, rows() - 1}; }

    // Index one more character; returns the new dollar row. Rows >= the
    // returned value (in the old numbering) shift up by one.
    size_t extend(uint32_t c);

    // Rows whose prefix, within `range`, still ends with c; empty if none.
    std::optional<RowRange> backward_step(RowRange range, uint32_t c) const;

    bool is_dollar(size_t row) const { return row == dollar_row_; }
    uint32_t bwt_symbol(size_t row) const; // invalid at the dollar row

    // Row of prefix X -> row of prefix X·c where c is the symbol the text
    // continues with (= bwt_symbol(row)); invalid at the dollar row.
    size_t lf(size_t row) const;
    // Inverse of lf; invalid at row 0 (the empty prefix has no predecessor).
    size_t fl(size_t row) const;

  private:
    uint64_t cum_below(uint32_t c) const; // #rows sorting before symbol c's F block
    size_t rank_bwt(uint32_t c, size_t row) const; // occurrences of c in rows [0..row)

    DynSequence seq_;
    std::vector<uint64_t> count_fen_; // 1-indexed Fenwick over per-symbol counts
    size_t dollar_row_ = 0;
    uint32_t sigma_ = 0;
};

// Rows inserted while encoding the current factor, as a plain list that is
// shifted along with every new insertion.
class InsertMarks {
  public:
    void clear() { rows_.clear(); }
    size_t size() const { return rows_.size(); }
    const std::vector<size_t>& rows() const { return rows_; }

    // A row was inserted at `row`: shift existing marks, then mark it.
    void record(size_t row);

    // Marked rows strictly between min(a,b) and max(a,b).
    size_t count_between(size_t a, size_t b) const;

  private:
    std::vector<size_t> rows_;
};

} // namespace holz
