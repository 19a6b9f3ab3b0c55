#include "holz/holz.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "holz/bitio.hpp"
#include "holz/dynamic_bwt.hpp"

namespace holz {

namespace {

// Fenwick tree counting inserted values in [0..universe).
class CountFenwick {
public:
    explicit CountFenwick(size_t universe) : tree_(universe + 1, 0) {}

    void add(size_t value) {
        for (size_t i = value + 1; i < tree_.size(); i += i & (~i + 1)) {
            ++tree_[i];
        }
    }

    // Number of inserted values <= value.
    size_t count_through(size_t value) const {
        size_t sum = 0;
        for (size_t i = value + 1; i > 0; i -= i & (~i + 1)) {
            sum += tree_[i];
        }
        return sum;
    }

private:
    std::vector<uint64_t> tree_;
};

size_t fl_steps(const DynBWT& bwt, size_t row, int64_t steps) {
    for (int64_t k = 0; k < steps; ++k) {
        row = bwt.fl(row);
    }
    return row;
}

} // namespace

Parsing holz_parse(const Text& text) {
    const std::vector<uint32_t> full = full_text(text);
    const size_t total = full.size();

    Parsing parsing;
    parsing.semantics = Semantics::colex;
    if (text.n() == 0) {
        return parsing;
    }
    DynBWT bwt(text.sigma);
    InsertMarks marks;

    size_t a = text.sigma;
    while (a < total) {
        marks.clear();
        // Row of the prefix ending just before the factor; insertions shift it.
        size_t r_row = bwt.dollar_row();
        RowRange range = bwt.full_range();
        int64_t len = 0;

        while (a + static_cast<size_t>(len) < total) {
            const uint32_t c = full[a + static_cast<size_t>(len)];
            // Queried before extending, every matching row is a valid source:
            // the open prefix contributes no symbol yet, so it never counts.
            const auto next = bwt.backward_step(range, c);
            if (!next) {
                break;
            }
            const size_t e = bwt.extend(c);
            marks.record(e);
            if (r_row >= e) {
                ++r_row;
            }
            // The inserted row ends with the factor seen so far, so it joins
            // the matching block, which stays contiguous.
            range = RowRange{next->lo, next->hi + 1};
            ++len;
        }

        // The block holds every prefix ending with the factor: the $ row plus
        // at least one source. Its nearest block neighbours map back to the
        // rank-closest sources because stripping a shared suffix keeps order.
        const size_t dollar = bwt.dollar_row();
        std::optional<int64_t> d_pred;
        std::optional<int64_t> d_succ;
        if (dollar > range.lo) {
            const size_t t_row = fl_steps(bwt, dollar - 1, len);
            d_pred = static_cast<int64_t>(r_row - t_row) -
                     static_cast<int64_t>(marks.count_between(t_row, r_row));
        }
        if (dollar < range.hi) {
            const size_t t_row = fl_steps(bwt, dollar + 1, len);
            d_succ = static_cast<int64_t>(t_row - r_row) -
                     static_cast<int64_t>(marks.count_between(r_row, t_row));
        }

        int64_t off = 0;
        if (d_pred && (!d_succ || *d_pred <= *d_succ)) {
            off = *d_pred;
        } else {
            off = -*d_succ;
        }
        parsing.factors.push_back(Factor{off, len});
        a += static_cast<size_t>(len);
    }
    return parsing;
}

Parsing holz_oracle_parse(const Text& text) {
    const std::vector<uint32_t> full = full_text(text);
    const size_t total = full.size();

    // Colex order of all prefixes of T', identified by length. Comparing
    // backward from the end, with the shorter prefix ranking first, matches
    // the order the dynamic BWT maintains.
    std::vector<size_t> by_rank(total + 1);
    std::iota(by_rank.begin(), by_rank.end(), size_t{0});
    std::sort(by_rank.begin(), by_rank.end(), [&](size_t x, size_t y) {
        const size_t common = std::min(x, y);
        for (size_t k = 1; k <= common; ++k) {
            if (full[x - k] != full[y - k]) {
                return full[x - k] < full[y - k];
            }
        }
        return x < y;
    });
    std::vector<size_t> global_rank(total + 1);
    for (size_t rank = 0; rank <= total; ++rank) {
        global_rank[by_rank[rank]] = rank;
    }

    // Ranks restricted to the prefixes that exist when a factor starts.
    CountFenwick seen(total + 1);
    size_t inserted_through = 0; // lengths [0..inserted_through] are in
    seen.add(global_rank[0]);
    auto insert_through = [&](size_t length) {
        while (inserted_through < length) {
            ++inserted_through;
            seen.add(global_rank[inserted_through]);
        }
    };
    auto local_rank = [&](size_t length) {
        return seen.count_through(global_rank[length]) - 1;
    };

    Parsing parsing;
    parsing.semantics = Semantics::colex;

    size_t a = text.sigma;
    while (a < total) {
        insert_through(a);

        int64_t len = 0;
        for (size_t q = 0; q < a; ++q) {
            size_t m = 0;
            while (a + m < total && full[q + m] == full[a + m]) {
                ++m;
            }
            len = std::max(len, static_cast<int64_t>(m));
        }

        const int64_t r = static_cast<int64_t>(local_rank(a));
        std::optional<int64_t> best;
        for (size_t q = 0; q < a; ++q) {
            size_t m = 0;
            while (m < static_cast<size_t>(len) && full[q + m] == full[a + m]) {
                ++m;
            }
            if (m < static_cast<size_t>(len)) {
                continue;
            }
            const int64_t off = r - static_cast<int64_t>(local_rank(q));
            if (!best || std::abs(off) < std::abs(*best) ||
                (std::abs(off) == std::abs(*best) && off > *best)) {
                best = off;
            }
        }

        parsing.factors.push_back(Factor{*best, len});
        a += static_cast<size_t>(len);
    }
    return parsing;
}

Text holz_decode(const Parsing& parsing, uint32_t sigma) {
    if (parsing.semantics != Semantics::colex) {
        throw std::invalid_argument("holz_decode: parsing is not co-lexicographic");
    }
    if (parsing.factors.empty()) {
        Text text;
        text.sigma = sigma;
        return text;
    }
    DynBWT bwt(sigma);
    std::vector<uint32_t> out;

    for (const Factor& factor : parsing.factors) {
        if (factor.len < 1) {
            throw DecodeError("holz factor has nonpositive length");
        }
        if (factor.off == 0) {
            throw DecodeError("holz factor has zero offset");
        }
        const int64_t t_signed = static_cast<int64_t>(bwt.dollar_row()) - factor.off;
        if (t_signed < 0 || t_signed >= static_cast<int64_t>(bwt.rows())) {
            throw DecodeError("holz offset points outside the prefix table");
        }
        size_t t_row = static_cast<size_t>(t_signed);
        for (int64_t k = 0; k < factor.len; ++k) {
            if (t_row == bwt.dollar_row()) {
                throw DecodeError("holz source ran into the open prefix");
            }
            const uint32_t c = bwt.bwt_symbol(t_row);
            out.push_back(c);
            const size_t e = bwt.extend(c);
            if (t_row >= e) {
                ++t_row;
            }
            t_row = bwt.lf(t_row);
        }
    }
    return Text{std::move(out), sigma, {}};
}

} // namespace holz
