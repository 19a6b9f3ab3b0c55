#include "holz/lz_text.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "holz/bitio.hpp"
#include "holz/static_wavelet.hpp"
#include "holz/suffix_index.hpp"

namespace holz {

namespace {

size_t match_len(const std::vector<uint32_t>& full, size_t src, size_t pos) {
    size_t len = 0;
    while (pos + len < full.size() && full[src + len] == full[pos + len]) {
        ++len;
    }
    return len;
}

// NSV/PSV candidate with the longer direct-compare match; ties prefer the
// larger source position. Returns (source, length), length >= 1 thanks to the
// virtual alphabet prefix.
std::pair<size_t, size_t> best_candidate(const std::vector<uint32_t>& full,
                                         const SuffixIndex& idx, const PsvNsv& pn, size_t pos) {
    uint32_t row = idx.isa()[pos];
    size_t best_src = 0;
    size_t best_len = 0;
    for (uint32_t cand : {pn.psv[row], pn.nsv[row]}) {
        if (cand == PsvNsv::kNone) {
            continue;
        }
        size_t src = idx.sa()[cand];
        size_t len = match_len(full, src, pos);
        if (len > best_len || (len == best_len && src > best_src)) {
            best_src = src;
            best_len = len;
        }
    }
    return {best_src, best_len};
}

} // namespace

Parsing greedy_parse_nsvpsv(const Text& text) {
    Parsing parsing;
    parsing.semantics = Semantics::textual;
    std::vector<uint32_t> full = full_text(text);
    SuffixIndex idx = SuffixIndex::build(full, text.sigma, /*with_lce=*/false);
    PsvNsv pn = build_psv_nsv(idx);
    size_t pos = text.sigma;
    while (pos < full.size()) {
        auto [src, len] = best_candidate(full, idx, pn, pos);
        parsing.factors.push_back(
            {static_cast<int64_t>(pos - src), static_cast<int64_t>(len)});
        pos += len;
    }
    return parsing;
}

Parsing greedy_parse_rightmost(const Text& text) {
    Parsing parsing;
    parsing.semantics = Semantics::textual;
    std::vector<uint32_t> full = full_text(text);
    SuffixIndex idx = SuffixIndex::build(full, text.sigma);
    PsvNsv pn = build_psv_nsv(idx);
    StaticWaveletMatrix positions(
        std::vector<uint64_t>(idx.sa().begin(), idx.sa().end()));

    size_t pos = text.sigma;
    while (pos < full.size()) {
        size_t len = best_candidate(full, idx, pn, pos).second;
        uint32_t row = idx.isa()[pos];

        // SA interval of the factor string: all rows within lcp >= len of row.
        size_t lo = row;
        for (size_t step = std::bit_floor(lo + 1); step != 0; step >>= 1) {
            while (lo >= step && idx.lcp_min(lo - step + 1, row) >= len) {
                lo -= step;
            }
        }
        size_t hi = row;
        size_t last = idx.size() - 1;
        for (size_t step = std::bit_floor(last - hi + 1); step != 0; step >>= 1) {
            while (hi + step <= last && idx.lcp_min(row + 1, hi + step) >= len) {
                hi += step;
            }
        }

        auto hit = wt_range_pred(positions, lo, hi, pos);
        if (!hit) {
            throw std::logic_error("greedy_parse_rightmost: factor interval lost its source");
        }
        parsing.factors.push_back(
            {static_cast<int64_t>(pos - hit->value), static_cast<int64_t>(len)});
        pos += len;
    }
    return parsing;
}

Text decode_text(const Parsing& parsing, uint32_t sigma) {
    if (parsing.semantics != Semantics::textual) {
        throw std::invalid_argument("decode_text: parsing is not textual");
    }
    Text text;
    text.sigma = sigma;
    std::vector<uint32_t> full;
    for (uint32_t c = sigma; c-- > 0;) {
        full.push_back(c);
    }
    for (const Factor& f : parsing.factors) {
        if (f.len < 1 || f.off < 1 || static_cast<uint64_t>(f.off) > full.size()) {
            throw DecodeError("decode_text: factor reaches outside the known text");
        }
        size_t src = full.size() - static_cast<size_t>(f.off);
        for (int64_t k = 0; k < f.len; ++k) {
            full.push_back(full[src + k]);
        }
    }
    text.symbols.assign(full.begin() + sigma, full.end());
    return text;
}

Parsing oracle_greedy_parse(const Text& text, OracleTie tie) {
    Parsing parsing;
    parsing.semantics = Semantics::textual;
    std::vector<uint32_t> full = full_text(text);
    size_t pos = text.sigma;
    while (pos < full.size()) {
        size_t best_src = 0;
        size_t best_len = 0;
        for (size_t src = 0; src < pos; ++src) {
            size_t len = match_len(full, src, pos);
            bool better = len > best_len;
            if (tie == OracleTie::rightmost) {
                better = better || (len == best_len && len > 0 && src > best_src);
            }
            if (better) {
                best_src = src;
                best_len = len;
            }
        }
        parsing.factors.push_back(
            {static_cast<int64_t>(pos - best_src), static_cast<int64_t>(best_len)});
        pos += best_len;
    }
    return parsing;
}

} // namespace holz
