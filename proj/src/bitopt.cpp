#include "holz/bitopt.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace holz {

namespace {

constexpr uint64_t kInf = std::numeric_limits<uint64_t>::max();

// A class-best candidate before length expansion: the longest match reachable
// at some offset magnitude, with the concrete offset that realizes it.
struct Seed {
    int64_t off = 0;
    uint64_t len = 0;
};

// Expands each seed over the length cost classes (a match of length L yields
// a valid factor of any length <= L at the same offset) and keeps the
// (bits, len) Pareto frontier: ascending bits, strictly increasing length.
std::vector<Arc> expand_and_filter(const std::vector<Seed>& seeds, const CostModel& cost,
                                   uint64_t max_len) {
    std::vector<Arc> raw;
    const std::vector<CostClass> len_classes = cost_classes(cost.code, max_len);
    for (const Seed& seed : seeds) {
        const uint64_t off_bits =
            code_len(cost.code, static_cast<uint64_t>(std::abs(seed.off))) +
            (cost.with_sign ? 1 : 0);
        for (const CostClass& cls : len_classes) {
            if (cls.lo > seed.len) {
                break;
            }
            const uint64_t len = std::min<uint64_t>(seed.len, cls.hi);
            raw.push_back(Arc{seed.off, static_cast<int64_t>(len), off_bits + cls.bits});
        }
    }
    std::sort(raw.begin(), raw.end(), [](const Arc& x, const Arc& y) {
        if (x.bits != y.bits) return x.bits < y.bits;
        if (x.len != y.len) return x.len > y.len;
        if (std::abs(x.off) != std::abs(y.off)) return std::abs(x.off) < std::abs(y.off);
        return x.off > y.off;
    });
    std::vector<Arc> arcs;
    int64_t longest = 0;
    for (const Arc& arc : raw) {
        if (arc.len > longest) {
            arcs.push_back(arc);
            longest = arc.len;
        }
    }
    return arcs;
}

} // namespace

TextArcGen::TextArcGen(const Text& text) : n_(text.n()), sigma_(text.sigma) {
    idx_ = SuffixIndex::build(full_text(text), text.sigma, true);
    const size_t total = idx_.size() - 1;
    std::vector<uint64_t> ranks(total);
    for (size_t i = 0; i < total; ++i) {
        ranks[i] = idx_.isa()[i];
    }
    isa_by_pos_ = StaticWaveletMatrix(ranks);
}

std::vector<Arc> TextArcGen::arcs(const CostModel& cost, uint64_t p) const {
    if (p < 1 || p > n_) {
        throw std::invalid_argument("TextArcGen::arcs: position out of range");
    }
    const size_t a = sigma_ + static_cast<size_t>(p) - 1;
    const size_t total = idx_.size() - 1;
    const uint64_t v = idx_.isa()[a];

    std::vector<Seed> seeds;
    uint64_t running = 0;
    for (const CostClass& cls : cost_classes(cost.code, a)) {
        const size_t lo = a > cls.hi ? a - static_cast<size_t>(cls.hi) : 0;
        const size_t hi = a - static_cast<size_t>(cls.lo);
        uint64_t best_len = 0;
        size_t best_src = 0;
        for (const auto& hit : {wt_range_pred(isa_by_pos_, lo, hi, v),
                                wt_range_succ(isa_by_pos_, lo, hi, v)}) {
            if (!hit) {
                continue;
            }
            const uint64_t len = idx_.lce(hit->index, a);
            if (len > best_len || (len == best_len && hit->index > best_src)) {
                best_len = len;
                best_src = hit->index;
            }
        }
        if (best_len > running) {
            seeds.push_back(Seed{static_cast<int64_t>(a - best_src), best_len});
            running = best_len;
        }
    }
    return expand_and_filter(seeds, cost, total - a);
}

ColexArcGen::ColexArcGen(const Text& text)
    : full_(full_text(text)),
      idx_(SuffixIndex::build(full_, text.sigma, true)),
      bwt_(text.sigma),
      dywa_(full_.size() + 1) {
    // Pair each virtual-prefix row with the rank of the suffix it precedes.
    // Stepping fl() from the $ row visits the prefixes in decreasing length.
    std::vector<std::pair<size_t, uint64_t>> init;
    size_t row = bwt_.dollar_row();
    for (size_t length = text.sigma;; --length) {
        init.emplace_back(row, idx_.isa()[length]);
        if (length == 0) {
            break;
        }
        row = bwt_.fl(row);
    }
    std::sort(init.begin(), init.end());
    for (const auto& [r, rank] : init) {
        dywa_.insert(dywa_.size(), rank);
        (void)r;
    }
}

void ColexArcGen::advance() {
    const size_t a = bwt_.sigma() + static_cast<size_t>(p_) - 1;
    if (a >= full_.size()) {
        throw std::logic_error("ColexArcGen::advance: past the end of the text");
    }
    const size_t e = bwt_.extend(full_[a]);
    dywa_.insert(e, idx_.isa()[a + 1]);
    ++p_;
}

std::vector<Arc> ColexArcGen::arcs(const CostModel& cost, uint64_t p) const {
    if (p != p_) {
        throw std::logic_error("ColexArcGen::arcs: generator not synchronized to p");
    }
    const size_t a = bwt_.sigma() + static_cast<size_t>(p) - 1;
    if (a >= full_.size()) {
        throw std::invalid_argument("ColexArcGen::arcs: position out of range");
    }
    const size_t rows = bwt_.rows();
    const size_t dollar = bwt_.dollar_row();
    const uint64_t v = idx_.isa()[a];

    auto match_len = [&](uint64_t rank) { return idx_.lce(idx_.sa()[rank], a); };

    std::vector<Seed> seeds;

    // Rows below the $ row: positive offsets |off| = dollar - row. The side's
    // longest match bounds how far out a candidate can still be useful; past
    // it every row is both farther and no longer.
    if (dollar >= 1) {
        uint64_t side_len = 0;
        size_t side_row = 0;
        for (const auto& hit :
             {dywa_.range_pred(0, dollar, v), dywa_.range_succ(0, dollar, v)}) {
            if (!hit) {
                continue;
            }
            const uint64_t len = match_len(hit->value);
            if (len > side_len || (len == side_len && hit->index > side_row)) {
                side_len = len;
                side_row = hit->index;
            }
        }
        if (side_len >= 1) {
            const uint64_t off_max = dollar - side_row;
            uint64_t running = 0;
            for (const CostClass& cls : cost_classes(cost.code, off_max)) {
                const size_t lo = dollar - static_cast<size_t>(std::min<uint64_t>(cls.hi, off_max));
                const size_t hi = dollar - static_cast<size_t>(cls.lo);
                uint64_t best_len = 0;
                size_t best_row = 0;
                for (const auto& hit : {dywa_.range_pred(lo, hi + 1, v),
                                        dywa_.range_succ(lo, hi + 1, v)}) {
                    if (!hit) {
                        continue;
                    }
                    const uint64_t len = match_len(hit->value);
                    if (len > best_len || (len == best_len && hit->index > best_row)) {
                        best_len = len;
                        best_row = hit->index;
                    }
                }
                if (best_len > running) {
                    seeds.push_back(Seed{static_cast<int64_t>(dollar - best_row), best_len});
                    running = best_len;
                }
            }
        }
    }

    // Rows above the $ row: negative offsets |off| = row - dollar.
    if (dollar + 1 < rows) {
        uint64_t side_len = 0;
        size_t side_row = rows;
        for (const auto& hit :
             {dywa_.range_pred(dollar + 1, rows, v), dywa_.range_succ(dollar + 1, rows, v)}) {
            if (!hit) {
                continue;
            }
            const uint64_t len = match_len(hit->value);
            if (len > side_len || (len == side_len && hit->index < side_row)) {
                side_len = len;
                side_row = hit->index;
            }
        }
        if (side_len >= 1) {
            const uint64_t off_max = side_row - dollar;
            uint64_t running = 0;
            for (const CostClass& cls : cost_classes(cost.code, off_max)) {
                const size_t lo = dollar + static_cast<size_t>(cls.lo);
                const size_t hi = dollar + static_cast<size_t>(std::min<uint64_t>(cls.hi, off_max));
                uint64_t best_len = 0;
                size_t best_row = rows;
                for (const auto& hit : {dywa_.range_pred(lo, hi + 1, v),
                                        dywa_.range_succ(lo, hi + 1, v)}) {
                    if (!hit) {
                        continue;
                    }
                    const uint64_t len = match_len(hit->value);
                    if (len > best_len || (len == best_len && hit->index < best_row)) {
                        best_len = len;
                        best_row = hit->index;
                    }
                }
                if (best_len > running) {
                    seeds.push_back(Seed{-static_cast<int64_t>(best_row - dollar), best_len});
                    running = best_len;
                }
            }
        }
    }

    return expand_and_filter(seeds, cost, full_.size() - a);
}

Parsing shortest_path(const std::vector<std::vector<Arc>>& arcs, Semantics semantics) {
    const size_t n = arcs.size();
    std::vector<uint64_t> dist(n + 2, kInf);
    std::vector<uint64_t> nfac(n + 2, kInf);
    dist[n + 1] = 0;
    nfac[n + 1] = 0;

    for (size_t p = n; p >= 1; --p) {
        for (const Arc& arc : arcs[p - 1]) {
            if (arc.len < 1 || p + static_cast<size_t>(arc.len) > n + 1) {
                continue;
            }
            const size_t q = p + static_cast<size_t>(arc.len);
            if (dist[q] == kInf) {
                continue;
            }
            const uint64_t bits = arc.bits + dist[q];
            const uint64_t factors = 1 + nfac[q];
            if (bits < dist[p] || (bits == dist[p] && factors < nfac[p])) {
                dist[p] = bits;
                nfac[p] = factors;
            }
        }
        if (dist[p] == kInf) {
            throw std::logic_error("shortest_path: position has no usable arc");
        }
    }

    Parsing parsing;
    parsing.semantics = semantics;
    size_t p = 1;
    while (p <= n) {
        const Arc* best = nullptr;
        for (const Arc& arc : arcs[p - 1]) {
            if (arc.len < 1 || p + static_cast<size_t>(arc.len) > n + 1) {
                continue;
            }
            const size_t q = p + static_cast<size_t>(arc.len);
            if (dist[q] == kInf || arc.bits + dist[q] != dist[p] || 1 + nfac[q] != nfac[p]) {
                continue;
            }
            if (!best || std::abs(arc.off) < std::abs(best->off) ||
                (std::abs(arc.off) == std::abs(best->off) &&
                 (arc.off > best->off || (arc.off == best->off && arc.len > best->len)))) {
                best = &arc;
            }
        }
        if (!best) {
            throw std::logic_error("shortest_path: no arc realizes the optimum");
        }
        parsing.factors.push_back(Factor{best->off, best->len});
        p += static_cast<size_t>(best->len);
    }
    return parsing;
}

Parsing parse_bitopt_text(const Text& text, CodeKind code) {
    Parsing parsing;
    parsing.semantics = Semantics::textual;
    if (text.n() == 0) {
        return parsing;
    }
    const TextArcGen gen(text);
    const CostModel cost{code, false};
    std::vector<std::vector<Arc>> arcs(text.n());
    for (uint64_t p = 1; p <= text.n(); ++p) {
        arcs[p - 1] = gen.arcs(cost, p);
    }
    return shortest_path(arcs, Semantics::textual);
}

Parsing parse_bitopt_colex(const Text& text, CodeKind code) {
    Parsing parsing;
    parsing.semantics = Semantics::colex;
    if (text.n() == 0) {
        return parsing;
    }
    ColexArcGen gen(text);
    const CostModel cost{code, true};
    std::vector<std::vector<Arc>> arcs(text.n());
    for (uint64_t p = 1; p <= text.n(); ++p) {
        arcs[p - 1] = gen.arcs(cost, p);
        if (p < text.n()) {
            gen.advance();
        }
    }
    return shortest_path(arcs, Semantics::colex);
}

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

} // namespace

OracleResult bitopt_oracle(const Text& text, CodeKind code, Semantics semantics) {
    const size_t n = text.n();
    OracleResult result;
    result.parsing.semantics = semantics;
    if (n == 0) {
        return result;
    }

    const std::vector<uint32_t> full = full_text(text);
    const size_t total = full.size();
    const SuffixIndex idx = SuffixIndex::build(full, text.sigma, true);

    // Colex ranks, restricted on the fly to the prefixes present per position.
    std::vector<size_t> global_rank;
    CountFenwick seen(total + 2);
    size_t inserted_through = 0;
    if (semantics == Semantics::colex) {
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
        global_rank.assign(total + 1, 0);
        for (size_t rank = 0; rank <= total; ++rank) {
            global_rank[by_rank[rank]] = rank;
        }
        seen.add(global_rank[0]);
    }

    // best[p][len]: cheapest admissible offset (smallest magnitude, positive
    // on ties) for a factor of that length at p; 0 marks no candidate.
    std::vector<std::vector<int64_t>> best(n + 1);
    for (size_t p = 1; p <= n; ++p) {
        const size_t a = text.sigma + p - 1;
        std::vector<int64_t> bo(total - a + 1, 0);
        if (semantics == Semantics::textual) {
            for (size_t q = 0; q < a; ++q) {
                const uint64_t m = idx.lce(q, a);
                for (uint64_t l = 1; l <= m; ++l) {
                    bo[l] = static_cast<int64_t>(a - q);
                }
            }
        } else {
            while (inserted_through < a) {
                ++inserted_through;
                seen.add(global_rank[inserted_through]);
            }
            const int64_t r = static_cast<int64_t>(seen.count_through(global_rank[a])) - 1;
            for (size_t q = 0; q < a; ++q) {
                const uint64_t m = idx.lce(q, a);
                if (m == 0) {
                    continue;
                }
                const int64_t t = static_cast<int64_t>(seen.count_through(global_rank[q])) - 1;
                const int64_t off = r - t;
                for (uint64_t l = 1; l <= m; ++l) {
                    if (bo[l] == 0 || std::abs(off) < std::abs(bo[l]) ||
                        (std::abs(off) == std::abs(bo[l]) && off > bo[l])) {
                        bo[l] = off;
                    }
                }
            }
        }
        best[p] = std::move(bo);
    }

    const unsigned sign_bits = semantics == Semantics::colex ? 1 : 0;
    std::vector<uint64_t> dist(n + 2, kInf);
    std::vector<uint64_t> nfac(n + 2, kInf);
    dist[n + 1] = 0;
    nfac[n + 1] = 0;
    for (size_t p = n; p >= 1; --p) {
        for (uint64_t l = 1; l < best[p].size(); ++l) {
            if (best[p][l] == 0 || p + l > n + 1) {
                continue;
            }
            const uint64_t bits =
                code_len(code, static_cast<uint64_t>(std::abs(best[p][l]))) +
                code_len(code, l) + sign_bits + dist[p + l];
            const uint64_t factors = 1 + nfac[p + l];
            if (bits < dist[p] || (bits == dist[p] && factors < nfac[p])) {
                dist[p] = bits;
                nfac[p] = factors;
            }
        }
    }

    size_t p = 1;
    while (p <= n) {
        const std::vector<int64_t>& bo = best[p];
        int64_t pick_off = 0;
        uint64_t pick_len = 0;
        for (uint64_t l = 1; l < bo.size(); ++l) {
            if (bo[l] == 0 || p + l > n + 1 || dist[p + l] == kInf) {
                continue;
            }
            const uint64_t bits = code_len(code, static_cast<uint64_t>(std::abs(bo[l]))) +
                                  code_len(code, l) + sign_bits + dist[p + l];
            if (bits != dist[p] || 1 + nfac[p + l] != nfac[p]) {
                continue;
            }
            if (pick_len == 0 || std::abs(bo[l]) < std::abs(pick_off) ||
                (std::abs(bo[l]) == std::abs(pick_off) &&
                 (bo[l] > pick_off || (bo[l] == pick_off && l > pick_len)))) {
                pick_off = bo[l];
                pick_len = l;
            }
        }
        result.parsing.factors.push_back(Factor{pick_off, static_cast<int64_t>(pick_len)});
        p += pick_len;
    }
    result.bits = dist[1];
    return result;
}

uint64_t parsing_bits(const Parsing& parsing, CodeKind code) {
    const unsigned sign_bits = parsing.semantics == Semantics::colex ? 1 : 0;
    uint64_t bits = 0;
    for (const Factor& f : parsing.factors) {
        bits += code_len(code, static_cast<uint64_t>(std::abs(f.off))) +
                code_len(code, static_cast<uint64_t>(f.len)) + sign_bits;
    }
    return bits;
}

} // namespace holz
