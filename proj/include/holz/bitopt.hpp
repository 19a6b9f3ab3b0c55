#pragma once

#include <cstdint>
#include <vector>

#include "holz/bitio.hpp"
#include "holz/dynamic_bwt.hpp"
#include "holz/dynamic_wavelet.hpp"
#include "holz/static_wavelet.hpp"
#include "holz/suffix_index.hpp"
#include "holz/text.hpp"

namespace holz {

// Prices a factor exactly as the serializer emits it: enc(|off|) enc(len),
// with one leading sign bit when offsets are signed (colex semantics).
struct CostModel {
    CodeKind code = CodeKind::delta;
    bool with_sign = false;

    uint64_t factor_bits(uint64_t off_mag, uint64_t len) const {
        return code_len(code, off_mag) + code_len(code, len) + (with_sign ? 1 : 0);
    }
};

// Candidate factor at a fixed position. `bits` is the exact serialized size
// of this (off, len) pair under the cost model that generated it.
struct Arc {
    int64_t off = 0;
    int64_t len = 0;
    uint64_t bits = 0;

    bool operator==(const Arc&) const = default;
};

// Generates candidate arcs with textual offsets. For each offset cost class
// the longest match is found by a range predecessor/successor query of
// isa[p] over a wavelet matrix of isa values indexed by text position; the
// surviving matches are expanded over the length cost classes and reduced to
// the (bits, len) Pareto frontier.
class TextArcGen {
  public:
    explicit TextArcGen(const Text& text);

    size_t n() const { return n_; }
    // Arcs at body position p (1-based), sorted by strictly increasing bits
    // and strictly increasing length.
    std::vector<Arc> arcs(const CostModel& cost, uint64_t p) const;

  private:
    size_t n_ = 0;
    uint32_t sigma_ = 0;
    SuffixIndex idx_;
    StaticWaveletMatrix isa_by_pos_;
};

// Generates candidate arcs with co-lexicographic offsets, advancing one body
// symbol at a time. Rows of the dynamic BWT are paired with the lex ranks of
// the suffixes that follow them; range predecessor/successor queries against
// the rank paired with the current position find, per offset class, the
// candidate with the longest match.
class ColexArcGen {
  public:
    explicit ColexArcGen(const Text& text);

    uint64_t pos() const { return p_; } // next unprocessed body position
    std::vector<Arc> arcs(const CostModel& cost, uint64_t p) const;
    void advance(); // index the symbol at pos()

  private:
    std::vector<uint32_t> full_;
    SuffixIndex idx_;
    DynBWT bwt_;
    DynSequence dywa_;
    uint64_t p_ = 1;
};

// Minimum-total-bits factorization over per-position candidate arcs;
// arcs[p-1] lists the candidates at body position p. Ties prefer fewer
// factors, then the smaller |off| at the earliest differing factor.
Parsing shortest_path(const std::vector<std::vector<Arc>>& arcs, Semantics semantics);

Parsing parse_bitopt_text(const Text& text, CodeKind code);
Parsing parse_bitopt_colex(const Text& text, CodeKind code);

// Exhaustive reference: dynamic program over every (position, length)
// candidate, each priced at its cheapest admissible offset. Quadratic to
// cubic; for tests on short texts.
struct OracleResult {
    uint64_t bits = 0;
    Parsing parsing;
};
OracleResult bitopt_oracle(const Text& text, CodeKind code, Semantics semantics);

// Serialized payload size of a parsing in bits (no header, no padding).
uint64_t parsing_bits(const Parsing& parsing, CodeKind code);

} // namespace holz
