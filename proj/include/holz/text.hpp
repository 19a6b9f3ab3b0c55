#pragma once

#include <cstdint>
#include <vector>

namespace holz {

// A text body over a mapped alphabet [0..sigma-1].
//
// Every parser works on the logical text T', which prepends one copy of each
// alphabet symbol in decreasing order (sigma-1, ..., 1, 0) before the body.
// The prepended symbols guarantee that every body position has at least a
// length-1 match starting earlier, so factors always have length >= 1 and
// never start inside the prefix itself.
//
// Positions: the body is 1-based in the parsing logic (p = 1 is the first
// body symbol); logical position p lives at array index sigma + p - 1 of
// full_text(). The virtual symbols occupy array indices [0..sigma).
struct Text {
    std::vector<uint32_t> symbols;     // body, each value < sigma
    uint32_t sigma = 0;                // declared alphabet size
    std::vector<uint8_t> alphabet_map; // original byte per symbol; may be empty

    size_t n() const { return symbols.size(); }
};

// T' = virtual alphabet prefix + body, as one array.
inline std::vector<uint32_t> full_text(const Text& text) {
    std::vector<uint32_t> full;
    full.reserve(text.sigma + text.symbols.size());
    for (uint32_t c = text.sigma; c-- > 0;) {
        full.push_back(c);
    }
    full.insert(full.end(), text.symbols.begin(), text.symbols.end());
    return full;
}

// Array index of logical body position p (1-based).
inline size_t array_pos(const Text& text, uint64_t p) { return text.sigma + p - 1; }

enum class Semantics {
    textual, // off = distance between factor start and source start, always > 0
    colex,   // off = signed co-lexicographic rank distance between prefixes
};

// One parsed factor. Textual offsets are positive; colex offsets are signed
// and nonzero either way.
struct Factor {
    int64_t off = 0;
    int64_t len = 0;

    bool operator==(const Factor&) const = default;
};

struct Parsing {
    std::vector<Factor> factors;
    Semantics semantics = Semantics::textual;

    size_t z() const { return factors.size(); }
};

} // namespace holz
