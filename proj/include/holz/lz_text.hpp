#pragma once

#include "holz/text.hpp"

namespace holz {

// Greedy longest-match factorization with textual offsets; the source of each
// factor is picked from the NSV/PSV candidates in suffix-array order (the
// classic linear-time rule). LCE ties go to the larger source position.
Parsing greedy_parse_nsvpsv(const Text& text);

// Same factor boundaries, but each factor copies from the rightmost
// admissible source, so every offset is minimal for its (position, length).
Parsing greedy_parse_rightmost(const Text& text);

// Left-to-right reconstruction of a textual-offset parsing. Throws
// DecodeError on offsets that reach before the virtual prefix.
Text decode_text(const Parsing& parsing, uint32_t sigma);

enum class OracleTie {
    rightmost, // largest source start among the longest matches
    any,       // arbitrary longest match; boundaries only
};

// Brute-force greedy parser: at each position scan every earlier start for
// the longest match. Quadratic; for tests.
Parsing oracle_greedy_parse(const Text& text, OracleTie tie);

} // namespace holz
