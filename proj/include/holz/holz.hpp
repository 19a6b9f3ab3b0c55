#pragma once

#include "holz/text.hpp"

namespace holz {

// Greedy longest-match factorization with co-lexicographic offsets. Factor
// boundaries equal the textual greedy parse; the offset of a factor at
// position p is r - t, where r is the co-lex rank of the prefix ending at
// p-1 among all prefixes available when the factor starts, and t is the rank
// of the admissible source prefix closest to r. Exact-distance ties pick
// t < r, so the positive offset wins.
Parsing holz_parse(const Text& text);

// Literal implementation of the same definition: sorts the prefixes
// explicitly and scans all candidate sources. Quadratic-ish; for tests.
Parsing holz_oracle_parse(const Text& text);

// Reconstructs the body from a co-lexicographic parsing by replaying the
// encoder's dynamic BWT. Throws DecodeError on inconsistent input.
Text holz_decode(const Parsing& parsing, uint32_t sigma);

} // namespace holz
