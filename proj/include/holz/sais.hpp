#pragma once

#include <cstdint>
#include <vector>

namespace holz {

// Suffix array of `seq` (values < sigma) by induced sorting, linear time.
// End-of-string sorts smallest: the result is the plain suffix array of the
// sequence, one entry per position, no sentinel entry included.
std::vector<uint32_t> suffix_array(const std::vector<uint32_t>& seq, uint32_t sigma);

} // namespace holz
