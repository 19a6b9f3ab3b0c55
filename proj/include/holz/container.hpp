#pragma once

#include <cstdint>
#include <vector>

#include "holz/bitio.hpp"
#include "holz/text.hpp"

namespace holz {

// Compression methods, numbered as stored in the file header.
enum class Method : uint8_t {
    lz_nsvpsv = 0,
    lz_rightmost = 1,
    lz_opt = 2,
    holz = 3,
    holz_opt = 4,
};

const char* method_name(Method method);

// 0x00 -> (254, 1), 254 -> (254, 254); other bytes pass through.
std::vector<uint8_t> escape_zeros(const std::vector<uint8_t>& raw);
// Inverse of escape_zeros. Throws DecodeError on a dangling or invalid escape.
std::vector<uint8_t> unescape_zeros(const std::vector<uint8_t>& escaped);

// Maps the distinct bytes of `body`, sorted ascending, onto [0..sigma-1].
Text text_from_bytes(const std::vector<uint8_t>& body);
// Maps symbols back through text.alphabet_map.
std::vector<uint8_t> bytes_from_text(const Text& text);

struct CompressResult {
    std::vector<uint8_t> bytes; // header + payload, ready to write
    uint64_t z = 0;
    uint64_t offset_bits = 0;
    uint64_t length_bits = 0;
    uint64_t sign_bits = 0;
    uint64_t header_bytes = 0;
};

// Serializes `raw` as a container file:
//   magic "HOLZ", version, method, code, flags, sigma (u16 LE),
//   alphabet bytes ascending, n (u64 LE, post-escape), z (u64 LE),
// then per factor [sign bit iff the method uses rank offsets] enc(|off|)
// enc(len), zero-padded to a whole byte.
CompressResult compress(const std::vector<uint8_t>& raw, Method method, CodeKind code,
                        bool escape);

// Inverts compress. Throws DecodeError on any malformed or truncated file.
std::vector<uint8_t> decompress(const std::vector<uint8_t>& file);

} // namespace holz
