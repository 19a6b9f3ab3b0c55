#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace holz {

// Raised when a bit stream ends inside a codeword or holds an invalid code.
struct DecodeError : std::runtime_error {
    explicit DecodeError(const std::string& what) : std::runtime_error(what) {}
};

// Growable bit sequence with MSB-first packing and a separate read cursor.
// Bits beyond bit_size() in the last byte are kept zero, so bytes() can be
// written to disk as-is.
class BitStream {
  public:
    BitStream() = default;

    static BitStream from_bytes(std::vector<uint8_t> bytes, size_t bit_len);

    void put_bit(bool bit);
    // Appends the low `width` bits of `value`, most significant first.
    void put_bits(uint64_t value, unsigned width);

    bool get_bit();
    uint64_t get_bits(unsigned width);

    size_t bit_size() const { return bit_len_; }
    size_t cursor() const { return cursor_; }
    void seek(size_t bit_pos);
    size_t bits_left() const { return bit_len_ - cursor_; }

    const std::vector<uint8_t>& bytes() const { return bytes_; }

  private:
    std::vector<uint8_t> bytes_;
    size_t bit_len_ = 0;
    size_t cursor_ = 0;
};

enum class CodeKind {
    gamma,
    delta,
    binary_length, // cost model only: |enc(x)| = ceil(log2(x+1)); no bit emission
};

inline bool code_decodable(CodeKind kind) { return kind != CodeKind::binary_length; }

inline unsigned floor_log2(uint64_t x) { return std::bit_width(x) - 1; }

void gamma_encode(uint64_t x, BitStream& out);
uint64_t gamma_decode(BitStream& in);
void delta_encode(uint64_t x, BitStream& out);
uint64_t delta_decode(BitStream& in);

void code_encode(CodeKind kind, uint64_t x, BitStream& out);
uint64_t code_decode(CodeKind kind, BitStream& in);

// Length in bits of enc(x) under the given code; valid for all kinds.
unsigned code_len(CodeKind kind, uint64_t x);

// Sign bit (0 = positive) followed by enc(|off|).
void signed_encode(int64_t off, CodeKind kind, BitStream& out);
int64_t signed_decode(CodeKind kind, BitStream& in);

// Maximal run of magnitudes sharing one code length.
struct CostClass {
    uint64_t lo;
    uint64_t hi;
    unsigned bits;
};

// Partition of [1..max_mag] into maximal equal-length runs, ascending.
std::vector<CostClass> cost_classes(CodeKind kind, uint64_t max_mag);

} // namespace holz
