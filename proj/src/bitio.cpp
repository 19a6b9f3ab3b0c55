#include "holz/bitio.hpp"

namespace holz {

BitStream BitStream::from_bytes(std::vector<uint8_t> bytes, size_t bit_len) {
    if (bit_len > bytes.size() * 8) {
        throw std::invalid_argument("BitStream: bit_len exceeds byte buffer");
    }
    BitStream s;
    s.bytes_ = std::move(bytes);
    s.bit_len_ = bit_len;
    return s;
}

void BitStream::put_bit(bool bit) {
    if (bit_len_ % 8 == 0) {
        bytes_.push_back(0);
    }
    if (bit) {
        bytes_.back() |= static_cast<uint8_t>(0x80u >> (bit_len_ % 8));
    }
    ++bit_len_;
}

void BitStream::put_bits(uint64_t value, unsigned width) {
    for (unsigned i = width; i-- > 0;) {
        put_bit((value >> i) & 1u);
    }
}

bool BitStream::get_bit() {
    if (cursor_ >= bit_len_) {
        throw DecodeError("bit stream exhausted");
    }
    bool bit = (bytes_[cursor_ / 8] >> (7 - cursor_ % 8)) & 1u;
    ++cursor_;
    return bit;
}

uint64_t BitStream::get_bits(unsigned width) {
    uint64_t value = 0;
    for (unsigned i = 0; i < width; ++i) {
        value = (value << 1) | (get_bit() ? 1u : 0u);
    }
    return value;
}

void BitStream::seek(size_t bit_pos) {
    if (bit_pos > bit_len_) {
        throw std::invalid_argument("BitStream::seek past end");
    }
    cursor_ = bit_pos;
}

void gamma_encode(uint64_t x, BitStream& out) {
    if (x == 0) {
        throw std::invalid_argument("gamma_encode: x must be >= 1");
    }
    unsigned k = floor_log2(x);
    for (unsigned i = 0; i < k; ++i) {
        out.put_bit(false);
    }
    out.put_bits(x, k + 1);
}

uint64_t gamma_decode(BitStream& in) {
    unsigned k = 0;
    while (!in.get_bit()) {
        if (++k > 63) {
            throw DecodeError("gamma_decode: runaway zero prefix");
        }
    }
    // The consumed 1-bit is the most significant bit of x.
    return (uint64_t{1} << k) | in.get_bits(k);
}

void delta_encode(uint64_t x, BitStream& out) {
    if (x == 0) {
        throw std::invalid_argument("delta_encode: x must be >= 1");
    }
    unsigned k = floor_log2(x);
    gamma_encode(k + 1, out);
    out.put_bits(x, k); // low k bits; the leading 1 is implied by the length
}

uint64_t delta_decode(BitStream& in) {
    uint64_t len = gamma_decode(in);
    if (len > 64) {
        throw DecodeError("delta_decode: length field out of range");
    }
    unsigned k = static_cast<unsigned>(len - 1);
    return (uint64_t{1} << k) | in.get_bits(k);
}

void code_encode(CodeKind kind, uint64_t x, BitStream& out) {
    switch (kind) {
        case CodeKind::gamma: gamma_encode(x, out); return;
        case CodeKind::delta: delta_encode(x, out); return;
        case CodeKind::binary_length: break;
    }
    throw std::invalid_argument("code_encode: binary_length is a cost model, not a code");
}

uint64_t code_decode(CodeKind kind, BitStream& in) {
    switch (kind) {
        case CodeKind::gamma: return gamma_decode(in);
        case CodeKind::delta: return delta_decode(in);
        case CodeKind::binary_length: break;
    }
    throw std::invalid_argument("code_decode: binary_length is a cost model, not a code");
}

unsigned code_len(CodeKind kind, uint64_t x) {
    if (x == 0) {
        throw std::invalid_argument("code_len: x must be >= 1");
    }
    unsigned k = floor_log2(x);
    switch (kind) {
        case CodeKind::gamma: return 2 * k + 1;
        case CodeKind::delta: return k + 2 * floor_log2(k + 1) + 1;
        case CodeKind::binary_length: return k + 1; // = ceil(log2(x+1)) for x >= 1
    }
    throw std::invalid_argument("code_len: unknown code kind");
}

void signed_encode(int64_t off, CodeKind kind, BitStream& out) {
    if (off == 0) {
        throw std::invalid_argument("signed_encode: offset must be nonzero");
    }
    out.put_bit(off < 0);
    code_encode(kind, off < 0 ? static_cast<uint64_t>(-off) : static_cast<uint64_t>(off), out);
}

int64_t signed_decode(CodeKind kind, BitStream& in) {
    bool negative = in.get_bit();
    uint64_t mag = code_decode(kind, in);
    if (mag > static_cast<uint64_t>(INT64_MAX)) {
        throw DecodeError("signed_decode: magnitude overflow");
    }
    auto value = static_cast<int64_t>(mag);
    return negative ? -value : value;
}

std::vector<CostClass> cost_classes(CodeKind kind, uint64_t max_mag) {
    if (max_mag == 0) {
        throw std::invalid_argument("cost_classes: max_mag must be >= 1");
    }
    std::vector<CostClass> classes;
    // Any magnitude in a dyadic range [2^k .. 2^{k+1}-1] shares one code
    // length for all three kinds; adjacent ranges are merged if a kind ever
    // priced them equally.
    for (uint64_t lo = 1; lo <= max_mag;) {
        uint64_t hi = std::min(max_mag, lo * 2 - 1);
        unsigned bits = code_len(kind, lo);
        if (!classes.empty() && classes.back().bits == bits) {
            classes.back().hi = hi;
        } else {
            classes.push_back({lo, hi, bits});
        }
        if (hi == UINT64_MAX) break;
        lo = hi + 1;
    }
    return classes;
}

} // namespace holz
