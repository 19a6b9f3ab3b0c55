#include "holz/container.hpp"

#include <cstdlib>
#include <stdexcept>

#include "holz/bitopt.hpp"
#include "holz/holz.hpp"
#include "holz/lz_text.hpp"

namespace holz {

namespace {

constexpr uint8_t kEscape = 254;
constexpr uint8_t kVersion = 1;
constexpr uint8_t kFlagZeroEscape = 1;

void put_u16le(std::vector<uint8_t>& out, uint16_t value) {
    out.push_back(static_cast<uint8_t>(value));
    out.push_back(static_cast<uint8_t>(value >> 8));
}

void put_u64le(std::vector<uint8_t>& out, uint64_t value) {
    for (int shift = 0; shift < 64; shift += 8) {
        out.push_back(static_cast<uint8_t>(value >> shift));
    }
}

class ByteReader {
  public:
    explicit ByteReader(const std::vector<uint8_t>& bytes) : bytes_(bytes) {}

    uint8_t u8() {
        need(1);
        return bytes_[pos_++];
    }

    uint16_t u16le() {
        need(2);
        const uint16_t value =
            static_cast<uint16_t>(bytes_[pos_] | (bytes_[pos_ + 1] << 8));
        pos_ += 2;
        return value;
    }

    uint64_t u64le() {
        need(8);
        uint64_t value = 0;
        for (int i = 0; i < 8; ++i) {
            value |= static_cast<uint64_t>(bytes_[pos_ + i]) << (8 * i);
        }
        pos_ += 8;
        return value;
    }

    std::vector<uint8_t> take(size_t count) {
        need(count);
        std::vector<uint8_t> out(bytes_.begin() + pos_, bytes_.begin() + pos_ + count);
        pos_ += count;
        return out;
    }

    std::vector<uint8_t> rest() { return take(bytes_.size() - pos_); }

  private:
    void need(size_t count) {
        if (bytes_.size() - pos_ < count) {
            throw DecodeError("container: truncated header");
        }
    }

    const std::vector<uint8_t>& bytes_;
    size_t pos_ = 0;
};

} // namespace

const char* method_name(Method method) {
    switch (method) {
        case Method::lz_nsvpsv: return "lz-nsvpsv";
        case Method::lz_rightmost: return "lz-rightmost";
        case Method::lz_opt: return "lz-opt";
        case Method::holz: return "holz";
        case Method::holz_opt: return "holz-opt";
    }
    throw std::invalid_argument("method_name: unknown method");
}

std::vector<uint8_t> escape_zeros(const std::vector<uint8_t>& raw) {
    std::vector<uint8_t> out;
    out.reserve(raw.size());
    for (const uint8_t b : raw) {
        if (b == 0) {
            out.push_back(kEscape);
            out.push_back(1);
        } else if (b == kEscape) {
            out.push_back(kEscape);
            out.push_back(kEscape);
        } else {
            out.push_back(b);
        }
    }
    return out;
}

std::vector<uint8_t> unescape_zeros(const std::vector<uint8_t>& escaped) {
    std::vector<uint8_t> out;
    out.reserve(escaped.size());
    for (size_t i = 0; i < escaped.size(); ++i) {
        if (escaped[i] != kEscape) {
            out.push_back(escaped[i]);
            continue;
        }
        if (i + 1 == escaped.size()) {
            throw DecodeError("unescape: dangling escape byte");
        }
        const uint8_t next = escaped[++i];
        if (next == 1) {
            out.push_back(0);
        } else if (next == kEscape) {
            out.push_back(kEscape);
        } else {
            throw DecodeError("unescape: invalid escape pair");
        }
    }
    return out;
}

Text text_from_bytes(const std::vector<uint8_t>& body) {
    bool seen[256] = {};
    for (const uint8_t b : body) {
        seen[b] = true;
    }
    Text text;
    uint32_t to_symbol[256] = {};
    for (int b = 0; b < 256; ++b) {
        if (seen[b]) {
            to_symbol[b] = text.sigma++;
            text.alphabet_map.push_back(static_cast<uint8_t>(b));
        }
    }
    text.symbols.reserve(body.size());
    for (const uint8_t b : body) {
        text.symbols.push_back(to_symbol[b]);
    }
    return text;
}

std::vector<uint8_t> bytes_from_text(const Text& text) {
    if (text.alphabet_map.size() != text.sigma) {
        throw std::invalid_argument("bytes_from_text: missing alphabet map");
    }
    std::vector<uint8_t> out;
    out.reserve(text.n());
    for (const uint32_t c : text.symbols) {
        out.push_back(text.alphabet_map[c]);
    }
    return out;
}

CompressResult compress(const std::vector<uint8_t>& raw, Method method, CodeKind code,
                        bool escape) {
    if (!code_decodable(code)) {
        throw std::invalid_argument("compress: code cannot be serialized");
    }
    const std::vector<uint8_t> body = escape ? escape_zeros(raw) : raw;
    const Text text = text_from_bytes(body);

    Parsing parsing;
    switch (method) {
        case Method::lz_nsvpsv: parsing = greedy_parse_nsvpsv(text); break;
        case Method::lz_rightmost: parsing = greedy_parse_rightmost(text); break;
        case Method::lz_opt: parsing = parse_bitopt_text(text, code); break;
        case Method::holz: parsing = holz_parse(text); break;
        case Method::holz_opt: parsing = parse_bitopt_colex(text, code); break;
        default: throw std::invalid_argument("compress: unknown method");
    }
    const bool with_sign = parsing.semantics == Semantics::colex;

    CompressResult result;
    result.z = parsing.z();

    std::vector<uint8_t> out;
    out.insert(out.end(), {'H', 'O', 'L', 'Z'});
    out.push_back(kVersion);
    out.push_back(static_cast<uint8_t>(method));
    out.push_back(code == CodeKind::delta ? 1 : 0);
    out.push_back(escape ? kFlagZeroEscape : 0);
    put_u16le(out, static_cast<uint16_t>(text.sigma));
    out.insert(out.end(), text.alphabet_map.begin(), text.alphabet_map.end());
    put_u64le(out, text.n());
    put_u64le(out, parsing.z());
    result.header_bytes = out.size();

    BitStream payload;
    for (const Factor& factor : parsing.factors) {
        const uint64_t mag = static_cast<uint64_t>(std::abs(factor.off));
        if (with_sign) {
            payload.put_bit(factor.off < 0);
            ++result.sign_bits;
        }
        code_encode(code, mag, payload);
        code_encode(code, static_cast<uint64_t>(factor.len), payload);
        result.offset_bits += code_len(code, mag);
        result.length_bits += code_len(code, static_cast<uint64_t>(factor.len));
    }
    out.insert(out.end(), payload.bytes().begin(), payload.bytes().end());

    result.bytes = std::move(out);
    return result;
}

std::vector<uint8_t> decompress(const std::vector<uint8_t>& file) {
    ByteReader reader(file);
    const std::vector<uint8_t> magic = reader.take(4);
    if (magic != std::vector<uint8_t>{'H', 'O', 'L', 'Z'}) {
        throw DecodeError("container: bad magic");
    }
    if (reader.u8() != kVersion) {
        throw DecodeError("container: unsupported version");
    }
    const uint8_t method_byte = reader.u8();
    if (method_byte > static_cast<uint8_t>(Method::holz_opt)) {
        throw DecodeError("container: unknown method");
    }
    const uint8_t code_byte = reader.u8();
    if (code_byte > 1) {
        throw DecodeError("container: unknown code");
    }
    const CodeKind code = code_byte == 1 ? CodeKind::delta : CodeKind::gamma;
    const uint8_t flags = reader.u8();
    if (flags & ~kFlagZeroEscape) {
        throw DecodeError("container: unknown flags");
    }
    const uint16_t sigma = reader.u16le();
    const std::vector<uint8_t> alphabet = reader.take(sigma);
    for (size_t i = 1; i < alphabet.size(); ++i) {
        if (alphabet[i - 1] >= alphabet[i]) {
            throw DecodeError("container: alphabet not ascending");
        }
    }
    const uint64_t n = reader.u64le();
    const uint64_t z = reader.u64le();
    if (sigma == 0 && n != 0) {
        throw DecodeError("container: body without alphabet");
    }

    const std::vector<uint8_t> payload_bytes = reader.rest();
    BitStream payload = BitStream::from_bytes(payload_bytes, payload_bytes.size() * 8);
    const bool with_sign = method_byte >= static_cast<uint8_t>(Method::holz);

    Parsing parsing;
    parsing.semantics = with_sign ? Semantics::colex : Semantics::textual;
    uint64_t total_len = 0;
    for (uint64_t i = 0; i < z; ++i) {
        const int64_t off = with_sign ? signed_decode(code, payload)
                                      : static_cast<int64_t>(code_decode(code, payload));
        const uint64_t len = code_decode(code, payload);
        if (len > n - total_len) {
            throw DecodeError("container: factor lengths exceed header n");
        }
        total_len += len;
        parsing.factors.push_back({off, static_cast<int64_t>(len)});
    }
    if (total_len != n) {
        throw DecodeError("container: factor lengths disagree with header n");
    }
    if (payload.bits_left() >= 8) {
        throw DecodeError("container: trailing bytes after payload");
    }
    while (payload.bits_left() > 0) {
        if (payload.get_bit()) {
            throw DecodeError("container: nonzero padding");
        }
    }

    const Text text = with_sign ? holz_decode(parsing, sigma) : decode_text(parsing, sigma);
    std::vector<uint8_t> body;
    body.reserve(text.n());
    for (const uint32_t c : text.symbols) {
        body.push_back(alphabet[c]);
    }
    return (flags & kFlagZeroEscape) ? unescape_zeros(body) : body;
}

} // namespace holz
