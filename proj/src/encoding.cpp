#include "lynbwt/encoding.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <string_view>

namespace lynbwt {

namespace {

constexpr char kHexDigits[] = "0123456789abcdef";

void push_hex(Bytes& out, Byte b) {
  out.push_back(static_cast<Byte>(kHexDigits[b >> 4]));
  out.push_back(static_cast<Byte>(kHexDigits[b & 0xF]));
}

int hex_value(Byte c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

Bytes parse_hex(std::span<const Byte> data) {
  Bytes raw;
  raw.reserve(data.size() / 2);
  int high = -1;
  for (Byte c : data) {
    if (c == '\n' || c == '\r' || c == ' ' || c == '\t') continue;
    const int v = hex_value(c);
    if (v < 0) throw std::invalid_argument("invalid hex payload");
    if (high < 0) {
      high = v;
    } else {
      raw.push_back(static_cast<Byte>((high << 4) | v));
      high = -1;
    }
  }
  if (high >= 0) throw std::invalid_argument("invalid hex payload");
  return raw;
}

// In-band byte stream: sentinel as NUL ('$' in ascii), everything else
// verbatim.
Bytes escaped_bytes(std::span<const Sym> bwt, EncodingMode mode) {
  const bool ascii = mode == EncodingMode::kAscii;
  const Byte stand_in = ascii ? Byte{'$'} : Byte{0};
  Bytes out;
  out.reserve(bwt.size());
  for (Sym s : bwt) {
    if (s == kSentinel) {
      out.push_back(stand_in);
    } else {
      const Byte b = byte_from_sym(s);
      if (b == stand_in)
        throw std::invalid_argument(ascii ? "ascii encoding cannot represent '$'"
                                          : "raw encoding cannot represent NUL");
      out.push_back(b);
    }
  }
  return out;
}

std::vector<Sym> syms_from_escaped(std::span<const Byte> raw, EncodingMode mode) {
  const Byte stand_in = mode == EncodingMode::kAscii ? Byte{'$'} : Byte{0};
  std::vector<Sym> out;
  out.reserve(raw.size());
  for (Byte b : raw)
    out.push_back(b == stand_in ? kSentinel : sym_from_byte(b));
  return out;
}

}  // namespace

Bytes encode_bwt(std::span<const Sym> bwt, OutputEncoding enc) {
  if (enc.sentinel == SentinelPolicy::kEscaped) {
    Bytes raw = escaped_bytes(bwt, enc.mode);
    if (enc.mode != EncodingMode::kHex) return raw;
    Bytes hex;
    hex.reserve(raw.size() * 2);
    for (Byte b : raw) push_hex(hex, b);
    return hex;
  }

  // Indexed: header names the sentinel row, payload omits the sentinel.
  std::size_t row = bwt.size();
  Bytes payload;
  payload.reserve(bwt.size());
  for (std::size_t r = 0; r < bwt.size(); ++r) {
    if (bwt[r] == kSentinel) {
      if (row != bwt.size())
        throw std::invalid_argument("not a sentinel-terminated bwt");
      row = r;
    } else {
      payload.push_back(byte_from_sym(bwt[r]));
    }
  }
  if (row == bwt.size())
    throw std::invalid_argument("not a sentinel-terminated bwt");

  std::string header = "sentinel_row=" + std::to_string(row + 1) + "\n";
  Bytes out(header.begin(), header.end());
  if (enc.mode == EncodingMode::kHex) {
    for (Byte b : payload) push_hex(out, b);
  } else {
    out.insert(out.end(), payload.begin(), payload.end());
  }
  return out;
}

std::vector<Sym> decode_bwt(std::span<const Byte> data, OutputEncoding enc) {
  if (enc.sentinel == SentinelPolicy::kEscaped) {
    if (enc.mode == EncodingMode::kHex) {
      return syms_from_escaped(parse_hex(data), EncodingMode::kRaw);
    }
    return syms_from_escaped(data, enc.mode);
  }

  const auto nl = std::find(data.begin(), data.end(), Byte{'\n'});
  if (nl == data.end())
    throw std::invalid_argument("not a sentinel-terminated bwt");
  std::string_view header(reinterpret_cast<const char*>(data.data()),
                          static_cast<std::size_t>(nl - data.begin()));
  constexpr std::string_view kPrefix = "sentinel_row=";
  if (!header.starts_with(kPrefix))
    throw std::invalid_argument("not a sentinel-terminated bwt");
  std::size_t row = 0;
  const auto* first = header.data() + kPrefix.size();
  const auto* last = header.data() + header.size();
  const auto parsed = std::from_chars(first, last, row);
  if (parsed.ec != std::errc{} || parsed.ptr != last || row == 0)
    throw std::invalid_argument("not a sentinel-terminated bwt");

  std::span<const Byte> rest = data.subspan(static_cast<std::size_t>(nl - data.begin()) + 1);
  Bytes payload;
  if (enc.mode == EncodingMode::kHex) {
    payload = parse_hex(rest);
  } else {
    payload.assign(rest.begin(), rest.end());
  }
  if (row > payload.size() + 1)
    throw std::invalid_argument("not a sentinel-terminated bwt");

  std::vector<Sym> out;
  out.reserve(payload.size() + 1);
  for (std::size_t i = 0; i < payload.size(); ++i) {
    if (i == row - 1) out.push_back(kSentinel);
    out.push_back(sym_from_byte(payload[i]));
  }
  if (row == payload.size() + 1) out.push_back(kSentinel);
  return out;
}

}  // namespace lynbwt
