#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lynbwt {

using Byte = std::uint8_t;
using Bytes = std::vector<Byte>;

// A BWT row holds either a text byte or the end sentinel. Symbols order the
// sentinel below every byte: sentinel = 0, byte b = b + 1.
using Sym = std::uint16_t;

inline constexpr Sym kSentinel = 0;
inline constexpr std::size_t kAlphabetSize = 257;

constexpr Sym sym_from_byte(Byte b) { return static_cast<Sym>(b) + 1; }
constexpr Byte byte_from_sym(Sym s) { return static_cast<Byte>(s - 1); }

inline Bytes bytes_from_string(std::string_view s) {
  return Bytes(s.begin(), s.end());
}

inline std::string string_from_bytes(std::span<const Byte> b) {
  return std::string(b.begin(), b.end());
}

inline std::vector<Sym> syms_from_string(std::string_view s) {
  std::vector<Sym> out;
  out.reserve(s.size());
  for (char c : s) out.push_back(c == '$' ? kSentinel : sym_from_byte(static_cast<Byte>(c)));
  return out;
}

// Renders a symbol sequence with the sentinel shown as '$'.
inline std::string string_from_syms(std::span<const Sym> seq) {
  std::string out;
  out.reserve(seq.size());
  for (Sym s : seq) out.push_back(s == kSentinel ? '$' : static_cast<char>(byte_from_sym(s)));
  return out;
}

// 1-based inclusive positions of a factor (or run of factors) in the text.
struct FactorSpan {
  std::uint32_t start = 0;
  std::uint32_t end = 0;

  std::uint32_t length() const { return end - start + 1; }
  friend bool operator==(const FactorSpan&, const FactorSpan&) = default;
};

}  // namespace lynbwt
