#pragma once

// Test-only brute-force references, kept independent of the library code
// they check: everything here works by definition-level string comparison.

#include <algorithm>
#include <random>
#include <string>

#include "lynbwt/types.hpp"

namespace lynbwt::testing {

inline Bytes T(std::string_view s) { return bytes_from_string(s); }

inline Bytes random_text(std::mt19937& rng, std::size_t max_len, int max_alphabet) {
  const std::size_t len = rng() % (max_len + 1);
  const int alphabet = 1 + static_cast<int>(rng() % max_alphabet);
  Bytes out(len);
  for (auto& b : out) b = static_cast<Byte>('a' + rng() % alphabet);
  return out;
}

// Lyndon by definition: strictly smaller than every proper suffix.
inline bool brute_is_lyndon(std::span<const Byte> w) {
  if (w.empty()) return false;
  const std::string s(w.begin(), w.end());
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s.compare(s.substr(i)) >= 0) return false;
  }
  return true;
}

// Lyndon by the other characterization: primitive and minimal among
// rotations.
inline bool brute_is_lyndon_rotational(std::span<const Byte> w) {
  if (w.empty()) return false;
  const std::string s(w.begin(), w.end());
  for (std::size_t i = 1; i < s.size(); ++i) {
    const std::string rot = s.substr(i) + s.substr(0, i);
    if (rot <= s) return false;  // equal rotation means non-primitive
  }
  return true;
}

inline bool brute_is_primitive(std::span<const Byte> w) {
  const std::size_t n = w.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool repeats = true;
    for (std::size_t i = p; i < n && repeats; ++i) repeats = w[i] == w[i - p];
    if (repeats) return false;
  }
  return !w.empty();
}

// Greedy factorizer: repeatedly take the longest Lyndon prefix.
inline std::vector<FactorSpan> brute_factorize(std::span<const Byte> text) {
  std::vector<FactorSpan> out;
  std::size_t at = 0;
  while (at < text.size()) {
    std::size_t best = 1;
    for (std::size_t len = text.size() - at; len >= 1; --len) {
      if (brute_is_lyndon(text.subspan(at, len))) {
        best = len;
        break;
      }
    }
    out.push_back({static_cast<std::uint32_t>(at + 1),
                   static_cast<std::uint32_t>(at + best)});
    at += best;
  }
  return out;
}

// Sentinel-terminated suffix comparison at 1-based positions.
inline bool brute_suffix_less(std::span<const Byte> text, std::uint32_t p,
                              std::uint32_t q) {
  std::size_t a = p - 1;
  std::size_t b = q - 1;
  const std::size_t n = text.size();
  while (a < n && b < n) {
    if (text[a] != text[b]) return text[a] < text[b];
    ++a;
    ++b;
  }
  return a > b;
}

inline std::string bwt_ascii(std::span<const Sym> seq) { return string_from_syms(seq); }

}  // namespace lynbwt::testing
