#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "lynbwt/encoding.hpp"
#include "lynbwt/oracle.hpp"

using namespace lynbwt;
using namespace lynbwt::testing;

TEST_CASE("ascii escaped encoding renders the sentinel as a dollar sign") {
  const auto bwt = oracle::naive_bwt(T("mathematics"));
  const Bytes out = encode_bwt(bwt, {EncodingMode::kAscii, SentinelPolicy::kEscaped});
  CHECK(string_from_bytes(out) == "smmihtt$ecaa");
  CHECK(decode_bwt(out, {EncodingMode::kAscii, SentinelPolicy::kEscaped}) == bwt);
}

TEST_CASE("indexed encoding carries the sentinel row in a header") {
  const auto bwt = oracle::naive_bwt(T("mathematics"));
  const Bytes out = encode_bwt(bwt, {EncodingMode::kRaw, SentinelPolicy::kIndexed});
  const std::string s = string_from_bytes(out);
  CHECK(s == "sentinel_row=8\nsmmihttecaa");
  CHECK(decode_bwt(out, {EncodingMode::kRaw, SentinelPolicy::kIndexed}) == bwt);
}

TEST_CASE("hex encoding spells raw bytes as digit pairs") {
  const std::vector<Sym> bwt = syms_from_string("ab$");
  const Bytes out = encode_bwt(bwt, {EncodingMode::kHex, SentinelPolicy::kEscaped});
  CHECK(string_from_bytes(out) == "616200");
  CHECK(decode_bwt(out, {EncodingMode::kHex, SentinelPolicy::kEscaped}) == bwt);

  const Bytes indexed = encode_bwt(bwt, {EncodingMode::kHex, SentinelPolicy::kIndexed});
  CHECK(string_from_bytes(indexed) == "sentinel_row=3\n6162");
  CHECK(decode_bwt(indexed, {EncodingMode::kHex, SentinelPolicy::kIndexed}) == bwt);
}

TEST_CASE("escaped encodings reject their stand-in byte in the payload") {
  const std::vector<Sym> with_dollar = {sym_from_byte('a'), kSentinel,
                                        sym_from_byte('$')};
  CHECK_THROWS_AS(
      encode_bwt(with_dollar, {EncodingMode::kAscii, SentinelPolicy::kEscaped}),
      std::invalid_argument);
  const std::vector<Sym> with_nul = {sym_from_byte('a'), kSentinel, sym_from_byte(0)};
  CHECK_THROWS_AS(encode_bwt(with_nul, {EncodingMode::kRaw, SentinelPolicy::kEscaped}),
                  std::invalid_argument);
  // the indexed policy represents both payloads exactly
  for (const auto& bwt : {with_dollar, with_nul}) {
    const OutputEncoding enc{EncodingMode::kRaw, SentinelPolicy::kIndexed};
    CHECK(decode_bwt(encode_bwt(bwt, enc), enc) == bwt);
  }
}

TEST_CASE("decoding rejects broken headers and rows") {
  const OutputEncoding enc{EncodingMode::kRaw, SentinelPolicy::kIndexed};
  CHECK_THROWS_WITH_AS(decode_bwt(T("no header here"), enc),
                       "not a sentinel-terminated bwt", std::invalid_argument);
  CHECK_THROWS_WITH_AS(decode_bwt(T("sentinel_row=abc\nxyz"), enc),
                       "not a sentinel-terminated bwt", std::invalid_argument);
  CHECK_THROWS_WITH_AS(decode_bwt(T("sentinel_row=0\nxyz"), enc),
                       "not a sentinel-terminated bwt", std::invalid_argument);
  CHECK_THROWS_WITH_AS(decode_bwt(T("sentinel_row=5\nxyz"), enc),
                       "not a sentinel-terminated bwt", std::invalid_argument);
  CHECK_THROWS_AS(decode_bwt(T("0z"), {EncodingMode::kHex, SentinelPolicy::kEscaped}),
                  std::invalid_argument);
  CHECK_THROWS_AS(decode_bwt(T("012"), {EncodingMode::kHex, SentinelPolicy::kEscaped}),
                  std::invalid_argument);
}

TEST_CASE("decode inverts encode for every mode and policy") {
  std::mt19937 rng(616);
  const EncodingMode modes[] = {EncodingMode::kRaw, EncodingMode::kAscii,
                                EncodingMode::kHex};
  const SentinelPolicy policies[] = {SentinelPolicy::kEscaped, SentinelPolicy::kIndexed};
  for (int round = 0; round < 2000; ++round) {
    // a sentinel-terminated BWT shape: one sentinel somewhere among bytes
    const std::size_t len = rng() % 64;
    std::vector<Sym> bwt(len + 1);
    const std::size_t at = rng() % (len + 1);
    for (std::size_t i = 0; i <= len; ++i) {
      if (i == at) {
        bwt[i] = kSentinel;
      } else {
        Byte b = static_cast<Byte>(1 + rng() % 255);
        if (b == '$') b = 'x';  // keep ascii mode applicable
        bwt[i] = sym_from_byte(b);
      }
    }
    for (EncodingMode mode : modes) {
      for (SentinelPolicy policy : policies) {
        const OutputEncoding enc{mode, policy};
        REQUIRE(decode_bwt(encode_bwt(bwt, enc), enc) == bwt);
      }
    }
  }
}
