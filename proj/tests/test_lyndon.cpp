#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "lynbwt/lyndon.hpp"

using namespace lynbwt;
using namespace lynbwt::testing;

namespace {

std::vector<std::string> factor_words(const Bytes& text, const Factorization& f) {
  std::vector<std::string> out;
  for (const FactorSpan& s : f.spans)
    out.push_back(std::string(text.begin() + s.start - 1, text.begin() + s.end));
  return out;
}

}  // namespace

TEST_CASE("duval_factorize on known words") {
  CHECK(factor_words(T("aabcabbaabaabdabbaaabbdc"),
                     duval_factorize(T("aabcabbaabaabdabbaaabbdc"))) ==
        std::vector<std::string>{"aabcabb", "aabaabdabb", "aaabbdc"});
  CHECK(factor_words(T("aaaa"), duval_factorize(T("aaaa"))) ==
        std::vector<std::string>{"a", "a", "a", "a"});
  CHECK(factor_words(T("abababb"), duval_factorize(T("abababb"))) ==
        std::vector<std::string>{"abababb"});
  CHECK(duval_factorize(T("")).spans.empty());
}

TEST_CASE("the whole word abababb is Lyndon by the suffix definition") {
  CHECK(brute_is_lyndon(T("abababb")));
}

TEST_CASE("factors tile, are Lyndon and non-increasing; at most 2n comparisons") {
  std::mt19937 rng(20240811);
  for (int round = 0; round < 10000; ++round) {
    const Bytes text = random_text(rng, 256, 4);
    std::uint64_t comparisons = 0;
    const Factorization f = duval_factorize_counted(text, comparisons);

    CHECK(comparisons <= 2 * text.size());

    std::uint32_t expected_start = 1;
    for (const FactorSpan& s : f.spans) {
      REQUIRE(s.start == expected_start);
      REQUIRE(s.end >= s.start);
      REQUIRE(s.end <= text.size());
      expected_start = s.end + 1;
      CHECK(is_lyndon(std::span(text).subspan(s.start - 1, s.length())));
    }
    CHECK(expected_start == text.size() + 1);

    for (std::size_t i = 0; i + 1 < f.spans.size(); ++i) {
      const auto& a = f.spans[i];
      const auto& b = f.spans[i + 1];
      const std::string wa(text.begin() + a.start - 1, text.begin() + a.end);
      const std::string wb(text.begin() + b.start - 1, text.begin() + b.end);
      CHECK(wa >= wb);
    }
  }
}

TEST_CASE("agrees with the greedy longest-Lyndon-prefix factorizer") {
  // Exhaustive over a 3-letter alphabet up to length 11, then random
  // samples of lengths 12..16.
  for (std::size_t len = 0; len <= 11; ++len) {
    std::vector<std::size_t> digits(len, 0);
    while (true) {
      Bytes word(len);
      for (std::size_t i = 0; i < len; ++i) word[i] = static_cast<Byte>('a' + digits[i]);
      REQUIRE(duval_factorize(word).spans == brute_factorize(word));
      std::size_t i = 0;
      while (i < len && digits[i] == 2) digits[i++] = 0;
      if (i == len) break;
      ++digits[i];
    }
  }
  std::mt19937 rng(77);
  for (int round = 0; round < 20000; ++round) {
    Bytes word(12 + rng() % 5);
    for (auto& b : word) b = static_cast<Byte>('a' + rng() % 3);
    REQUIRE(duval_factorize(word).spans == brute_factorize(word));
  }
}

TEST_CASE("streaming factorization emits the batch spans in order") {
  std::mt19937 rng(3);
  for (int round = 0; round < 500; ++round) {
    const Bytes text = random_text(rng, 128, 3);
    std::vector<FactorSpan> streamed;
    duval_factorize_stream(text, [&](FactorSpan s) { streamed.push_back(s); });
    CHECK(streamed == duval_factorize(text).spans);
  }
}

TEST_CASE("is_lyndon on known words") {
  CHECK(is_lyndon(T("aabcabb")));
  CHECK(is_lyndon(T("a")));
  CHECK_FALSE(is_lyndon(T("aa")));
  CHECK_FALSE(is_lyndon(T("ababa")));
  CHECK_FALSE(is_lyndon(T("")));
  // ababa loses to its rotation aabab
  CHECK(string_from_bytes(least_rotation(T("ababa")).rotation) == "aabab");
}

TEST_CASE("both Lyndon characterizations agree") {
  std::mt19937 rng(41);
  for (int round = 0; round < 20000; ++round) {
    const Bytes w = random_text(rng, 24, 3);
    const bool suffix_def = brute_is_lyndon(w);
    CHECK(is_lyndon(w) == suffix_def);
    CHECK(brute_is_lyndon_rotational(w) == suffix_def);
  }
}

TEST_CASE("least_rotation on known words") {
  const Rotation r1 = least_rotation(T("thematics"));
  CHECK(string_from_bytes(r1.rotation) == "aticsthem");
  CHECK(r1.shift == 4);

  const Rotation r2 = least_rotation(T("aabcabb"));
  CHECK(string_from_bytes(r2.rotation) == "aabcabb");
  CHECK(r2.shift == 0);

  const Rotation r3 = least_rotation(T("abab"));
  CHECK(string_from_bytes(r3.rotation) == "abab");
  CHECK(r3.shift == 0);

  CHECK_THROWS_WITH_AS(least_rotation(T("")), "empty word has no rotation",
                       std::invalid_argument);
}

TEST_CASE("least_rotation matches a brute-force scan of all shifts") {
  std::mt19937 rng(9001);
  for (int round = 0; round < 20000; ++round) {
    Bytes w = random_text(rng, 20, 3);
    if (w.empty()) w.push_back('a');
    const std::string s(w.begin(), w.end());
    std::string best = s;
    std::size_t best_shift = 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
      const std::string rot = s.substr(i) + s.substr(0, i);
      if (rot < best) {
        best = rot;
        best_shift = i;
      }
    }
    const Rotation got = least_rotation(w);
    CHECK(string_from_bytes(got.rotation) == best);
    CHECK(got.shift == best_shift);
  }
}

TEST_CASE("is_lyndon iff least rotation shift is zero and word is primitive") {
  std::mt19937 rng(8);
  for (int round = 0; round < 20000; ++round) {
    const Bytes w = random_text(rng, 16, 2);
    if (w.empty()) continue;
    const bool expected = least_rotation(w).shift == 0 && brute_is_primitive(w);
    CHECK(is_lyndon(w) == expected);
  }
}
