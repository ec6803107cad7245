#include "lynbwt/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lynbwt::oracle {

namespace {

// Direct comparison of the sentinel-terminated suffixes at 1-based
// positions p and q (p, q in 1..n+1).
bool suffix_less(std::span<const Byte> text, std::uint32_t p, std::uint32_t q) {
  const std::size_t n = text.size();
  std::size_t a = p - 1;
  std::size_t b = q - 1;
  while (a < n && b < n) {
    if (text[a] != text[b]) return text[a] < text[b];
    ++a;
    ++b;
  }
  return a > b;  // the side that reached the sentinel first is smaller
}

}  // namespace

std::vector<std::uint32_t> naive_sa(std::span<const Byte> text) {
  std::vector<std::uint32_t> sa(text.size() + 1);
  std::iota(sa.begin(), sa.end(), 1u);
  std::sort(sa.begin(), sa.end(), [&](std::uint32_t p, std::uint32_t q) {
    return suffix_less(text, p, q);
  });
  return sa;
}

std::vector<Sym> naive_bwt(std::span<const Byte> text) {
  const auto sa = naive_sa(text);
  std::vector<Sym> bwt(sa.size());
  for (std::size_t r = 0; r < sa.size(); ++r) {
    bwt[r] = sa[r] == 1 ? kSentinel : sym_from_byte(text[sa[r] - 2]);
  }
  return bwt;
}

RotationBwt rotation_bwt(std::span<const Byte> word) {
  if (word.empty()) throw std::invalid_argument("empty word has no rotations");
  const std::size_t n = word.size();
  std::vector<std::uint32_t> shifts(n);
  std::iota(shifts.begin(), shifts.end(), 0u);
  std::sort(shifts.begin(), shifts.end(), [&](std::uint32_t a, std::uint32_t b) {
    for (std::size_t i = 0; i < n; ++i) {
      const Byte ca = word[(a + i) % n];
      const Byte cb = word[(b + i) % n];
      if (ca != cb) return ca < cb;
    }
    return a < b;  // equal rotations order by start position
  });

  RotationBwt out;
  out.l.resize(n);
  for (std::size_t r = 0; r < n; ++r) {
    out.l[r] = word[(shifts[r] + n - 1) % n];
    if (shifts[r] == 0) out.i = r + 1;
  }
  return out;
}

Bytes inverse_bwt(std::span<const Sym> bwt) {
  std::size_t sentinels = 0;
  for (Sym s : bwt) sentinels += s == kSentinel;
  if (sentinels != 1) throw std::invalid_argument("not a sentinel-terminated bwt");

  // First-column start of each symbol, then the rank of every row among
  // equal symbols: together they give the last-to-first mapping.
  std::vector<std::uint32_t> first(kAlphabetSize + 1, 0);
  for (Sym s : bwt) ++first[s + 1];
  for (std::size_t x = 1; x <= kAlphabetSize; ++x) first[x] += first[x - 1];
  std::vector<std::uint32_t> lf(bwt.size());
  {
    std::vector<std::uint32_t> next(first.begin(), first.end() - 1);
    for (std::size_t r = 0; r < bwt.size(); ++r) lf[r] = next[bwt[r]]++;
  }

  const std::size_t n = bwt.size() - 1;
  Bytes out(n);
  std::size_t row = 0;  // the bare-sentinel row: its bwt symbol ends the text
  for (std::size_t i = n; i > 0; --i) {
    const Sym s = bwt[row];
    if (s == kSentinel) throw std::invalid_argument("malformed bwt");
    out[i - 1] = byte_from_sym(s);
    row = lf[row];
  }
  if (bwt[row] != kSentinel) throw std::invalid_argument("malformed bwt");
  return out;
}

bool compatibility_check(std::span<const Byte> text, FactorSpan window) {
  const std::size_t e = window.end;  // local suffixes end here
  auto local_less = [&](std::uint32_t p, std::uint32_t q) {
    std::size_t a = p - 1;
    std::size_t b = q - 1;
    while (a < e && b < e) {
      if (text[a] != text[b]) return text[a] < text[b];
      ++a;
      ++b;
    }
    return a > b;
  };
  for (std::uint32_t i = window.start; i <= window.end; ++i) {
    for (std::uint32_t j = i + 1; j <= window.end; ++j) {
      if (local_less(i, j) != suffix_less(text, i, j)) return false;
    }
  }
  return true;
}

bool all_factor_windows_compatible(std::span<const Byte> text,
                                   std::span<const FactorSpan> factors) {
  const std::size_t n = text.size();
  if (n == 0 || factors.empty()) return true;

  // lcp[i][j] = longest common prefix of the suffixes at 0-based i and j.
  std::vector<std::vector<std::uint32_t>> lcp(n + 1,
                                              std::vector<std::uint32_t>(n + 1, 0));
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = n; j-- > 0;) {
      lcp[i][j] = text[i] == text[j] ? lcp[i + 1][j + 1] + 1 : 0;
    }
  }

  // Every consecutive-factor window shares its local suffixes with the
  // maximal window ending at the same factor boundary, so checking the
  // maximal windows checks them all.
  for (const FactorSpan& f : factors) {
    const std::size_t e = f.end;  // window [1, e], 0-based positions 0..e-1
    std::vector<std::uint32_t> order(e);
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
      const std::uint32_t d = lcp[a][b];
      if (a + d >= e || b + d >= e) return a > b;
      return text[a + d] < text[b + d];
    });
    // Global order must agree: the locally sorted positions must also be
    // globally increasing.
    for (std::size_t r = 0; r + 1 < order.size(); ++r) {
      const std::uint32_t a = order[r];
      const std::uint32_t b = order[r + 1];
      const std::uint32_t d = lcp[a][b];
      const bool global_less =
          (a + d >= n || b + d >= n) ? a > b : text[a + d] < text[b + d];
      if (!global_less) return false;
    }
  }
  return true;
}

}  // namespace lynbwt::oracle
