#include "lynbwt/blocksort.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lynbwt {

BlockSort sort_block(std::span<const Byte> text, FactorSpan span,
                     std::uint64_t* comparisons) {
  const std::size_t m = span.length();
  const Byte* blk = text.data() + (span.start - 1);

  // Local suffix starts 0..m; m is the bare sentinel. Reaching the block end
  // first means reaching the sentinel first, which sorts below every byte.
  std::vector<std::uint32_t> local(m + 1);
  std::iota(local.begin(), local.end(), 0u);
  std::uint64_t count = 0;
  std::sort(local.begin(), local.end(),
            [blk, m, &count](std::uint32_t p, std::uint32_t q) {
              while (p < m && q < m) {
                ++count;
                if (blk[p] != blk[q]) return blk[p] < blk[q];
                ++p;
                ++q;
              }
              return p > q;
            });
  if (comparisons) *comparisons += count;

  BlockSort out;
  out.span = span;
  out.sa.resize(m + 1);
  for (std::size_t r = 0; r <= m; ++r) out.sa[r] = local[r] + span.start;
  out.bwt = block_bwt_from_sa(text, span, out.sa);
  for (std::size_t r = 0; r <= m; ++r) {
    if (out.bwt[r] == kSentinel) {
      out.sentinel_row = r;
      break;
    }
  }
  return out;
}

std::vector<Sym> block_bwt_from_sa(std::span<const Byte> text, FactorSpan span,
                                   std::span<const std::uint32_t> sa) {
  const std::size_t m = span.length();
  if (sa.size() != m + 1) throw std::invalid_argument("invalid suffix array");
  std::vector<bool> seen(m + 1, false);
  for (std::uint32_t v : sa) {
    if (v < span.start || v > span.end + 1 || seen[v - span.start])
      throw std::invalid_argument("invalid suffix array");
    seen[v - span.start] = true;
  }

  std::vector<Sym> bwt(m + 1);
  for (std::size_t r = 0; r <= m; ++r) {
    bwt[r] = sa[r] == span.start ? kSentinel : sym_from_byte(text[sa[r] - 2]);
  }
  return bwt;
}

}  // namespace lynbwt
