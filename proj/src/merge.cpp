#include "lynbwt/merge.hpp"

#include <stdexcept>

namespace lynbwt {

MergedTransform empty_transform(bool with_sa) {
  MergedTransform out;
  out.window = {1, 0};
  out.bwt = {kSentinel};
  out.with_sa = with_sa;
  if (with_sa) out.sa = {1};
  out.sentinel_row = 0;
  return out;
}

std::vector<std::uint32_t> compute_position_gaps(const RankDict& prev,
                                                 std::span<const Byte> text,
                                                 FactorSpan span,
                                                 const BlockSort& block,
                                                 std::uint64_t* scanned) {
  const std::size_t m = span.length();

  // Row of each local suffix: index 0 is the full block suffix, index j-1
  // the suffix at local position j, index m the bare sentinel.
  std::vector<std::uint32_t> row_of(m + 1);
  for (std::size_t r = 0; r <= m; ++r)
    row_of[block.sa[r] - span.start] = static_cast<std::uint32_t>(r);
  const std::uint32_t full_row = row_of[0];

  const std::uint64_t prev_sentinels = prev.total(kSentinel);
  std::vector<std::uint32_t> gaps(m + 1, 0);
  // gaps[j-1] holds the count for local position j; the recurrence consumes
  // gaps[j] (position j+1) going right to left. Position 1 stays 0: the
  // full block suffix takes over the accumulated bare-$ row.
  for (std::size_t j = m; j >= 2; --j) {
    const Sym c = sym_from_byte(text[span.start - 1 + j - 1]);
    std::uint64_t below = prev.count_smaller(c) - prev_sentinels;
    if (full_row < row_of[j - 1]) ++below;
    below += prev.rank(c, gaps[j]);
    if (scanned) *scanned += prev.scan_cost(gaps[j]) + 1;
    gaps[j - 1] = static_cast<std::uint32_t>(below);
  }
  return gaps;
}

std::vector<std::uint32_t> compute_rank_gaps(std::span<const std::uint32_t> position_gaps,
                                             const BlockSort& block) {
  if (position_gaps.size() != block.rows())
    throw std::invalid_argument("A/SA length mismatch");
  std::vector<std::uint32_t> out(block.rows());
  for (std::size_t r = 0; r < block.rows(); ++r)
    out[r] = position_gaps[block.sa[r] - block.span.start];
  return out;
}

GapCounts compute_gap_counts(const RankDict& prev, std::span<const Byte> text,
                             FactorSpan span, const BlockSort& block,
                             std::uint64_t* scanned) {
  GapCounts out;
  out.by_position = compute_position_gaps(prev, text, span, block, scanned);
  out.by_rank = compute_rank_gaps(out.by_position, block);
  return out;
}

MergedTransform merge_transforms(const MergedTransform& prev, const BlockSort& block,
                                 std::span<const std::uint32_t> rank_gaps) {
  if (prev.window.end + 1 != block.span.start)
    throw std::invalid_argument("block does not extend the accumulated window");
  if (rank_gaps.size() != block.rows())
    throw std::invalid_argument("inconsistent gap counts");
  const std::size_t prev_len = prev.length();
  if (!rank_gaps.empty() && rank_gaps.front() != 0)
    throw std::invalid_argument("inconsistent gap counts");
  for (std::size_t r = 0; r < rank_gaps.size(); ++r) {
    if (rank_gaps[r] > prev_len || (r > 0 && rank_gaps[r] < rank_gaps[r - 1]))
      throw std::invalid_argument("inconsistent gap counts");
  }

  MergedTransform out;
  out.window = {prev.window.start, block.span.end};
  out.with_sa = prev.with_sa;
  const std::size_t total = prev_len + block.rows() - 1;
  out.bwt.reserve(total);
  if (out.with_sa) out.sa.reserve(total);

  std::size_t q = 0;  // accumulated rows emitted so far
  auto emit = [&](Sym sym, std::uint32_t pos) {
    if (sym == kSentinel) out.sentinel_row = out.bwt.size();
    out.bwt.push_back(sym);
    if (out.with_sa) out.sa.push_back(pos);
  };

  for (std::size_t r = 0; r < block.rows(); ++r) {
    if (block.sa[r] == block.span.start) {
      // Full block suffix: fused with the accumulated bare-$ row, which is
      // still unemitted row 0 (no accumulated suffix sorts below it).
      if (q != 0) throw std::invalid_argument("inconsistent gap counts");
      emit(prev.bwt[0], block.span.start);
      q = 1;
      continue;
    }
    while (q < rank_gaps[r]) {
      emit(prev.bwt[q], prev.with_sa ? prev.sa[q] : 0);
      ++q;
    }
    emit(block.bwt[r], block.sa[r]);
  }
  while (q < prev_len) {
    emit(prev.bwt[q], prev.with_sa ? prev.sa[q] : 0);
    ++q;
  }
  return out;
}

}  // namespace lynbwt
