#pragma once

#include "lynbwt/blocksort.hpp"
#include "lynbwt/rankdict.hpp"

namespace lynbwt {

// Counter arrays of one merge step, both of length span.length() + 1.
// by_position[j-1] is the number of accumulated suffixes lexicographically
// below the block suffix starting at local position j (the last slot is the
// block's bare-sentinel suffix); by_rank is the same count reindexed in
// block row order, and is non-decreasing.
struct GapCounts {
  std::vector<std::uint32_t> by_position;
  std::vector<std::uint32_t> by_rank;
};

// Accumulated transform of text[window]·$. In the pipeline the window
// starts at position 1 and the result is the BWT (and optionally SA) of the
// whole prefix; group-parallel mode also builds transforms of interior
// windows and merges them pairwise.
struct MergedTransform {
  FactorSpan window{1, 0};
  std::vector<Sym> bwt;
  std::vector<std::uint32_t> sa;  // kept only when SA output is requested
  bool with_sa = false;
  std::size_t sentinel_row = 0;

  std::size_t length() const { return bwt.size(); }
};

// Transform of the empty text: bwt "$", sa [1].
MergedTransform empty_transform(bool with_sa);

// Position-indexed gap counts for merging `block` into the accumulated
// transform whose bwt backs `prev`. Walks the block right to left, one
// count_smaller + rank pair per symbol. The accumulated string's bare-$ row
// stands for the full block suffix, so its contribution per position j is
// the indicator [full suffix sorts below local suffix j], read off the
// block's own row order; for a single-factor block the full suffix is below
// every proper one and the indicator folds into count_smaller. When
// `scanned` is given it accumulates symbols touched by rank queries.
std::vector<std::uint32_t> compute_position_gaps(const RankDict& prev,
                                                 std::span<const Byte> text,
                                                 FactorSpan span,
                                                 const BlockSort& block,
                                                 std::uint64_t* scanned = nullptr);

// Reindexes position gaps into block row order. Throws
// std::invalid_argument("A/SA length mismatch") on size mismatch.
std::vector<std::uint32_t> compute_rank_gaps(std::span<const std::uint32_t> position_gaps,
                                             const BlockSort& block);

GapCounts compute_gap_counts(const RankDict& prev, std::span<const Byte> text,
                             FactorSpan span, const BlockSort& block,
                             std::uint64_t* scanned = nullptr);

// Interleaves the block's rows into the accumulated transform: block row r
// is preceded by exactly rank_gaps[r] accumulated rows, both sides keeping
// their mutual order. The block row of the full block suffix fuses with the
// accumulated bare-$ row: the fused row keeps the accumulated side's symbol
// (the byte preceding the block) and, in SA mode, the position they already
// agree on. Throws std::invalid_argument("inconsistent gap counts") when
// rank_gaps is non-monotone or out of bounds.
MergedTransform merge_transforms(const MergedTransform& prev, const BlockSort& block,
                                 std::span<const std::uint32_t> rank_gaps);

}  // namespace lynbwt
