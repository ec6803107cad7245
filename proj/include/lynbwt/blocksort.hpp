#pragma once

#include "lynbwt/types.hpp"

namespace lynbwt {

// Suffix array and BWT of one block text[span]·$, the block's own virtual
// sentinel sorting below every byte. SA values are global 1-based positions;
// the value span.end + 1 encodes the bare-sentinel suffix, which is always
// row 0. The BWT holds the symbol preceding each suffix inside the block,
// with exactly one sentinel at the row of the full block suffix.
struct BlockSort {
  FactorSpan span;
  std::vector<std::uint32_t> sa;  // length span.length() + 1
  std::vector<Sym> bwt;           // length span.length() + 1
  std::size_t sentinel_row = 0;   // row whose bwt symbol is the sentinel

  std::size_t rows() const { return sa.size(); }
};

// Comparison sort of the block's sentinel-terminated suffixes. When
// `comparisons` is given it accumulates the number of symbol comparisons.
BlockSort sort_block(std::span<const Byte> text, FactorSpan span,
                     std::uint64_t* comparisons = nullptr);

// BWT row symbols for a given block suffix array. Throws
// std::invalid_argument("invalid suffix array") when sa is not a
// permutation of {span.start, ..., span.end + 1}.
std::vector<Sym> block_bwt_from_sa(std::span<const Byte> text, FactorSpan span,
                                   std::span<const std::uint32_t> sa);

}  // namespace lynbwt
