#pragma once

#include "lynbwt/types.hpp"

namespace lynbwt::oracle {

// Brute-force references: direct comparison sorts and inversions, quadratic
// on purpose. Compiled into tests and the `verify` command; never used by
// the pipeline itself.

// Suffix array of text·$ by direct comparison, 1-based; first entry is n+1.
std::vector<std::uint32_t> naive_sa(std::span<const Byte> text);

// BWT of text·$ from naive_sa; the row whose suffix starts at 1 gets the
// sentinel.
std::vector<Sym> naive_bwt(std::span<const Byte> text);

// Rotation form of the BWT: last column of the sorted rotations plus the
// 1-based row of the original word. Equal rotations order by start
// position. Throws std::invalid_argument on empty input.
struct RotationBwt {
  Bytes l;
  std::size_t i = 0;
};
RotationBwt rotation_bwt(std::span<const Byte> word);

// Recovers the text whose sentinel-terminated BWT equals the input, by the
// last-to-first column walk. Throws std::invalid_argument("not a
// sentinel-terminated bwt") unless exactly one sentinel is present, and
// std::invalid_argument("malformed bwt") when the walk does not visit every
// row.
Bytes inverse_bwt(std::span<const Sym> bwt);

// Pairwise check that local suffix order inside text[window] matches global
// suffix order, both by direct comparison. The window need not be
// factor-aligned.
bool compatibility_check(std::span<const Byte> text, FactorSpan window);

// Checks every window of consecutive factors at once. A window's local
// suffixes depend only on its end, so each factor end is covered by its
// maximal window [1, end]; those k windows are verified with an O(n^2)
// lcp table making suffix comparisons O(1).
bool all_factor_windows_compatible(std::span<const Byte> text,
                                   std::span<const FactorSpan> factors);

}  // namespace lynbwt::oracle
