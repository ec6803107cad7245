#pragma once

#include <functional>

#include "lynbwt/types.hpp"

namespace lynbwt {

// Chen-Fox-Lyndon factorization: the spans tile the text and the factor
// words form a lexicographically non-increasing sequence of Lyndon words.
struct Factorization {
  std::vector<FactorSpan> spans;

  std::size_t factor_count() const { return spans.size(); }
  bool empty() const { return spans.empty(); }
};

// Duval's algorithm, first variant: constant auxiliary storage and at most
// 2n symbol comparisons. Empty input yields an empty factorization.
Factorization duval_factorize(std::span<const Byte> text);

// Same, reporting the number of symbol comparisons performed.
Factorization duval_factorize_counted(std::span<const Byte> text,
                                      std::uint64_t& comparisons);

// Streaming form: emits each span as soon as it is final, left to right.
// Feeds online consumers that must not wait for the end of the text.
void duval_factorize_stream(std::span<const Byte> text,
                            const std::function<void(FactorSpan)>& emit);

// True iff word is nonempty, primitive, and strictly smaller than every
// proper suffix (equivalently, every proper cyclic rotation).
bool is_lyndon(std::span<const Byte> word);

struct Rotation {
  Bytes rotation;
  std::size_t shift = 0;  // 0-based; ties break to the smallest shift
};

// Lexicographically least cyclic rotation (Booth's algorithm).
// Throws std::invalid_argument on empty input.
Rotation least_rotation(std::span<const Byte> word);

}  // namespace lynbwt
