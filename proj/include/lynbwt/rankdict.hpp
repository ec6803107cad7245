#pragma once

#include <array>

#include "lynbwt/types.hpp"

namespace lynbwt {

// Occurrence counts over a byte-or-sentinel sequence, the two primitives of
// backward search: count_smaller(x) is the number of symbols below x in the
// whole sequence, rank(x, t) the number of occurrences of x among the first
// t symbols. Cumulative counts are checkpointed every `checkpoint_interval`
// positions; a query scans at most that many symbols past a checkpoint.
// Immutable after construction; append() returns a new dictionary.
class RankDict {
 public:
  static constexpr std::size_t kDefaultCheckpoint = 64;

  RankDict() = default;
  explicit RankDict(std::vector<Sym> sequence,
                    std::size_t checkpoint_interval = kDefaultCheckpoint);

  static RankDict build(std::vector<Sym> sequence,
                        std::size_t checkpoint_interval = kDefaultCheckpoint);

  // Equivalent to build(sequence ++ suffix) with the same interval.
  RankDict append(std::span<const Sym> suffix) const;

  std::size_t size() const { return seq_.size(); }
  std::size_t checkpoint_interval() const { return interval_; }
  const std::vector<Sym>& sequence() const { return seq_; }

  std::uint64_t total(Sym x) const;
  std::uint64_t count_smaller(Sym x) const;

  // Occurrences of x in the first t symbols. Throws
  // std::out_of_range("rank position out of bounds") when t > size().
  std::uint64_t rank(Sym x, std::size_t t) const;

  // Symbols a rank(x, t) query scans past its checkpoint; used by the
  // pipeline's work accounting.
  std::size_t scan_cost(std::size_t t) const {
    return interval_ ? t % interval_ : t;
  }

 private:
  using Counts = std::array<std::uint32_t, kAlphabetSize>;

  void extend(std::span<const Sym> suffix);

  std::vector<Sym> seq_;
  std::size_t interval_ = kDefaultCheckpoint;
  std::vector<Counts> checkpoints_;  // counts over seq_[0, i*interval)
  std::array<std::uint64_t, kAlphabetSize> totals_{};
  std::array<std::uint64_t, kAlphabetSize + 1> cumulative_{};
};

}  // namespace lynbwt
