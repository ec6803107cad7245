#include "lynbwt/rankdict.hpp"

#include <stdexcept>

namespace lynbwt {

RankDict::RankDict(std::vector<Sym> sequence, std::size_t checkpoint_interval)
    : interval_(checkpoint_interval == 0 ? kDefaultCheckpoint : checkpoint_interval) {
  std::vector<Sym> moved = std::move(sequence);
  extend(moved);
  seq_ = std::move(moved);
}

RankDict RankDict::build(std::vector<Sym> sequence, std::size_t checkpoint_interval) {
  return RankDict(std::move(sequence), checkpoint_interval);
}

RankDict RankDict::append(std::span<const Sym> suffix) const {
  RankDict out = *this;
  out.extend(suffix);
  out.seq_.insert(out.seq_.end(), suffix.begin(), suffix.end());
  return out;
}

void RankDict::extend(std::span<const Sym> suffix) {
  // Running counts resume from the last full checkpoint; seq_ still holds
  // only the prefix, so positions past it come from `suffix`.
  const std::size_t old_size = seq_.size();
  const std::size_t new_size = old_size + suffix.size();
  Counts running{};
  if (!checkpoints_.empty()) running = checkpoints_.back();
  std::size_t from = checkpoints_.size() * interval_;
  auto symbol_at = [&](std::size_t i) {
    return i < old_size ? seq_[i] : suffix[i - old_size];
  };
  checkpoints_.reserve(new_size / interval_);
  for (std::size_t i = from; i < new_size; ++i) {
    ++running[symbol_at(i)];
    if ((i + 1) % interval_ == 0) checkpoints_.push_back(running);
  }
  for (Sym s : suffix) ++totals_[s];
  cumulative_[0] = 0;
  for (std::size_t x = 0; x < kAlphabetSize; ++x)
    cumulative_[x + 1] = cumulative_[x] + totals_[x];
}

std::uint64_t RankDict::total(Sym x) const { return totals_[x]; }

std::uint64_t RankDict::count_smaller(Sym x) const { return cumulative_[x]; }

std::uint64_t RankDict::rank(Sym x, std::size_t t) const {
  if (t > seq_.size()) throw std::out_of_range("rank position out of bounds");
  const std::size_t block = t / interval_;
  std::uint64_t count = block == 0 ? 0 : checkpoints_[block - 1][x];
  for (std::size_t i = block * interval_; i < t; ++i) count += seq_[i] == x;
  return count;
}

}  // namespace lynbwt
