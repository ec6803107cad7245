#pragma once

#include "lynbwt/lyndon.hpp"
#include "lynbwt/merge.hpp"

namespace lynbwt {

struct PipelineConfig {
  std::uint32_t chunk_factors = 1;   // consecutive Lyndon factors per block
  bool emit_sa = false;
  std::uint32_t parallel_groups = 1;
  std::size_t rank_checkpoint = RankDict::kDefaultCheckpoint;
};

struct PipelineStats {
  std::size_t k = 0;               // Lyndon factor count
  std::size_t max_factor_len = 0;  // longest factor
  std::size_t iterations = 0;      // merge events; ceil(k/chunk) when serial
  std::vector<std::uint64_t> per_iteration_work;  // symbols touched

  std::uint64_t total_work() const;
};

struct PipelineRun {
  MergedTransform transform;
  PipelineStats stats;
};

// Incremental BWT/SA of text·$ over the Lyndon factorization: sort each
// block, count how many accumulated suffixes fall below each block suffix,
// interleave. parallel_groups > 1 builds disjoint factor-group transforms
// concurrently and merges them pairwise in tree order; the output is
// identical for every configuration.
MergedTransform lyndon_bwt(std::span<const Byte> text,
                           const PipelineConfig& config = {});

PipelineRun lyndon_bwt_run(std::span<const Byte> text,
                           const PipelineConfig& config = {});

inline const PipelineStats& collect_stats(const PipelineRun& run) {
  return run.stats;
}

// Merges the transform of a leading factor group with the sorted transform
// of the remaining factors, given as one block. Both operands must abut at
// a Lyndon factor boundary of the text; otherwise throws
// std::invalid_argument("group cut inside a Lyndon factor").
MergedTransform merge_groups(std::span<const Byte> text, const MergedTransform& left,
                             const BlockSort& right);

// Consumes factors left to right; after each push the accumulated transform
// equals the batch result on the prefix seen so far. Factors that do not
// tile contiguously raise std::invalid_argument("non-contiguous factor
// stream"). The text must outlive the pipeline.
class OnlinePipeline {
 public:
  explicit OnlinePipeline(std::span<const Byte> text, bool emit_sa = false,
                          std::size_t rank_checkpoint = RankDict::kDefaultCheckpoint);

  void push_factor(FactorSpan factor);
  const MergedTransform& snapshot() const { return accumulated_; }
  std::size_t factors_consumed() const { return factors_consumed_; }

 private:
  std::span<const Byte> text_;
  std::size_t rank_checkpoint_;
  MergedTransform accumulated_;
  std::size_t factors_consumed_ = 0;
};

}  // namespace lynbwt
