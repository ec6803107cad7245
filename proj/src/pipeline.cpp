#include "lynbwt/pipeline.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lynbwt {

namespace {

MergedTransform local_empty_transform(std::uint32_t start, bool with_sa) {
  MergedTransform out;
  out.window = {start, start - 1};
  out.bwt = {kSentinel};
  out.with_sa = with_sa;
  if (with_sa) out.sa = {start};
  out.sentinel_row = 0;
  return out;
}

// Runs of `chunk` consecutive factors, each treated as one block.
std::vector<FactorSpan> chunk_spans(const std::vector<FactorSpan>& spans,
                                    std::uint32_t chunk) {
  std::vector<FactorSpan> out;
  out.reserve((spans.size() + chunk - 1) / chunk);
  for (std::size_t i = 0; i < spans.size(); i += chunk) {
    const std::size_t j = std::min<std::size_t>(i + chunk, spans.size()) - 1;
    out.push_back({spans[i].start, spans[j].end});
  }
  return out;
}

MergedTransform merge_block(std::span<const Byte> text, MergedTransform&& acc,
                            const BlockSort& block, std::size_t checkpoint,
                            std::uint64_t& work) {
  RankDict dict(acc.bwt, checkpoint);
  work += dict.size();
  const auto gaps = compute_position_gaps(dict, text, block.span, block, &work);
  const auto by_rank = compute_rank_gaps(gaps, block);
  MergedTransform merged = merge_transforms(acc, block, by_rank);
  work += merged.length();
  return merged;
}

MergedTransform fold_window(std::span<const Byte> text,
                            std::span<const FactorSpan> blocks, bool with_sa,
                            std::size_t checkpoint,
                            std::vector<std::uint64_t>& works) {
  MergedTransform acc = local_empty_transform(blocks.front().start, with_sa);
  for (const FactorSpan& span : blocks) {
    std::uint64_t work = 0;
    const BlockSort block = sort_block(text, span, &work);
    acc = merge_block(text, std::move(acc), block, checkpoint, work);
    works.push_back(work);
  }
  return acc;
}

BlockSort block_from_transform(MergedTransform&& t) {
  BlockSort out;
  out.span = t.window;
  out.sa = std::move(t.sa);
  out.bwt = std::move(t.bwt);
  out.sentinel_row = t.sentinel_row;
  return out;
}

}  // namespace

std::uint64_t PipelineStats::total_work() const {
  return std::accumulate(per_iteration_work.begin(), per_iteration_work.end(),
                         std::uint64_t{0});
}

PipelineRun lyndon_bwt_run(std::span<const Byte> text, const PipelineConfig& config) {
  if (config.chunk_factors < 1 || config.parallel_groups < 1 ||
      config.rank_checkpoint < 1)
    throw std::invalid_argument("pipeline configuration counts must be at least 1");

  PipelineRun run;
  const Factorization factorization = duval_factorize(text);
  run.stats.k = factorization.factor_count();
  for (const FactorSpan& s : factorization.spans)
    run.stats.max_factor_len = std::max<std::size_t>(run.stats.max_factor_len, s.length());

  const auto chunks = chunk_spans(factorization.spans, config.chunk_factors);
  if (chunks.empty()) {
    run.transform = empty_transform(config.emit_sa);
    return run;
  }

  const std::size_t groups = std::min<std::size_t>(config.parallel_groups, chunks.size());
  if (groups <= 1) {
    run.transform = fold_window(text, chunks, config.emit_sa, config.rank_checkpoint,
                                run.stats.per_iteration_work);
  } else {
    // Partition the chunk list into contiguous groups; each group's local
    // transform is independent of the others, which is the parallel unit.
    std::vector<std::span<const FactorSpan>> parts(groups);
    const std::size_t base = chunks.size() / groups;
    const std::size_t extra = chunks.size() % groups;
    std::size_t at = 0;
    for (std::size_t g = 0; g < groups; ++g) {
      const std::size_t len = base + (g < extra ? 1 : 0);
      parts[g] = std::span<const FactorSpan>(chunks).subspan(at, len);
      at += len;
    }

    std::vector<MergedTransform> partial(groups);
    std::vector<std::vector<std::uint64_t>> group_works(groups);
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t g = 0; g < static_cast<std::ptrdiff_t>(groups); ++g) {
      partial[g] = fold_window(text, parts[g], /*with_sa=*/true,
                               config.rank_checkpoint, group_works[g]);
    }
    for (const auto& w : group_works)
      run.stats.per_iteration_work.insert(run.stats.per_iteration_work.end(),
                                          w.begin(), w.end());

    // Pairwise tree reduction; sibling merges are independent.
    while (partial.size() > 1) {
      const std::size_t pairs = partial.size() / 2;
      std::vector<MergedTransform> next(pairs + partial.size() % 2);
      std::vector<std::uint64_t> pair_works(pairs, 0);
#pragma omp parallel for schedule(dynamic)
      for (std::ptrdiff_t p = 0; p < static_cast<std::ptrdiff_t>(pairs); ++p) {
        const BlockSort right = block_from_transform(std::move(partial[2 * p + 1]));
        next[p] = merge_block(text, std::move(partial[2 * p]), right,
                              config.rank_checkpoint, pair_works[p]);
      }
      if (partial.size() % 2) next.back() = std::move(partial.back());
      partial = std::move(next);
      run.stats.per_iteration_work.insert(run.stats.per_iteration_work.end(),
                                          pair_works.begin(), pair_works.end());
    }
    run.transform = std::move(partial.front());
    if (!config.emit_sa) {
      run.transform.sa.clear();
      run.transform.with_sa = false;
    }
  }
  run.stats.iterations = run.stats.per_iteration_work.size();
  return run;
}

MergedTransform lyndon_bwt(std::span<const Byte> text, const PipelineConfig& config) {
  return lyndon_bwt_run(text, config).transform;
}

MergedTransform merge_groups(std::span<const Byte> text, const MergedTransform& left,
                             const BlockSort& right) {
  const std::uint32_t cut = left.window.end;
  bool at_boundary = cut == 0;
  if (!at_boundary) {
    for (const FactorSpan& s : duval_factorize(text).spans) {
      if (s.end == cut) {
        at_boundary = true;
        break;
      }
      if (s.end > cut) break;
    }
  }
  if (!at_boundary)
    throw std::invalid_argument("group cut inside a Lyndon factor");

  std::uint64_t work = 0;
  MergedTransform acc = left;
  return merge_block(text, std::move(acc), right, RankDict::kDefaultCheckpoint, work);
}

OnlinePipeline::OnlinePipeline(std::span<const Byte> text, bool emit_sa,
                               std::size_t rank_checkpoint)
    : text_(text),
      rank_checkpoint_(rank_checkpoint),
      accumulated_(empty_transform(emit_sa)) {}

void OnlinePipeline::push_factor(FactorSpan factor) {
  if (factor.start != accumulated_.window.end + 1 || factor.end < factor.start ||
      factor.end > text_.size())
    throw std::invalid_argument("non-contiguous factor stream");
  std::uint64_t work = 0;
  const BlockSort block = sort_block(text_, factor, &work);
  accumulated_ =
      merge_block(text_, std::move(accumulated_), block, rank_checkpoint_, work);
  ++factors_consumed_;
}

}  // namespace lynbwt
