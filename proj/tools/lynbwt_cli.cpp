#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "lynbwt/encoding.hpp"
#include "lynbwt/lyndon.hpp"
#include "lynbwt/oracle.hpp"
#include "lynbwt/pipeline.hpp"

namespace {

using namespace lynbwt;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInput = 2;
constexpr int kExitMalformed = 3;

Bytes read_input(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    ss << in.rdbuf();
  }
  const std::string& s = ss.str();
  return Bytes(s.begin(), s.end());
}

void reject_nul(const Bytes& text) {
  if (std::find(text.begin(), text.end(), Byte{0}) != text.end())
    throw std::runtime_error("NUL byte in input");
}

void write_stdout(std::span<const Byte> data) {
  std::fwrite(data.data(), 1, data.size(), stdout);
}

OutputEncoding make_encoding(const std::string& mode, const std::string& sentinel) {
  OutputEncoding enc;
  if (mode == "raw") enc.mode = EncodingMode::kRaw;
  else if (mode == "ascii") enc.mode = EncodingMode::kAscii;
  else enc.mode = EncodingMode::kHex;
  if (sentinel == "escaped") enc.sentinel = SentinelPolicy::kEscaped;
  else if (sentinel == "indexed") enc.sentinel = SentinelPolicy::kIndexed;
  else  // default: ascii carries its '$' in-band, binary modes use the header
    enc.sentinel = enc.mode == EncodingMode::kAscii ? SentinelPolicy::kEscaped
                                                    : SentinelPolicy::kIndexed;
  return enc;
}

std::vector<std::uint32_t> parse_list(const std::string& csv) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(static_cast<std::uint32_t>(std::stoul(item)));
  }
  if (out.empty()) throw std::runtime_error("empty list: " + csv);
  return out;
}

int cmd_factorize(const std::string& path) {
  const Bytes text = read_input(path);
  for (const FactorSpan& f : duval_factorize(text).spans) {
    std::printf("%u\t%u\t", f.start, f.end);
    std::fwrite(text.data() + f.start - 1, 1, f.length(), stdout);
    std::printf("\n");
  }
  return kExitOk;
}

int cmd_bwt(const std::string& path, const std::string& method,
            std::uint32_t chunk_factors, std::uint32_t parallel,
            const std::string& mode, const std::string& sentinel, bool emit_sa) {
  const Bytes text = read_input(path);
  reject_nul(text);

  std::vector<Sym> bwt;
  std::vector<std::uint32_t> sa;
  if (method == "naive") {
    bwt = oracle::naive_bwt(text);
    if (emit_sa) sa = oracle::naive_sa(text);
  } else {
    PipelineConfig config;
    config.chunk_factors = chunk_factors;
    config.parallel_groups = parallel;
    config.emit_sa = emit_sa;
    MergedTransform t = lyndon_bwt(text, config);
    bwt = std::move(t.bwt);
    sa = std::move(t.sa);
  }

  const OutputEncoding enc = make_encoding(mode, sentinel);
  const Bytes payload = encode_bwt(bwt, enc);
  write_stdout(payload);
  if (enc.mode != EncodingMode::kRaw || emit_sa) std::printf("\n");
  if (emit_sa) {
    for (std::uint32_t v : sa) std::printf("%u\n", v);
  }
  return kExitOk;
}

int cmd_unbwt(const std::string& path, const std::string& mode,
              const std::string& sentinel) {
  Bytes data = read_input(path);
  // bwt's ascii output ends with a convenience newline; drop exactly one
  if (mode == "ascii" && !data.empty() && data.back() == '\n') data.pop_back();
  const std::vector<Sym> bwt = decode_bwt(data, make_encoding(mode, sentinel));
  const Bytes text = oracle::inverse_bwt(bwt);
  write_stdout(text);
  return kExitOk;
}

bool lyndon_matches_naive(const Bytes& text, bool inject_fault) {
  const std::vector<Sym> expected_bwt = oracle::naive_bwt(text);
  const std::vector<std::uint32_t> expected_sa = oracle::naive_sa(text);
  const PipelineConfig configs[] = {
      {.chunk_factors = 1, .emit_sa = true, .parallel_groups = 1},
      {.chunk_factors = 2, .emit_sa = true, .parallel_groups = 2},
      {.chunk_factors = 5, .emit_sa = true, .parallel_groups = 4},
  };
  for (const PipelineConfig& config : configs) {
    MergedTransform t = lyndon_bwt(text, config);
    if (inject_fault && !t.bwt.empty()) t.bwt.back() ^= 1;
    if (t.bwt != expected_bwt || t.sa != expected_sa) return false;
  }
  return true;
}

void dump_counterexample(const Bytes& text) {
  std::fprintf(stderr, "mismatch on %zu-byte input:\n", text.size());
  std::string hex, printable;
  for (Byte b : text) {
    char buf[4];
    std::snprintf(buf, sizeof buf, "%02x ", b);
    hex += buf;
    printable += (b >= 0x20 && b < 0x7F) ? static_cast<char>(b) : '.';
  }
  std::fprintf(stderr, "  hex: %s\n  txt: %s\n", hex.c_str(), printable.c_str());
}

int cmd_verify(const std::string& path, std::uint32_t samples, bool inject_fault) {
  Bytes text = read_input(path);
  reject_nul(text);

  std::uint64_t seed = 1469598103934665603ull;
  for (Byte b : text) seed = (seed ^ b) * 1099511628211ull;
  std::mt19937_64 rng(seed);

  auto failing = [&](const Bytes& t) { return !lyndon_matches_naive(t, inject_fault); };

  Bytes bad;
  bool found = false;
  if (failing(text)) {
    bad = text;
    found = true;
  }
  for (std::uint32_t s = 0; !found && s < samples; ++s) {
    Bytes mut = text;
    const std::size_t edits = 1 + rng() % 3;
    for (std::size_t e = 0; e < edits; ++e) {
      const int op = mut.empty() ? 1 : static_cast<int>(rng() % 3);
      const Byte b = static_cast<Byte>(1 + rng() % 255);
      if (op == 0) {
        mut[rng() % mut.size()] = b;
      } else if (op == 1) {
        mut.insert(mut.begin() + static_cast<std::ptrdiff_t>(rng() % (mut.size() + 1)), b);
      } else {
        mut.erase(mut.begin() + static_cast<std::ptrdiff_t>(rng() % mut.size()));
      }
    }
    if (failing(mut)) {
      bad = std::move(mut);
      found = true;
    }
  }
  if (!found) {
    std::printf("ok: lyndon and naive transforms agree on %u sample(s)\n", samples + 1);
    return kExitOk;
  }

  // Greedy shrink: drop bytes while the disagreement persists.
  bool shrunk = true;
  while (shrunk) {
    shrunk = false;
    for (std::size_t i = 0; i < bad.size(); ++i) {
      Bytes smaller = bad;
      smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(i));
      if (failing(smaller)) {
        bad = std::move(smaller);
        shrunk = true;
        break;
      }
    }
  }
  dump_counterexample(bad);
  return kExitMismatch;
}

int cmd_bench(const std::string& path, const std::string& chunk_list,
              const std::string& parallel_list, std::uint32_t repeat) {
  const Bytes text = read_input(path);
  reject_nul(text);
  const auto chunks = parse_list(chunk_list);
  const auto parallels = parse_list(parallel_list);

  std::printf("config,k,M,time_ns,total_work\n");
  for (std::uint32_t c : chunks) {
    for (std::uint32_t p : parallels) {
      for (std::uint32_t r = 0; r < repeat; ++r) {
        PipelineConfig config;
        config.chunk_factors = c;
        config.parallel_groups = p;
        const auto start = std::chrono::steady_clock::now();
        const PipelineRun run = lyndon_bwt_run(text, config);
        const auto stop = std::chrono::steady_clock::now();
        const auto ns =
            std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count();
        std::printf("chunk=%u;parallel=%u,%zu,%zu,%lld,%llu\n", c, p, run.stats.k,
                    run.stats.max_factor_len, static_cast<long long>(ns),
                    static_cast<unsigned long long>(run.stats.total_work()));
      }
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Burrows-Wheeler transform and suffix array via Lyndon factorization"};
  app.require_subcommand(1);

  std::string path = "-";
  std::string method = "lyndon";
  std::string mode = "raw";
  std::string sentinel = "default";
  std::string chunk_list = "1";
  std::string parallel_list = "1";
  std::uint32_t chunk_factors = 1;
  std::uint32_t parallel = 1;
  std::uint32_t samples = 20;
  std::uint32_t repeat = 1;
  bool emit_sa = false;
  bool inject_fault = false;

  auto* fac = app.add_subcommand("factorize", "print the Lyndon factorization");
  fac->add_option("file", path, "input file, - for stdin");

  auto* bwt = app.add_subcommand("bwt", "compute the BWT (and optionally the SA)");
  bwt->add_option("file", path, "input file, - for stdin");
  bwt->add_option("--method", method, "lyndon or naive")
      ->check(CLI::IsMember({"lyndon", "naive"}));
  bwt->add_option("--chunk-factors", chunk_factors, "Lyndon factors per block")
      ->check(CLI::PositiveNumber);
  bwt->add_option("--parallel", parallel, "parallel factor groups")
      ->check(CLI::PositiveNumber);
  bwt->add_option("--encoding", mode, "raw, ascii or hex")
      ->check(CLI::IsMember({"raw", "ascii", "hex"}));
  bwt->add_option("--sentinel", sentinel, "escaped or indexed")
      ->check(CLI::IsMember({"escaped", "indexed", "default"}));
  bwt->add_flag("--emit-sa", emit_sa, "append the suffix array, one value per line");

  auto* unbwt = app.add_subcommand("unbwt", "invert a BWT back to the original bytes");
  unbwt->add_option("file", path, "input file, - for stdin");
  unbwt->add_option("--encoding", mode, "raw, ascii or hex")
      ->check(CLI::IsMember({"raw", "ascii", "hex"}));
  unbwt->add_option("--sentinel", sentinel, "escaped or indexed")
      ->check(CLI::IsMember({"escaped", "indexed", "default"}));

  auto* verify = app.add_subcommand("verify", "compare the incremental and naive transforms");
  verify->add_option("file", path, "input file, - for stdin");
  verify->add_option("--samples", samples, "number of random mutations to also check");
  verify->add_flag("--inject-fault", inject_fault, "corrupt the pipeline output (test hook)")
      ->group("");

  auto* bench = app.add_subcommand("bench", "time the pipeline across configurations");
  bench->add_option("file", path, "input file, - for stdin");
  bench->add_option("--chunk-factors", chunk_list, "comma-separated chunk sizes");
  bench->add_option("--parallel", parallel_list, "comma-separated group counts");
  bench->add_option("--repeat", repeat, "repetitions per configuration")
      ->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    if (fac->parsed()) return cmd_factorize(path);
    if (bwt->parsed())
      return cmd_bwt(path, method, chunk_factors, parallel, mode, sentinel, emit_sa);
    if (unbwt->parsed()) {
      try {
        return cmd_unbwt(path, mode, sentinel);
      } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitMalformed;
      }
    }
    if (verify->parsed()) return cmd_verify(path, samples, inject_fault);
    if (bench->parsed()) return cmd_bench(path, chunk_list, parallel_list, repeat);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInput;
  }
  return kExitOk;
}
