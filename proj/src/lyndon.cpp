#include "lynbwt/lyndon.hpp"

#include <stdexcept>

namespace lynbwt {

namespace {

// One Duval phase starting at i: scans with positions j (ahead) and k
// (periodic shadow) until the repetition of the current Lyndon prefix
// breaks, then emits whole periods of length j - k. Each scan step costs
// exactly one symbol comparison, including the breaking one.
template <typename Emit>
void duval_scan(std::span<const Byte> text, std::uint64_t& comparisons,
                Emit&& emit) {
  const std::size_t n = text.size();
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i + 1;
    std::size_t k = i;
    while (j < n) {
      ++comparisons;
      if (text[k] < text[j]) {
        k = i;
      } else if (text[k] == text[j]) {
        ++k;
      } else {
        break;
      }
      ++j;
    }
    const std::size_t period = j - k;
    while (i <= k) {
      emit(FactorSpan{static_cast<std::uint32_t>(i + 1),
                      static_cast<std::uint32_t>(i + period)});
      i += period;
    }
  }
}

}  // namespace

Factorization duval_factorize_counted(std::span<const Byte> text,
                                      std::uint64_t& comparisons) {
  Factorization out;
  comparisons = 0;
  duval_scan(text, comparisons, [&](FactorSpan s) { out.spans.push_back(s); });
  return out;
}

Factorization duval_factorize(std::span<const Byte> text) {
  std::uint64_t ignored = 0;
  return duval_factorize_counted(text, ignored);
}

void duval_factorize_stream(std::span<const Byte> text,
                            const std::function<void(FactorSpan)>& emit) {
  std::uint64_t ignored = 0;
  duval_scan(text, ignored, [&](FactorSpan s) { emit(s); });
}

bool is_lyndon(std::span<const Byte> word) {
  if (word.empty()) return false;
  // A word is Lyndon iff the first Duval phase spans it in one period.
  const std::size_t n = word.size();
  std::size_t j = 1;
  std::size_t k = 0;
  while (j < n) {
    if (word[k] < word[j]) {
      k = 0;
    } else if (word[k] == word[j]) {
      ++k;
    } else {
      return false;  // a smaller proper suffix starts inside
    }
    ++j;
  }
  return j - k == n;
}

Rotation least_rotation(std::span<const Byte> word) {
  if (word.empty()) throw std::invalid_argument("empty word has no rotation");
  const std::size_t n = word.size();
  // Booth's algorithm over the doubled word, failure function f.
  std::vector<std::ptrdiff_t> f(2 * n, -1);
  std::size_t least = 0;
  for (std::size_t j = 1; j < 2 * n; ++j) {
    const Byte c = word[j % n];
    std::ptrdiff_t i = f[j - least - 1];
    while (i != -1 && c != word[(least + i + 1) % n]) {
      if (c < word[(least + i + 1) % n]) least = j - i - 1;
      i = f[i];
    }
    if (c != word[(least + i + 1) % n]) {
      if (c < word[least % n]) least = j;
      f[j - least] = -1;
    } else {
      f[j - least] = i + 1;
    }
  }
  least %= n;  // non-primitive words repeat; keep the smallest shift

  Rotation out;
  out.shift = least;
  out.rotation.reserve(n);
  out.rotation.insert(out.rotation.end(), word.begin() + least, word.end());
  out.rotation.insert(out.rotation.end(), word.begin(), word.begin() + least);
  return out;
}

}  // namespace lynbwt
