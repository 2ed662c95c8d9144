#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "irs/keyed_hash.hpp"
#include "irs/word.hpp"

namespace irs {

// mt19937_64 with portable range reduction. The standard distributions are
// implementation defined, which would break cross-platform reproducibility.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }
  std::uint64_t below(std::uint64_t n) { return scale_to(eng_(), n); }
  int below(int n) { return static_cast<int>(below(static_cast<std::uint64_t>(n))); }
  // Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(static_cast<std::uint64_t>(i))]);
  }

  std::vector<int> permutation(int n) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    shuffle(p);
    return p;
  }

  Letter letter(int rank) { return Letter::from_slot(below(2 * rank)); }

  // Uniform reduced word of the given length.
  Word word(int rank, int length) {
    Word w;
    while (static_cast<int>(w.size()) < length) {
      Letter l = letter(rank);
      if (!w.empty() && w.letters().back() == l.inverse()) continue;
      w *= l;
    }
    return w;
  }

  // Word of uniform length in [0, max_length], then uniform of that length.
  Word word_up_to(int rank, int max_length) { return word(rank, below(max_length + 1)); }

 private:
  std::mt19937_64 eng_;
};

}  // namespace irs
