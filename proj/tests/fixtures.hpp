#pragma once

// Shared graphs and brute-force reference implementations for the tests.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "irs/irs.hpp"

namespace fixtures {

inline std::string data(const std::string& name) { return std::string(IRS_DATA_DIR) + "/" + name; }

// s1 swaps the two cosets, s2 fixes both; root 0.
inline irs::FiniteSchreierGraph index2() {
  return irs::FiniteSchreierGraph(2, {{1, 0}, {0, 1}}, 0, {"A", "B"});
}

// Free reduction by repeated scanning for adjacent inverse pairs.
inline std::vector<irs::Letter> slow_reduce(std::vector<irs::Letter> w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i].inverse() == w[i + 1]) {
        w.erase(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(i) + 2);
        changed = true;
        break;
      }
    }
  }
  return w;
}

// Automorphism group order by trying every vertex permutation.
inline std::size_t brute_aut_count(const irs::FiniteSchreierGraph& g) {
  std::vector<int> sigma(g.size());
  std::iota(sigma.begin(), sigma.end(), 0);
  std::size_t count = 0;
  do {
    bool ok = true;
    for (int i = 1; i <= g.rank() && ok; ++i)
      for (int v = 0; v < static_cast<int>(g.size()) && ok; ++v)
        ok = sigma[g.step(v, irs::Letter::gen(i))] == g.step(sigma[v], irs::Letter::gen(i));
    count += ok;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return count;
}

// First return by iterating f until the orbit re-enters Y.
inline std::vector<int> brute_first_return(const std::vector<int>& f, const std::vector<bool>& y) {
  std::vector<int> out(f.size(), -1);
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (!y[x]) continue;
    int z = f[x];
    while (!y[z]) z = f[z];
    out[x] = z;
  }
  return out;
}

// Uniformly random rooted finite Schreier graph, restricted to the root's orbit.
inline irs::FiniteSchreierGraph random_finite_graph(int rank, int n, irs::Rng& rng) {
  irs::FiniteAction a = irs::random_action(rank, n, rng);
  return irs::orbit_schreier(a, rng.below(n));
}

// Random labelled action of F_2 on n points over an alphabet of size k.
inline std::shared_ptr<const irs::LabeledAction> random_space(int n, int k, irs::Rng& rng) {
  std::vector<int> labels(n);
  for (int& l : labels) l = 1 + rng.below(k);
  return std::make_shared<irs::LabeledAction>(k, irs::random_action(2, n, rng), labels);
}

}  // namespace fixtures
