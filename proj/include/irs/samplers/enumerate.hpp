#pragma once

// Exact law of the normaliser construction over a finite base, by enumerating
// every mark assignment and every root slot with rational weights.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "irs/atomic_measure.hpp"
#include "irs/errors.hpp"
#include "irs/finite_graph.hpp"
#include "irs/graph_law.hpp"
#include "irs/rational.hpp"
#include "irs/samplers/mark_law.hpp"
#include "irs/samplers/normalizer.hpp"

namespace irs {

inline constexpr std::size_t kDefaultEnumerationBudget = 20'000'000;

// The perturbed graph for one mark assignment; root_slot is ignored when the
// root coset is unmarked.
inline FiniteSchreierGraph normalizer_outcome(const FiniteSchreierGraph& base, const std::vector<int>& marks,
                                              int root_slot) {
  const int r = base.rank();
  const std::size_t n = base.size();
  std::vector<int> first(n);
  std::vector<VertexId> names;
  int k = 0;
  for (std::size_t c = 0; c < n; ++c) {
    first[c] = k;
    if (marks[c] == 0) {
      names.push_back(NormalizerVertex{base.name(static_cast<int>(c)), std::nullopt}.token());
      k += 1;
    } else {
      for (int s = 0; s < 3; ++s) names.push_back(NormalizerVertex{base.name(static_cast<int>(c)), s}.token());
      k += 3;
    }
  }
  std::vector<std::vector<int>> perms(r, std::vector<int>(k));
  for (int i = 1; i <= r; ++i) {
    for (std::size_t c = 0; c < n; ++c) {
      // Edges that leave the coset land on the first vertex of the target coset,
      // which is slot 0 when it is marked.
      const int exit = first[base.step(static_cast<int>(c), Letter::gen(i))];
      if (marks[c] == 0) {
        perms[i - 1][first[c]] = exit;
        continue;
      }
      for (int s = 0; s < 3; ++s) {
        auto inside = tripled_forward(marks[c], i, s);
        perms[i - 1][first[c] + s] = inside ? first[c] + *inside : exit;
      }
    }
  }
  const int c0 = base.root();
  const int root = first[c0] + (marks[c0] == 0 ? 0 : root_slot);
  return FiniteSchreierGraph(r, std::move(perms), root, std::move(names));
}

namespace detail {

inline void check_enumeration_budget(const FiniteSchreierGraph& base, std::size_t budget) {
  long double count = 1;
  for (std::size_t c = 0; c < base.size(); ++c) count *= base.rank() + 1;
  if (count * 3 > static_cast<long double>(budget))
    throw ResourceError("enumeration of " + std::to_string(static_cast<unsigned long long>(count)) +
                        " mark assignments exceeds the budget of " + std::to_string(budget));
}

// Calls fn(marks, root_marked, marked_elsewhere) for every mark assignment.
template <typename Fn>
void for_each_mark_vector(const FiniteSchreierGraph& base, Fn fn) {
  const int r = base.rank();
  const std::size_t n = base.size();
  const int c0 = base.root();
  std::vector<int> marks(n, 0);
  while (true) {
    std::size_t marked = 0;
    for (std::size_t c = 0; c < n; ++c) marked += static_cast<int>(c) != c0 && marks[c] != 0;
    fn(marks, marks[c0] != 0, marked);
    std::size_t c = 0;
    while (c < n && marks[c] == r) marks[c++] = 0;
    if (c == n) break;
    ++marks[c];
  }
}

// Probability of one assignment given whether the root is marked and how many
// other cosets are, indexed [root_marked][marked_elsewhere].
inline std::vector<std::vector<Rational>> marking_weights(const FiniteSchreierGraph& base, const MarkLaw& law) {
  const std::size_t n = base.size();
  std::vector<std::vector<Rational>> w(2, std::vector<Rational>(n));
  const Rational zero = law.mass(0, false), pos = law.mass(1, false);
  for (std::size_t m = 0; m < n; ++m) {
    Rational other = 1;
    for (std::size_t j = 0; j + 1 < n; ++j) other *= j < m ? pos : zero;
    w[0][m] = law.mass(0, true) * other;
    w[1][m] = law.mass(1, true) * other;
  }
  return w;
}

}  // namespace detail

// Calls fn(marks, probability) for every mark assignment of `base` with
// nonzero probability under the construction (u_q at the root, u_p elsewhere).
inline void for_each_marking(const FiniteSchreierGraph& base, const MarkLaw& law,
                             const std::function<void(const std::vector<int>&, const Rational&)>& fn,
                             std::size_t budget = kDefaultEnumerationBudget) {
  detail::check_enumeration_budget(base, budget);
  const auto w = detail::marking_weights(base, law);
  detail::for_each_mark_vector(base, [&](const std::vector<int>& marks, bool root_marked, std::size_t marked) {
    fn(marks, w[root_marked][marked]);
  });
}

// Exact law over root-isomorphism classes of outputs, for a base law given as
// finitely many rooted finite graphs with rational masses.
inline GraphLaw enumerate_normalizer_law(const GraphLaw& base_law, const Rational& p,
                                         std::size_t budget = kDefaultEnumerationBudget) {
  GraphLaw out;
  std::size_t used = 0;
  for (const auto& [key, atom] : base_law) {
    const FiniteSchreierGraph& base = atom.representative;
    MarkLaw law(p, base.rank());
    for_each_marking(
        base, law,
        [&](const std::vector<int>& marks, const Rational& w) {
          if (marks[base.root()] == 0) {
            FiniteSchreierGraph g = normalizer_outcome(base, marks, 0);
            out.add(canonical_code(g), atom.mass * w, g);
            return;
          }
          const Rational third = atom.mass * w / 3;
          for (int s = 0; s < 3; ++s) {
            FiniteSchreierGraph g = normalizer_outcome(base, marks, s);
            out.add(canonical_code(g), third, g);
          }
        },
        budget - std::min(used, budget));
    long double count = 1;
    for (std::size_t c = 0; c < base.size(); ++c) count *= base.rank() + 1;
    used += static_cast<std::size_t>(count * 3);
  }
  return out;
}

inline GraphLaw enumerate_normalizer_law(const FiniteSchreierGraph& base, const Rational& p,
                                         std::size_t budget = kDefaultEnumerationBudget) {
  return enumerate_normalizer_law(point_mass(base), p, budget);
}

namespace detail {

// Successor tables of normalizer_outcome without vertex names, in reusable buffers.
// out[v * r + i - 1] and in[v * r + i - 1] are the s_i- and s_i^-1-neighbours of v.
struct OutcomeTables {
  std::vector<int> first, out, in;
  int size = 0;
  int rank = 0;

  void build(const FiniteSchreierGraph& base, const std::vector<int>& marks) {
    rank = base.rank();
    const std::size_t n = base.size();
    first.resize(n);
    size = 0;
    for (std::size_t c = 0; c < n; ++c) {
      first[c] = size;
      size += marks[c] == 0 ? 1 : 3;
    }
    out.assign(static_cast<std::size_t>(size) * rank, 0);
    in.assign(static_cast<std::size_t>(size) * rank, 0);
    for (int i = 1; i <= rank; ++i)
      for (std::size_t c = 0; c < n; ++c) {
        const int exit = first[base.step(static_cast<int>(c), Letter::gen(i))];
        const int slots = marks[c] == 0 ? 1 : 3;
        for (int s = 0; s < slots; ++s) {
          auto inside = marks[c] == 0 ? std::nullopt : tripled_forward(marks[c], i, s);
          const int v = first[c] + s, t = inside ? first[c] + *inside : exit;
          out[static_cast<std::size_t>(v) * rank + i - 1] = t;
          in[static_cast<std::size_t>(t) * rank + i - 1] = v;
        }
      }
  }

  int step(int v, int slot) const {
    const std::size_t k = static_cast<std::size_t>(v) * rank + slot / 2;
    return slot % 2 ? in[k] : out[k];
  }

  // Same traversal as rooted_equal, on the tables.
  bool rooted_equal(int a, int b, std::vector<int>& fwd, std::vector<int>& bwd, std::vector<int>& stack) const {
    fwd.assign(size, kNoVertex);
    bwd.assign(size, kNoVertex);
    stack.assign(1, a);
    fwd[a] = b;
    bwd[b] = a;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      const int v = fwd[u];
      for (int s = 0; s < 2 * rank; ++s) {
        const int x = step(u, s), y = step(v, s);
        if (fwd[x] == kNoVertex && bwd[y] == kNoVertex) {
          fwd[x] = y;
          bwd[y] = x;
          stack.push_back(x);
        } else if (fwd[x] != y || bwd[y] != x) {
          return false;
        }
      }
    }
    return true;
  }
};

}  // namespace detail

// Mass of outputs whose automorphism group is trivial, i.e. whose subgroup is
// self-normalising. Automorphism counts do not depend on the root, so only
// mark assignments are enumerated.
inline Rational self_normalizing_mass(const GraphLaw& base_law, const Rational& p,
                                      std::size_t budget = kDefaultEnumerationBudget) {
  Rational total = 0;
  detail::OutcomeTables t;
  std::vector<int> fwd, bwd, stack;
  for (const auto& [key, atom] : base_law) {
    const FiniteSchreierGraph& base = atom.representative;
    detail::check_enumeration_budget(base, budget);
    // Count self-normalising outcomes per weight class, then weigh once.
    std::vector<std::vector<std::uint64_t>> hits(2, std::vector<std::uint64_t>(base.size(), 0));
    detail::for_each_mark_vector(base, [&](const std::vector<int>& marks, bool root_marked, std::size_t marked) {
      t.build(base, marks);
      const int root = t.first[base.root()];
      for (int v = 0; v < t.size; ++v)
        if (v != root && t.rooted_equal(root, v, fwd, bwd, stack)) return;
      ++hits[root_marked][marked];
    });
    const auto w = detail::marking_weights(base, MarkLaw(p, base.rank()));
    for (int b = 0; b < 2; ++b)
      for (std::size_t m = 0; m < base.size(); ++m)
        if (hits[b][m]) total += atom.mass * w[b][m] * static_cast<unsigned long long>(hits[b][m]);
  }
  return total;
}

// Cyclic base of index n: s1 acts as an n-cycle, the other generators trivially.
inline FiniteSchreierGraph cyclic_base(int n, int rank = 2) {
  if (n < 1) throw DomainError("cyclic base needs at least one vertex");
  std::vector<std::vector<int>> perms(rank, std::vector<int>(n));
  for (int v = 0; v < n; ++v) {
    perms[0][v] = (v + 1) % n;
    for (int i = 1; i < rank; ++i) perms[i][v] = v;
  }
  return FiniteSchreierGraph(rank, std::move(perms), 0).with_shortlex_names();
}

}  // namespace irs
