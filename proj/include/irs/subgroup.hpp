#pragma once

// Subgroup-level queries on Schreier oracles: the local metric, cylinder
// fingerprints and the finite-radius normaliser test.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "irs/ball.hpp"
#include "irs/oracle.hpp"
#include "irs/rational.hpp"
#include "irs/word.hpp"

namespace irs {

struct MetricResult {
  // First radius at which the balls are not root-isomorphic, if any up to max_radius.
  std::optional<int> first_disagreement;
  int max_radius = 0;

  // 1/(n+1), or 0 when the balls agree up to max_radius (then the true distance
  // is at most 1/(max_radius+2)).
  Rational value() const {
    if (!first_disagreement) return Rational(0);
    return Rational(1, *first_disagreement + 1);
  }
  Rational upper_bound() const {
    return first_disagreement ? value() : Rational(1, max_radius + 2);
  }
};

inline MetricResult metric(const SchreierOracle& a, const SchreierOracle& b, int max_radius,
                           std::size_t budget = kDefaultVertexBudget) {
  if (max_radius < 0) throw DomainError("max_radius must be nonnegative");
  if (a.rank() != b.rank()) return {0, max_radius};
  // Sub-balls of one large ball give the same answer as separate extractions;
  // growing the radius step by step keeps the cost proportional to the answer.
  MetricResult res{std::nullopt, max_radius};
  for (int n = 0; n <= max_radius; ++n) {
    if (!root_isomorphic(ball(a, n, budget), ball(b, n, budget))) {
      res.first_disagreement = n;
      break;
    }
  }
  return res;
}

inline MetricResult metric(const OraclePtr& a, const OraclePtr& b, int max_radius,
                           std::size_t budget = kDefaultVertexBudget) {
  return metric(*a, *b, max_radius, budget);
}

using Fingerprint = std::vector<Word>;

// Every reduced word of length <= radius that lies in the subgroup, shortlex
// sorted. Membership of the subgroup in the cylinder C(F, radius) is equality
// of this list with F.
inline Fingerprint cylinder_fingerprint(const SchreierOracle& o, int radius) {
  if (radius < 0) throw DomainError("radius must be nonnegative");
  const VertexId root = o.root();
  Fingerprint out{Word()};
  // Layer-by-layer walk of the word tree with the current coset carried along.
  struct Node {
    Word w;
    VertexId v;
  };
  std::vector<Node> layer{{Word(), root}};
  const auto letters = letters_of_rank(o.rank());
  for (int len = 1; len <= radius; ++len) {
    std::vector<Node> next;
    next.reserve(layer.size() * (2 * o.rank() - 1));
    for (const Node& node : layer) {
      for (Letter l : letters) {
        if (!node.w.empty() && node.w.letters().back() == l.inverse()) continue;
        Node child{node.w * l, o.neighbor(node.v, l)};
        if (child.v == root) out.push_back(child.w);
        next.push_back(std::move(child));
      }
    }
    layer = std::move(next);
  }
  return out;
}

inline Fingerprint cylinder_fingerprint(const OraclePtr& o, int radius) { return cylinder_fingerprint(*o, radius); }

inline std::string fingerprint_key(const Fingerprint& f) {
  std::string s = "{";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) s += ",";
    s += f[i].to_string();
  }
  return s + "}";
}

enum class TriState { No, ConsistentUpToRadius };

inline const char* to_string(TriState t) { return t == TriState::No ? "no" : "consistent-up-to-radius"; }

// Finite-radius test for g in N(K) \ K. "No" is definitive; the positive answer
// only says no witness of length <= check_radius exists.
inline TriState z_set_member(const SchreierOracle& o, const Word& g, int check_radius) {
  if (check_radius < static_cast<int>(g.size())) throw DomainError("check_radius must be at least |g|");
  if (contains(o, g)) return TriState::No;
  const Word g_inv = g.inverse();
  for (const Word& w : cylinder_fingerprint(o, check_radius))
    if (!contains(o, g * w * g_inv)) return TriState::No;
  return TriState::ConsistentUpToRadius;
}

inline TriState z_set_member(const OraclePtr& o, const Word& g, int check_radius) {
  return z_set_member(*o, g, check_radius);
}

}  // namespace irs
