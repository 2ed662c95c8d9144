#pragma once

// Stabiliser maps of finite F_r-actions and related finite objects: orbit
// Schreier graphs, stabiliser equality, total non-freeness, first-return maps,
// the cost of a finite graphing, and the law of the stabiliser of a uniform point.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "irs/dynamics/action.hpp"
#include "irs/errors.hpp"
#include "irs/finite_graph.hpp"
#include "irs/graph_law.hpp"
#include "irs/rational.hpp"
#include "irs/word.hpp"

namespace irs {

// The orbit of x with its permutation edges: the Schreier graph of Stab(x).
// Vertices are named by their point numbers.
inline FiniteSchreierGraph orbit_schreier(const FiniteAction& a, int x) {
  if (x < 0 || x >= a.size()) throw DomainError("point out of range");
  std::vector<int> order{x}, num(a.size(), -1);
  num[x] = 0;
  for (std::size_t h = 0; h < order.size(); ++h)
    for (int s = 0; s < 2 * a.rank(); ++s) {
      int y = a.apply(order[h], Letter::from_slot(s));
      if (num[y] < 0) {
        num[y] = static_cast<int>(order.size());
        order.push_back(y);
      }
    }
  std::vector<std::vector<int>> perms(a.rank(), std::vector<int>(order.size()));
  std::vector<VertexId> names;
  for (std::size_t k = 0; k < order.size(); ++k) {
    names.push_back(std::to_string(order[k]));
    for (int i = 1; i <= a.rank(); ++i) perms[i - 1][k] = num[a.perm(i)[order[k]]];
  }
  return FiniteSchreierGraph(a.rank(), std::move(perms), 0, std::move(names));
}

// Stab(x) == Stab(y), by parallel traversal from x and y.
inline bool stab_equal(const FiniteAction& a, int x, int y) {
  if (x < 0 || y < 0 || x >= a.size() || y >= a.size()) throw DomainError("point out of range");
  std::vector<int> fwd(a.size(), -1), bwd(a.size(), -1);
  std::vector<int> stack{x};
  fwd[x] = y;
  bwd[y] = x;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int s = 0; s < 2 * a.rank(); ++s) {
      Letter l = Letter::from_slot(s);
      int p = a.apply(u, l), q = a.apply(fwd[u], l);
      if (fwd[p] < 0 && bwd[q] < 0) {
        fwd[p] = q;
        bwd[q] = p;
        stack.push_back(p);
      } else if (fwd[p] != q || bwd[q] != p) {
        return false;
      }
    }
  }
  return true;
}

// Whether the stabiliser map separates points.
inline bool is_totally_nonfree(const FiniteAction& a) {
  for (int x = 0; x < a.size(); ++x)
    for (int y = x + 1; y < a.size(); ++y)
      if (stab_equal(a, x, y)) return false;
  return true;
}

using SubsetMask = std::vector<bool>;

inline SubsetMask mask_from_bits(std::uint64_t bits, int n) {
  if (n > 64 || (n < 64 && (bits >> n) != 0)) throw DomainError("subset mask has bits beyond the point set");
  SubsetMask m(n);
  for (int i = 0; i < n; ++i) m[i] = (bits >> i) & 1;
  return m;
}

// Accepts a decimal or 0x-prefixed bit mask (bit i = point i) or a list "{0,2,5}".
inline SubsetMask parse_mask(const std::string& text, int n) {
  if (!text.empty() && text.front() == '{') {
    if (text.back() != '}') throw DomainError("unterminated subset '" + text + "'");
    SubsetMask m(n, false);
    std::string body = text.substr(1, text.size() - 2);
    std::size_t pos = 0;
    while (pos < body.size()) {
      std::size_t end = body.find(',', pos);
      if (end == std::string::npos) end = body.size();
      std::string item = body.substr(pos, end - pos);
      try {
        int x = std::stoi(item);
        if (x < 0 || x >= n) throw DomainError("subset point " + item + " out of range");
        m[x] = true;
      } catch (const std::invalid_argument&) {
        throw DomainError("bad subset element '" + item + "'");
      }
      pos = end + 1;
    }
    return m;
  }
  try {
    std::size_t used = 0;
    std::uint64_t bits = std::stoull(text, &used, 0);
    if (used != text.size()) throw DomainError("bad subset mask '" + text + "'");
    return mask_from_bits(bits, n);
  } catch (const std::logic_error&) {
    throw DomainError("bad subset mask '" + text + "'");
  }
}

// For y in Y, the first f^k(y) with k >= 1 that lies in Y; -1 off Y. Walks each
// cycle of f once, mapping every element of Y to the next one along the cycle.
inline std::vector<int> first_return(const std::vector<int>& f, const SubsetMask& y) {
  const int n = static_cast<int>(f.size());
  if (static_cast<int>(y.size()) != n) throw DomainError("subset and permutation sizes differ");
  std::vector<bool> seen(n, false);
  for (int x : f) {
    if (x < 0 || x >= n || seen[x]) throw DomainError("first_return needs a permutation");
    seen[x] = true;
  }
  bool any = false;
  for (bool b : y) any = any || b;
  if (!any) throw DomainError("first_return needs a nonempty subset");
  std::vector<int> out(n, -1);
  std::fill(seen.begin(), seen.end(), false);
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<int> hits;
    int x = start;
    do {
      seen[x] = true;
      if (y[x]) hits.push_back(x);
      x = f[x];
    } while (x != start);
    for (std::size_t k = 0; k < hits.size(); ++k) out[hits[k]] = hits[(k + 1) % hits.size()];
  }
  return out;
}

// Sum over generators of the uniform measure of its domain.
inline Rational graphing_cost(const FiniteAction& a, const std::vector<SubsetMask>& domains) {
  if (static_cast<int>(domains.size()) != a.rank()) throw DomainError("need one domain per generator");
  long long count = 0;
  for (const auto& d : domains) {
    if (static_cast<int>(d.size()) != a.size()) throw DomainError("domain mask has the wrong size");
    for (bool b : d) count += b;
  }
  return Rational(count, a.size());
}

// Law of Stab(x) for a uniform point x, atoms grouped by root-isomorphism class.
inline GraphLaw stab_pushforward_law(const FiniteAction& a) {
  GraphLaw law;
  const Rational w(1, a.size());
  for (int x = 0; x < a.size(); ++x) {
    FiniteSchreierGraph g = orbit_schreier(a, x);
    law.add(canonical_code(g), w, g);
  }
  return law;
}

struct FixedWord {
  Word word;
  std::vector<int> fixed_points;
};

// Shortlex-first nontrivial reduced word of length <= max_length fixing some
// point. Finds a witness when one exists that short; says nothing otherwise.
inline std::optional<FixedWord> fixed_word_search(const FiniteAction& a, int max_length = 8) {
  if (max_length < 1) return std::nullopt;
  const int n = a.size();
  struct Node {
    Word w;
    std::vector<int> image;  // x . w for every point x
  };
  std::vector<int> id(n);
  for (int x = 0; x < n; ++x) id[x] = x;
  std::vector<Node> layer{{Word(), id}};
  for (int len = 1; len <= max_length; ++len) {
    std::vector<Node> next;
    for (const Node& node : layer) {
      for (int s = 0; s < 2 * a.rank(); ++s) {
        Letter l = Letter::from_slot(s);
        if (!node.w.empty() && node.w.letters().back() == l.inverse()) continue;
        Node child{node.w * l, node.image};
        for (int& y : child.image) y = a.apply(y, l);
        std::vector<int> fixed;
        for (int x = 0; x < n; ++x)
          if (child.image[x] == x) fixed.push_back(x);
        if (!fixed.empty()) return FixedWord{child.w, fixed};
        next.push_back(std::move(child));
      }
    }
    layer = std::move(next);
  }
  return std::nullopt;
}

}  // namespace irs
