#pragma once

// Complete finite Schreier graphs (finite-index subgroups), stored as r
// permutation tables.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "irs/ball.hpp"
#include "irs/errors.hpp"
#include "irs/oracle.hpp"

namespace irs {

class FiniteSchreierGraph {
 public:
  FiniteSchreierGraph() = default;

  // perms[i-1][v] is the s_i-successor of v. Names default to "v<k>".
  FiniteSchreierGraph(int rank, std::vector<std::vector<int>> perms, int root,
                      std::vector<VertexId> names = {})
      : rank_(rank), root_(root), out_(std::move(perms)), names_(std::move(names)) {
    check_rank(rank);
    if (static_cast<int>(out_.size()) != rank) throw DomainError("need one permutation per generator");
    const std::size_t n = out_.empty() ? 0 : out_[0].size();
    if (n == 0) throw DomainError("a Schreier graph needs at least one vertex");
    if (root < 0 || static_cast<std::size_t>(root) >= n) throw DomainError("root out of range");
    in_.assign(rank, std::vector<int>(n, kNoVertex));
    for (int i = 0; i < rank; ++i) {
      if (out_[i].size() != n) throw DomainError("permutation tables differ in length");
      for (std::size_t v = 0; v < n; ++v) {
        int t = out_[i][v];
        if (t < 0 || static_cast<std::size_t>(t) >= n || in_[i][t] != kNoVertex)
          throw ValidityError("s" + std::to_string(i + 1) + " is not a permutation of the vertex set");
        in_[i][t] = static_cast<int>(v);
      }
    }
    if (names_.empty()) {
      for (std::size_t v = 0; v < n; ++v) names_.push_back("v" + std::to_string(v));
    }
    if (names_.size() != n) throw DomainError("wrong number of vertex names");
  }

  int rank() const noexcept { return rank_; }
  int root() const noexcept { return root_; }
  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<VertexId>& names() const noexcept { return names_; }
  const VertexId& name(int v) const { return names_.at(v); }

  int step(int v, Letter l) const {
    return l.is_inverse() ? in_[l.generator() - 1][v] : out_[l.generator() - 1][v];
  }
  int step(int v, const Word& w) const {
    for (Letter l : w) v = step(v, l);
    return v;
  }
  const std::vector<int>& permutation(int gen) const { return out_.at(gen - 1); }

  FiniteSchreierGraph rebased(int new_root) const {
    FiniteSchreierGraph g = *this;
    if (new_root < 0 || static_cast<std::size_t>(new_root) >= size()) throw DomainError("root out of range");
    g.root_ = new_root;
    return g;
  }

  // Renames every vertex by its shortlex-least representative word (compact form).
  FiniteSchreierGraph with_shortlex_names() const {
    std::vector<VertexId> names(size());
    std::vector<bool> seen(size(), false);
    std::deque<std::pair<int, Word>> queue{{root_, Word()}};
    seen[root_] = true;
    const auto letters = letters_of_rank(rank_);
    while (!queue.empty()) {
      auto [v, w] = queue.front();
      queue.pop_front();
      names[v] = w.compact();
      for (Letter l : letters) {
        int u = step(v, l);
        if (!seen[u]) {
          seen[u] = true;
          queue.emplace_back(u, w * l);
        }
      }
    }
    for (std::size_t v = 0; v < size(); ++v)
      if (!seen[v]) throw DomainError("Schreier graph is not connected");
    FiniteSchreierGraph g = *this;
    g.names_ = std::move(names);
    return g;
  }

  bool connected() const {
    std::vector<bool> seen(size(), false);
    std::vector<int> stack{root_};
    seen[root_] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int s = 0; s < 2 * rank_; ++s) {
        int u = step(v, Letter::from_slot(s));
        if (!seen[u]) {
          seen[u] = true;
          ++count;
          stack.push_back(u);
        }
      }
    }
    return count == size();
  }

  // As an explicit ball whose radius is the root's eccentricity (no boundary).
  BallView to_ball() const {
    const std::size_t n = size();
    std::vector<int> order{root_}, pos(n);
    for (std::size_t v = 0; v < n; ++v)
      if (static_cast<int>(v) != root_) order.push_back(static_cast<int>(v));
    for (std::size_t k = 0; k < n; ++k) pos[order[k]] = static_cast<int>(k);
    BallView b;
    b.rank = rank_;
    b.distance.assign(n, 0);
    b.boundary.assign(n, false);
    b.out.assign(n * rank_, kNoVertex);
    b.star.assign(n, kNoVertex);
    for (std::size_t k = 0; k < n; ++k) {
      b.vertices.push_back(names_[order[k]]);
      for (int i = 1; i <= rank_; ++i) b.out_edge(static_cast<int>(k), i) = pos[out_[i - 1][order[k]]];
    }
    BallView c = canonicalize(b);
    c.radius = *std::max_element(c.distance.begin(), c.distance.end());
    return c;
  }

  friend bool operator==(const FiniteSchreierGraph&, const FiniteSchreierGraph&) = default;

 private:
  int rank_ = 0;
  int root_ = 0;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
  std::vector<VertexId> names_;
};

// A complete ball (no missing edges, valid) as a finite Schreier graph.
inline FiniteSchreierGraph to_finite_graph(const BallView& b) {
  if (b.star_count() != 0) throw DomainError("graph carries *-edges; not a Schreier graph");
  std::vector<std::vector<int>> perms(b.rank, std::vector<int>(b.size()));
  for (std::size_t v = 0; v < b.size(); ++v)
    for (int i = 1; i <= b.rank; ++i) {
      int t = b.out_edge(static_cast<int>(v), i);
      if (t == kNoVertex) throw DomainError("graph is not complete: " + b.vertices[v] + " lacks s" + std::to_string(i));
      perms[i - 1][v] = t;
    }
  return FiniteSchreierGraph(b.rank, std::move(perms), 0, b.vertices);
}

class FiniteOracle final : public SchreierOracle {
 public:
  explicit FiniteOracle(FiniteSchreierGraph g) : g_(std::move(g)) {
    for (std::size_t v = 0; v < g_.size(); ++v)
      if (!index_.emplace(g_.name(static_cast<int>(v)), static_cast<int>(v)).second)
        throw DomainError("duplicate vertex name " + g_.name(static_cast<int>(v)));
  }

  int rank() const noexcept override { return g_.rank(); }
  VertexId root() const override { return g_.name(g_.root()); }
  VertexId neighbor(const VertexId& v, Letter l) const override {
    auto it = index_.find(v);
    if (it == index_.end()) throw DomainError("unknown vertex " + v);
    return g_.name(g_.step(it->second, l));
  }
  const FiniteSchreierGraph& graph() const noexcept { return g_; }
  int index_of(const VertexId& v) const {
    auto it = index_.find(v);
    return it == index_.end() ? kNoVertex : it->second;
  }

 private:
  FiniteSchreierGraph g_;
  std::unordered_map<VertexId, int> index_;
};

inline OraclePtr make_finite_oracle(FiniteSchreierGraph g) { return std::make_shared<FiniteOracle>(std::move(g)); }

// Parallel traversal: does rebasing at a give the same rooted graph as rebasing at b?
inline bool rooted_equal(const FiniteSchreierGraph& g, int a, const FiniteSchreierGraph& h, int b) {
  if (g.size() != h.size() || g.rank() != h.rank()) return false;
  std::vector<int> fwd(g.size(), kNoVertex), bwd(h.size(), kNoVertex);
  std::vector<int> stack{a};
  fwd[a] = b;
  bwd[b] = a;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    int v = fwd[u];
    for (int s = 0; s < 2 * g.rank(); ++s) {
      Letter l = Letter::from_slot(s);
      int x = g.step(u, l), y = h.step(v, l);
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

// Root-isomorphism class key: successor tables in canonical BFS numbering.
inline std::string canonical_code(const FiniteSchreierGraph& g, int root) {
  std::vector<int> num(g.size(), kNoVertex), order{root};
  num[root] = 0;
  for (std::size_t h = 0; h < order.size(); ++h)
    for (int s = 0; s < 2 * g.rank(); ++s) {
      int u = g.step(order[h], Letter::from_slot(s));
      if (num[u] == kNoVertex) {
        num[u] = static_cast<int>(order.size());
        order.push_back(u);
      }
    }
  std::string code = "r" + std::to_string(g.rank()) + "n" + std::to_string(g.size()) + ":";
  for (int v : order)
    for (int i = 1; i <= g.rank(); ++i) {
      code += std::to_string(num[g.step(v, Letter::gen(i))]);
      code += i == g.rank() ? ';' : ',';
    }
  return code;
}

inline std::string canonical_code(const FiniteSchreierGraph& g) { return canonical_code(g, g.root()); }

// Number of vertices v such that rebasing at v gives a root-isomorphic graph.
// Equals |Aut(g)|, i.e. the index of K in its normaliser.
inline std::size_t aut_count(const FiniteSchreierGraph& g) {
  std::size_t count = 0;
  for (std::size_t v = 0; v < g.size(); ++v)
    if (rooted_equal(g, g.root(), g, static_cast<int>(v))) ++count;
  return count;
}

// Cheap test for |Aut(g)| == 1 that stops at the first nontrivial automorphism.
inline bool has_trivial_automorphism_group(const FiniteSchreierGraph& g) {
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (static_cast<int>(v) == g.root()) continue;
    if (rooted_equal(g, g.root(), g, static_cast<int>(v))) return false;
  }
  return true;
}

}  // namespace irs
