#pragma once

// Explicit finite views of rooted labelled graphs: radius-r balls around the
// root, possibly carrying undirected *-edges.

#include <cstddef>
#include <deque>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "irs/errors.hpp"
#include "irs/oracle.hpp"

namespace irs {

inline constexpr std::size_t kDefaultVertexBudget = 1'000'000;
inline constexpr int kNoVertex = -1;

// Vertices are indexed in canonical BFS order (root = 0). BFS visits, for each
// vertex, the out- and in-edge of s1, then of s2, ..., then the *-edge.
struct BallView {
  int rank = 0;
  int radius = 0;
  std::vector<VertexId> vertices;
  std::vector<int> distance;
  std::vector<bool> boundary;
  // out[v * rank + (i-1)]: target of the s_i edge leaving v, or kNoVertex.
  std::vector<int> out;
  // star[v]: the other end of v's *-edge, or kNoVertex.
  std::vector<int> star;

  std::size_t size() const noexcept { return vertices.size(); }
  int out_edge(int v, int gen) const { return out[static_cast<std::size_t>(v) * rank + gen - 1]; }
  int& out_edge(int v, int gen) { return out[static_cast<std::size_t>(v) * rank + gen - 1]; }

  std::size_t star_count() const {
    std::size_t n = 0;
    for (int s : star) n += s != kNoVertex;
    return n / 2;
  }

  bool has_boundary() const {
    for (bool b : boundary)
      if (b) return true;
    return false;
  }

  // Per-label in-edge lists, out-edges reversed.
  std::vector<std::vector<int>> in_lists() const {
    std::vector<std::vector<int>> in(size() * rank);
    for (std::size_t v = 0; v < size(); ++v)
      for (int i = 1; i <= rank; ++i)
        if (int t = out_edge(static_cast<int>(v), i); t != kNoVertex) in[t * rank + i - 1].push_back(static_cast<int>(v));
    return in;
  }

  int index_of(const VertexId& token) const {
    for (std::size_t v = 0; v < size(); ++v)
      if (vertices[v] == token) return static_cast<int>(v);
    return kNoVertex;
  }

  friend bool operator==(const BallView&, const BallView&) = default;
};

namespace detail {

// Neighbour of v along letter l inside the view, or kNoVertex. Requires
// in-degree at most one per label.
inline int step(const BallView& b, const std::vector<std::vector<int>>& in, int v, Letter l) {
  if (!l.is_inverse()) return b.out_edge(v, l.generator());
  const auto& lst = in[static_cast<std::size_t>(v) * b.rank + l.generator() - 1];
  return lst.empty() ? kNoVertex : lst.front();
}

inline void require_codeterministic(const BallView&, const std::vector<std::vector<int>>& in) {
  for (const auto& lst : in)
    if (lst.size() > 1) throw ValidityError("ball has a vertex with two incoming edges of one label");
}

}  // namespace detail

// Breadth-first exploration of the oracle to graph distance `radius` (all edge
// kinds, *-edges included). Every edge between included vertices is kept. The
// permutation property is asserted on every vertex whose edges are all known.
inline BallView ball(const SchreierOracle& o, int radius, std::size_t budget = kDefaultVertexBudget) {
  if (radius < 0) throw DomainError("ball radius must be nonnegative");
  const int r = o.rank();
  BallView b;
  b.rank = r;
  b.radius = radius;
  std::unordered_map<VertexId, int> index;
  auto add = [&](const VertexId& v, int d) {
    if (b.vertices.size() >= budget)
      throw ResourceError("ball exploration exceeded the vertex budget of " + std::to_string(budget));
    int id = static_cast<int>(b.vertices.size());
    index.emplace(v, id);
    b.vertices.push_back(v);
    b.distance.push_back(d);
    return id;
  };
  add(o.root(), 0);

  // Forward targets of interior vertices, recorded during the search.
  std::vector<std::vector<VertexId>> forward;
  for (std::size_t head = 0; head < b.vertices.size(); ++head) {
    const int d = b.distance[head];
    if (d >= radius) break;  // BFS order: every later vertex is on the boundary too
    const VertexId v = b.vertices[head];
    std::vector<VertexId> fw(r);
    for (int i = 1; i <= r; ++i) {
      for (bool inverse : {false, true}) {
        Letter l(i, inverse);
        VertexId u = o.neighbor(v, l);
        auto back = o.try_neighbor(u, l.inverse());
        if (back && *back != v)
          throw ValidityError("permutation property fails at " + v + " along " + l.to_string());
        if (!index.count(u)) add(u, d + 1);
        if (!inverse) fw[i - 1] = std::move(u);
      }
    }
    if (auto w = o.star_partner(v)) {
      auto back = o.star_partner(*w);
      if (!back || *back != v) throw ValidityError("*-edge at " + v + " is not symmetric");
      if (!index.count(*w)) add(*w, d + 1);
    }
    forward.push_back(std::move(fw));
  }

  const std::size_t n = b.vertices.size();
  b.out.assign(n * r, kNoVertex);
  b.star.assign(n, kNoVertex);
  b.boundary.assign(n, false);
  for (std::size_t v = 0; v < n; ++v) {
    b.boundary[v] = b.distance[v] == radius;
    for (int i = 1; i <= r; ++i) {
      std::optional<VertexId> u;
      if (v < forward.size()) {
        u = forward[v][i - 1];
      } else {
        u = o.try_neighbor(b.vertices[v], Letter::gen(i));
      }
      if (!u) continue;
      if (auto it = index.find(*u); it != index.end()) b.out_edge(static_cast<int>(v), i) = it->second;
    }
    if (auto w = o.star_partner(b.vertices[v]))
      if (auto it = index.find(*w); it != index.end()) b.star[v] = it->second;
  }
  return b;
}

inline BallView ball(const OraclePtr& o, int radius, std::size_t budget = kDefaultVertexBudget) {
  return ball(*o, radius, budget);
}

// Recomputes distances from the root and reorders vertices into canonical BFS
// order. Used after parsing or rewiring.
inline BallView canonicalize(const BallView& src, std::optional<int> radius = std::nullopt) {
  const auto in = src.in_lists();
  detail::require_codeterministic(src, in);
  const int r = src.rank;
  std::vector<int> order, dist(src.size(), -1);
  if (src.size() == 0) throw DomainError("empty ball");
  order.push_back(0);
  dist[0] = 0;
  for (std::size_t h = 0; h < order.size(); ++h) {
    int v = order[h];
    auto visit = [&](int u) {
      if (u != kNoVertex && dist[u] < 0) {
        dist[u] = dist[v] + 1;
        order.push_back(u);
      }
    };
    for (int i = 1; i <= r; ++i) {
      visit(detail::step(src, in, v, Letter::gen(i)));
      visit(detail::step(src, in, v, Letter::inv(i)));
    }
    visit(src.star[v]);
  }
  if (order.size() != src.size()) throw DomainError("graph is not connected to its root");
  std::vector<int> pos(src.size());
  for (std::size_t k = 0; k < order.size(); ++k) pos[order[k]] = static_cast<int>(k);

  BallView b;
  b.rank = r;
  int maxd = 0;
  for (int d : dist) maxd = std::max(maxd, d);
  b.radius = radius.value_or(std::max(src.radius, maxd));
  const std::size_t n = src.size();
  b.vertices.resize(n);
  b.distance.resize(n);
  b.boundary.resize(n);
  b.out.assign(n * r, kNoVertex);
  b.star.assign(n, kNoVertex);
  for (std::size_t k = 0; k < n; ++k) {
    int v = order[k];
    b.vertices[k] = src.vertices[v];
    b.distance[k] = dist[v];
    b.boundary[k] = src.boundary[v];
    for (int i = 1; i <= r; ++i)
      if (int t = src.out_edge(v, i); t != kNoVertex) b.out_edge(static_cast<int>(k), i) = pos[t];
    if (src.star[v] != kNoVertex) b.star[k] = pos[src.star[v]];
  }
  return b;
}

// The sub-ball of radius k (k <= b.radius), with its own boundary flags.
inline BallView restrict_ball(const BallView& b, int k) {
  if (k > b.radius) throw DomainError("cannot restrict a ball to a larger radius");
  BallView s;
  s.rank = b.rank;
  s.radius = k;
  std::vector<int> pos(b.size(), kNoVertex);
  for (std::size_t v = 0; v < b.size(); ++v) {
    if (b.distance[v] > k) continue;
    pos[v] = static_cast<int>(s.vertices.size());
    s.vertices.push_back(b.vertices[v]);
    s.distance.push_back(b.distance[v]);
    s.boundary.push_back(b.distance[v] == k);
  }
  s.out.assign(s.size() * s.rank, kNoVertex);
  s.star.assign(s.size(), kNoVertex);
  for (std::size_t v = 0; v < b.size(); ++v) {
    if (pos[v] == kNoVertex) continue;
    for (int i = 1; i <= b.rank; ++i) {
      int t = b.out_edge(static_cast<int>(v), i);
      if (t != kNoVertex && pos[t] != kNoVertex) s.out_edge(pos[v], i) = pos[t];
    }
    if (b.star[v] != kNoVertex && pos[b.star[v]] != kNoVertex) s.star[pos[v]] = pos[b.star[v]];
  }
  return s;
}

struct ValidityReport {
  bool ok = true;
  std::vector<std::string> problems;
};

// One outgoing and one incoming edge per label at every interior vertex, at most
// one *-edge per vertex, symmetric *-edges, every vertex within radius.
inline ValidityReport validate(const BallView& b) {
  ValidityReport rep;
  auto fail = [&](std::string msg) {
    rep.ok = false;
    if (rep.problems.size() < 20) rep.problems.push_back(std::move(msg));
  };
  const auto in = b.in_lists();
  for (std::size_t v = 0; v < b.size(); ++v) {
    if (b.distance[v] > b.radius) fail("vertex " + b.vertices[v] + " lies outside the radius");
    const bool interior = !b.boundary[v];
    for (int i = 1; i <= b.rank; ++i) {
      const auto& lst = in[v * b.rank + i - 1];
      bool has_out = b.out_edge(static_cast<int>(v), i) != kNoVertex;
      if (lst.size() > 1) fail("vertex " + b.vertices[v] + " has several incoming s" + std::to_string(i) + " edges");
      if (interior && (!has_out || lst.size() != 1))
        fail("interior vertex " + b.vertices[v] + " lacks one-in/one-out for s" + std::to_string(i));
    }
    if (int w = b.star[v]; w != kNoVertex && b.star[w] != static_cast<int>(v))
      fail("*-edge at " + b.vertices[v] + " is not symmetric");
  }
  return rep;
}

// Parallel traversal from both roots. Labelled graphs with one edge per label
// and direction admit at most one root-isomorphism, so the traversal decides.
inline bool root_isomorphic(const BallView& a, const BallView& b) {
  if (a.rank != b.rank || a.size() != b.size()) return false;
  if (a.size() == 0) return true;
  const auto ina = a.in_lists(), inb = b.in_lists();
  detail::require_codeterministic(a, ina);
  detail::require_codeterministic(b, inb);
  std::vector<int> fwd(a.size(), kNoVertex), bwd(b.size(), kNoVertex);
  std::deque<int> queue;
  auto pair_up = [&](int u, int v) {
    if (u == kNoVertex || v == kNoVertex) return u == v;
    if (fwd[u] == kNoVertex && bwd[v] == kNoVertex) {
      if (a.boundary[u] != b.boundary[v]) return false;
      fwd[u] = v;
      bwd[v] = u;
      queue.push_back(u);
      return true;
    }
    return fwd[u] == v && bwd[v] == u;
  };
  if (!pair_up(0, 0)) return false;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    int v = fwd[u];
    for (int i = 1; i <= a.rank; ++i) {
      if (!pair_up(a.out_edge(u, i), b.out_edge(v, i))) return false;
      if (!pair_up(detail::step(a, ina, u, Letter::inv(i)), detail::step(b, inb, v, Letter::inv(i))))
        return false;
    }
    if (!pair_up(a.star[u], b.star[v])) return false;
  }
  for (int v : fwd)
    if (v == kNoVertex) return false;
  return true;
}

// String that is equal for two balls iff they are root-isomorphic: vertices are
// renumbered in canonical BFS order and their edges listed.
inline std::string canonical_code(const BallView& src) {
  BallView b = canonicalize(src, src.radius);
  std::string code = "r" + std::to_string(b.rank) + ";";
  for (std::size_t v = 0; v < b.size(); ++v) {
    for (int i = 1; i <= b.rank; ++i) {
      int t = b.out_edge(static_cast<int>(v), i);
      code += t == kNoVertex ? std::string("-") : std::to_string(t);
      code += ',';
    }
    if (b.star[v] != kNoVertex) code += "*" + std::to_string(b.star[v]) + ",";
    code += b.boundary[v] ? "b;" : ";";
  }
  return code;
}

// Read-only oracle over an explicit ball. Edges missing from the ball raise
// OutsideBallError from neighbor() and nullopt from try_neighbor().
class BallOracle final : public SchreierOracle {
 public:
  explicit BallOracle(BallView b) : b_(std::move(b)), in_(b_.in_lists()) {
    for (std::size_t v = 0; v < b_.size(); ++v) index_.emplace(b_.vertices[v], static_cast<int>(v));
  }

  int rank() const noexcept override { return b_.rank; }
  VertexId root() const override { return b_.vertices.at(0); }

  std::optional<VertexId> try_neighbor(const VertexId& v, Letter l) const override {
    auto it = index_.find(v);
    if (it == index_.end() || !l.valid_for_rank(b_.rank)) return std::nullopt;
    int t = detail::step(b_, in_, it->second, l);
    if (t == kNoVertex) return std::nullopt;
    return b_.vertices[t];
  }

  VertexId neighbor(const VertexId& v, Letter l) const override {
    auto u = try_neighbor(v, l);
    if (!u) throw OutsideBallError("edge " + l.to_string() + " at " + v + " lies outside the explicit ball");
    return *u;
  }

  std::optional<VertexId> star_partner(const VertexId& v) const override {
    auto it = index_.find(v);
    if (it == index_.end() || b_.star[it->second] == kNoVertex) return std::nullopt;
    return b_.vertices[b_.star[it->second]];
  }

  const BallView& view() const noexcept { return b_; }

 private:
  BallView b_;
  std::vector<std::vector<int>> in_;
  std::unordered_map<VertexId, int> index_;
};

}  // namespace irs
