#pragma once

// Percolation with attachments, followed by s1-surgery.
//
// Start from a copy of a base graph. Every vertex not already carrying a *-edge
// is selected with probability p; a selected vertex x gets a fresh copy of the
// base (drawn from the base law) whose root is joined to x by a *-edge. The new
// copies are percolated in turn, and so on. The emitted graph replaces, for each
// *-edge {v, w}, the s1-edges v -> v.s1 and w -> w.s1 by v -> w.s1 and w -> v.s1.
//
// Tokens are "{copy|coset}" where copy is the token of the attachment vertex
// (empty for the initial copy) and coset a vertex token of that copy's base.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>

#include "irs/errors.hpp"
#include "irs/keyed_hash.hpp"
#include "irs/oracle.hpp"
#include "irs/rational.hpp"
#include "irs/samplers/mark_law.hpp"
#include "irs/samplers/sampler.hpp"

namespace irs {

struct PoulsenVertex {
  std::string copy;
  VertexId coset;

  VertexId token() const { return "{" + copy + "|" + coset + "}"; }

  // Number of attachments between the initial copy and this vertex.
  int level() const {
    int d = 0;
    std::string c = copy;
    while (!c.empty()) {
      ++d;
      c = parse(c).copy;
    }
    return d;
  }

  static PoulsenVertex parse(const VertexId& t) {
    auto bad = [&]() -> PoulsenVertex { throw DomainError("not a percolation vertex: " + t); };
    if (t.size() < 3 || t.front() != '{' || t.back() != '}') return bad();
    std::size_t pos = 1;
    if (t[pos] == '{') {
      int depth = 0;
      for (; pos < t.size(); ++pos) {
        if (t[pos] == '{') ++depth;
        if (t[pos] == '}' && --depth == 0) break;
      }
      if (pos >= t.size()) return bad();
      ++pos;
    }
    if (pos >= t.size() || t[pos] != '|') return bad();
    return {t.substr(1, pos - 1), t.substr(pos + 1, t.size() - pos - 2)};
  }
};

class PoulsenGraph {
 public:
  PoulsenGraph(OracleSampler base_law, Rational p, std::uint64_t seed)
      : base_law_(std::move(base_law)), p_(std::move(p)), seed_(seed) {
    check_open_unit(p_);
    frac_ = to_small_fraction(p_);
    rank_ = copy_oracle("")->rank();
  }

  int rank() const noexcept { return rank_; }
  const Rational& p() const noexcept { return p_; }

  // Base graph of the copy attached at `copy` (the initial copy for "").
  OraclePtr copy_oracle(const std::string& copy) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = copies_.find(copy);
    if (it != copies_.end()) return it->second;
    OraclePtr o = base_law_(derive_seed(seed_, "attach", copy));
    if (!copies_.empty() && o->rank() != rank_) throw DomainError("base law produced graphs of differing rank");
    copies_.emplace(copy, o);
    return o;
  }

  VertexId root() const { return PoulsenVertex{"", copy_oracle("")->root()}.token(); }

  // The *-edge at v: a copy root is joined to its attachment vertex; any other
  // vertex is selected with probability p and then joined to the new copy's root.
  std::optional<VertexId> star(const VertexId& token) const {
    PoulsenVertex v = PoulsenVertex::parse(token);
    if (!v.copy.empty() && v.coset == copy_oracle(v.copy)->root()) return v.copy;
    if (!keyed_bernoulli(keyed_u64(seed_, "percolate", token), frac_)) return std::nullopt;
    return PoulsenVertex{token, copy_oracle(token)->root()}.token();
  }

  VertexId raw_neighbor(const VertexId& token, Letter l) const {
    PoulsenVertex v = PoulsenVertex::parse(token);
    return PoulsenVertex{v.copy, copy_oracle(v.copy)->neighbor(v.coset, l)}.token();
  }

  VertexId surgered_neighbor(const VertexId& token, Letter l) const {
    if (l.generator() != 1) return raw_neighbor(token, l);
    if (!l.is_inverse()) {
      auto w = star(token);
      return raw_neighbor(w ? *w : token, l);
    }
    VertexId u = raw_neighbor(token, l);
    auto w = star(u);
    return w ? *w : u;
  }

 private:
  OracleSampler base_law_;
  Rational p_;
  SmallFraction frac_;
  std::uint64_t seed_;
  int rank_ = 0;
  mutable std::mutex mu_;
  mutable std::map<std::string, OraclePtr> copies_;
};

// The graph before surgery, *-edges included.
class PoulsenRawOracle final : public SchreierOracle {
 public:
  explicit PoulsenRawOracle(std::shared_ptr<const PoulsenGraph> g) : g_(std::move(g)) {}
  int rank() const noexcept override { return g_->rank(); }
  VertexId root() const override { return g_->root(); }
  VertexId neighbor(const VertexId& v, Letter l) const override {
    check_letter(*this, l);
    return g_->raw_neighbor(v, l);
  }
  std::optional<VertexId> star_partner(const VertexId& v) const override { return g_->star(v); }

 private:
  std::shared_ptr<const PoulsenGraph> g_;
};

// The surgered graph, a Schreier graph without *-edges.
class PoulsenOracle final : public SchreierOracle {
 public:
  explicit PoulsenOracle(std::shared_ptr<const PoulsenGraph> g) : g_(std::move(g)) {}
  int rank() const noexcept override { return g_->rank(); }
  VertexId root() const override { return g_->root(); }
  VertexId neighbor(const VertexId& v, Letter l) const override {
    check_letter(*this, l);
    return g_->surgered_neighbor(v, l);
  }
  const PoulsenGraph& graph() const noexcept { return *g_; }

 private:
  std::shared_ptr<const PoulsenGraph> g_;
};

inline OraclePtr poulsen_oracle(OracleSampler base_law, const Rational& p, std::uint64_t seed) {
  return std::make_shared<PoulsenOracle>(std::make_shared<PoulsenGraph>(std::move(base_law), p, seed));
}

inline OraclePtr poulsen_raw_oracle(OracleSampler base_law, const Rational& p, std::uint64_t seed) {
  return std::make_shared<PoulsenRawOracle>(std::make_shared<PoulsenGraph>(std::move(base_law), p, seed));
}

}  // namespace irs
