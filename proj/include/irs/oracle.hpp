#pragma once

// Schreier coset graphs as lazy oracles.
//
// A subgroup K of F_r is represented by its rooted Schreier graph: vertices are
// the cosets Kg, there is an s-labelled edge Kg -> Kgs, and the root is K. An
// oracle exposes the root and the neighbour function; nothing is materialised.
// Vertex tokens are opaque, whitespace-free strings with token equality meaning
// vertex equality.

#include <memory>
#include <optional>
#include <string>
#include <utility>

#include "irs/errors.hpp"
#include "irs/word.hpp"

namespace irs {

using VertexId = std::string;

class SchreierOracle {
 public:
  virtual ~SchreierOracle() = default;

  virtual int rank() const noexcept = 0;
  virtual VertexId root() const = 0;
  // Total: every vertex has exactly one l-successor for every letter l.
  virtual VertexId neighbor(const VertexId& v, Letter l) const = 0;

  // Partial oracles (explicit balls) return nullopt for edges they do not know.
  virtual std::optional<VertexId> try_neighbor(const VertexId& v, Letter l) const {
    return neighbor(v, l);
  }

  // The undirected *-edge incident to v, for graphs that carry them.
  virtual std::optional<VertexId> star_partner(const VertexId&) const { return std::nullopt; }

  // Oracle whose neighbour function this one shares (used to flatten re-rootings).
  virtual std::shared_ptr<const SchreierOracle> underlying() const { return nullptr; }
};

using OraclePtr = std::shared_ptr<const SchreierOracle>;

inline void check_rank(int rank) {
  if (rank < 1 || rank > kMaxRank)
    throw DomainError("rank must lie in 1.." + std::to_string(kMaxRank));
}

inline void check_letter(const SchreierOracle& o, Letter l) {
  if (!l.valid_for_rank(o.rank()))
    throw DomainError("letter " + l.to_string() + " exceeds rank " + std::to_string(o.rank()));
}

// Follows w letter by letter from v (right action: v -> v.l).
inline VertexId trace_from(const SchreierOracle& o, VertexId v, const Word& w) {
  for (Letter l : w) v = o.neighbor(v, l);
  return v;
}

inline VertexId trace_from(const SchreierOracle& o, VertexId v, std::span<const Letter> letters) {
  for (Letter l : letters) v = o.neighbor(v, l);
  return v;
}

inline VertexId trace(const SchreierOracle& o, const Word& w) { return trace_from(o, o.root(), w); }

// K contains w iff the coset walk of w returns to the root.
inline bool contains(const SchreierOracle& o, const Word& w) { return trace(o, w) == o.root(); }

// Schreier graph of the trivial subgroup: the Cayley graph of F_r, vertices named
// by their reduced words.
class CayleyOracle final : public SchreierOracle {
 public:
  explicit CayleyOracle(int rank) : rank_(rank) { check_rank(rank); }

  int rank() const noexcept override { return rank_; }
  VertexId root() const override { return "1"; }

  VertexId neighbor(const VertexId& v, Letter l) const override {
    if (v == "1") return std::string(1, l.compact());
    char inv = l.inverse().compact();
    if (v.back() == inv) {
      if (v.size() == 1) return "1";
      return v.substr(0, v.size() - 1);
    }
    return v + l.compact();
  }

 private:
  int rank_;
};

// Same neighbour function as `base`, different root.
class RerootedOracle final : public SchreierOracle {
 public:
  RerootedOracle(OraclePtr base, VertexId root) : base_(std::move(base)), root_(std::move(root)) {}

  int rank() const noexcept override { return base_->rank(); }
  VertexId root() const override { return root_; }
  VertexId neighbor(const VertexId& v, Letter l) const override { return base_->neighbor(v, l); }
  std::optional<VertexId> try_neighbor(const VertexId& v, Letter l) const override {
    return base_->try_neighbor(v, l);
  }
  std::optional<VertexId> star_partner(const VertexId& v) const override { return base_->star_partner(v); }
  OraclePtr underlying() const override { return base_; }

 private:
  OraclePtr base_;
  VertexId root_;
};

inline OraclePtr make_cayley(int rank) { return std::make_shared<CayleyOracle>(rank); }

inline OraclePtr reroot(const OraclePtr& o, VertexId new_root) {
  OraclePtr base = o->underlying() ? o->underlying() : o;
  return std::make_shared<RerootedOracle>(std::move(base), std::move(new_root));
}

// gKg^-1: the same graph with the root moved from K to Kg^-1.
inline OraclePtr conjugate(const OraclePtr& o, const Word& g) {
  if (g.empty()) return o;
  return reroot(o, trace(*o, g.inverse()));
}

}  // namespace irs
