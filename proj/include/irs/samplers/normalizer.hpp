#pragma once

// Self-normalising perturbation of a Schreier graph.
//
// Every coset c of the base graph gets a mark x(c) in {0..r} (law u_q at the
// root coset, u_p elsewhere). Unmarked cosets stay single vertices; a coset
// with mark m > 0 is replaced by three vertices (c,0), (c,1), (c,2). Edges
// entering a tripled coset land on slot 0, edges leaving it start at slot 2.
// Inside a coset with mark m: s_m runs 0 -> 2 and loops at 1; every other
// generator runs 0 -> 1 -> 2. Vertex tokens are "[c]" for unmarked cosets and
// "[c]k" for slot k.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>

#include "irs/errors.hpp"
#include "irs/keyed_hash.hpp"
#include "irs/oracle.hpp"
#include "irs/samplers/mark_law.hpp"

namespace irs {

// Move along s_gen inside a coset with mark m, from `slot`; nullopt means the
// edge leaves the coset (only from slot 2).
inline std::optional<int> tripled_forward(int m, int gen, int slot) {
  if (gen == m) {
    if (slot == 0) return 2;
    if (slot == 1) return 1;
    return std::nullopt;
  }
  if (slot == 2) return std::nullopt;
  return slot + 1;
}

// Inverse of tripled_forward; nullopt means the edge arrives from outside (slot 0).
inline std::optional<int> tripled_backward(int m, int gen, int slot) {
  if (gen == m) {
    if (slot == 2) return 0;
    if (slot == 1) return 1;
    return std::nullopt;
  }
  if (slot == 0) return std::nullopt;
  return slot - 1;
}

struct NormalizerVertex {
  VertexId coset;
  std::optional<int> slot;  // present iff the coset is marked

  VertexId token() const {
    std::string t = "[" + coset + "]";
    if (slot) t += static_cast<char>('0' + *slot);
    return t;
  }

  static NormalizerVertex parse(const VertexId& t) {
    if (t.size() < 2 || t.front() != '[') throw DomainError("not a normalizer vertex: " + t);
    if (t.back() == ']') return {t.substr(1, t.size() - 2), std::nullopt};
    if (t.size() < 3 || t[t.size() - 2] != ']' || t.back() < '0' || t.back() > '2')
      throw DomainError("not a normalizer vertex: " + t);
    return {t.substr(1, t.size() - 3), t.back() - '0'};
  }
};

class NormalizerOracle final : public SchreierOracle {
 public:
  // fixed_root_slot overrides the uniform choice of root slot. It breaks
  // invariance and exists as a negative control for the statistics harness.
  NormalizerOracle(OraclePtr base, Rational p, std::uint64_t seed, std::optional<int> fixed_root_slot = std::nullopt)
      : base_(std::move(base)), law_(std::move(p), base_->rank()), seed_(seed), base_root_(base_->root()) {
    if (fixed_root_slot && (*fixed_root_slot < 0 || *fixed_root_slot > 2))
      throw DomainError("root slot must be 0, 1 or 2");
    int m = mark_of(base_root_);
    if (m == 0) {
      root_ = NormalizerVertex{base_root_, std::nullopt}.token();
    } else {
      int slot = fixed_root_slot ? *fixed_root_slot
                                 : static_cast<int>(scale_to(keyed_u64(seed_, "slot", base_root_), 3));
      root_ = NormalizerVertex{base_root_, slot}.token();
    }
  }

  int rank() const noexcept override { return base_->rank(); }
  VertexId root() const override { return root_; }

  int mark_of(const VertexId& coset) const {
    return mark({seed_, "mark", coset}, law_, coset == base_root_);
  }

  VertexId neighbor(const VertexId& token, Letter l) const override {
    check_letter(*this, l);
    NormalizerVertex v = NormalizerVertex::parse(token);
    const int gen = l.generator();
    if (v.slot) {
      const int m = mark_of(v.coset);
      auto inside = l.is_inverse() ? tripled_backward(m, gen, *v.slot) : tripled_forward(m, gen, *v.slot);
      if (inside) return NormalizerVertex{v.coset, *inside}.token();
    }
    VertexId d = base_->neighbor(v.coset, l);
    if (mark_of(d) == 0) return NormalizerVertex{d, std::nullopt}.token();
    return NormalizerVertex{d, l.is_inverse() ? 2 : 0}.token();
  }

  const MarkLaw& law() const noexcept { return law_; }
  const OraclePtr& base() const noexcept { return base_; }

 private:
  OraclePtr base_;
  MarkLaw law_;
  std::uint64_t seed_;
  VertexId base_root_;
  VertexId root_;
};

inline OraclePtr normalizer_oracle(OraclePtr base, const Rational& p, std::uint64_t seed,
                                   std::optional<int> fixed_root_slot = std::nullopt) {
  return std::make_shared<NormalizerOracle>(std::move(base), p, seed, fixed_root_slot);
}

}  // namespace irs
