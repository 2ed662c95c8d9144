#pragma once

#include <cstdint>
#include <vector>

#include "irs/errors.hpp"
#include "irs/keyed_hash.hpp"
#include "irs/oracle.hpp"
#include "irs/rational.hpp"

namespace irs {

inline void check_open_unit(const Rational& p) {
  if (p <= 0 || p >= 1) throw DomainError("p must lie strictly between 0 and 1, got " + to_string(p));
}

// u_p on {0, 1, ..., r}: mass 1-p at 0 and p/r at each i > 0. The root coset
// uses u_q with q = 3p/(1+2p).
class MarkLaw {
 public:
  MarkLaw(Rational p, int rank) : p_(std::move(p)), rank_(rank) {
    check_open_unit(p_);
    check_rank(rank);
    q_ = 3 * p_ / (1 + 2 * p_);
    // Integer weights over a common denominator so keyed sampling is exact.
    auto weights = [&](const Rational& x) {
      SmallFraction f = to_small_fraction(x);
      if (f.den > UINT64_MAX / static_cast<std::uint64_t>(rank_))
        throw DomainError("denominator of p too large for keyed sampling");
      std::vector<std::uint64_t> w(rank_ + 1, f.num);
      w[0] = (f.den - f.num) * static_cast<std::uint64_t>(rank_);
      return w;
    };
    off_root_ = weights(p_);
    at_root_ = weights(q_);
  }

  const Rational& p() const noexcept { return p_; }
  const Rational& q() const noexcept { return q_; }
  int rank() const noexcept { return rank_; }

  Rational mass(int mark, bool at_root) const {
    const Rational& x = at_root ? q_ : p_;
    if (mark == 0) return 1 - x;
    if (mark < 0 || mark > rank_) return 0;
    return x / rank_;
  }

  int sample(std::uint64_t h, bool at_root) const {
    return static_cast<int>(keyed_choice(h, at_root ? at_root_ : off_root_));
  }

 private:
  Rational p_, q_;
  int rank_;
  std::vector<std::uint64_t> off_root_, at_root_;
};

inline int mark(const SeededKey& key, const MarkLaw& law, bool at_root) {
  return law.sample(keyed_hash128(key)[0], at_root);
}

}  // namespace irs
