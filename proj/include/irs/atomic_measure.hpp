#pragma once

#include <map>
#include <string>
#include <utility>

#include "irs/rational.hpp"

namespace irs {

// Finite measure with exact rational masses, atoms keyed by a canonical string
// and carrying one representative object each.
template <typename Rep>
class AtomicMeasure {
 public:
  struct Atom {
    Rational mass;
    Rep representative;
  };

  void add(const std::string& key, const Rational& mass, const Rep& representative) {
    auto it = atoms_.find(key);
    if (it == atoms_.end()) {
      atoms_.emplace(key, Atom{mass, representative});
    } else {
      it->second.mass += mass;
    }
  }

  // Sets the mass of an atom, keeping the first representative seen.
  void set(const std::string& key, const Rational& mass, const Rep& representative) {
    auto it = atoms_.find(key);
    if (it == atoms_.end()) {
      atoms_.emplace(key, Atom{mass, representative});
    } else {
      it->second.mass = mass;
    }
  }

  Rational mass(const std::string& key) const {
    auto it = atoms_.find(key);
    return it == atoms_.end() ? Rational(0) : it->second.mass;
  }

  bool contains(const std::string& key) const { return atoms_.count(key) != 0; }

  Rational total() const {
    Rational t = 0;
    for (const auto& [k, a] : atoms_) t += a.mass;
    return t;
  }

  std::size_t size() const noexcept { return atoms_.size(); }
  auto begin() const { return atoms_.begin(); }
  auto end() const { return atoms_.end(); }
  const std::map<std::string, Atom>& atoms() const noexcept { return atoms_; }

 private:
  std::map<std::string, Atom> atoms_;
};

// (1/2) sum |a(k) - b(k)| over the union of keys.
template <typename RepA, typename RepB>
Rational tv_distance(const AtomicMeasure<RepA>& a, const AtomicMeasure<RepB>& b) {
  Rational sum = 0;
  for (const auto& [k, atom] : a) {
    Rational d = atom.mass - b.mass(k);
    sum += d < 0 ? Rational(-d) : d;
  }
  for (const auto& [k, atom] : b)
    if (!a.contains(k)) sum += atom.mass < 0 ? Rational(-atom.mass) : atom.mass;
  return sum / 2;
}

}  // namespace irs
