#pragma once

// Exact laws of random rooted finite Schreier graphs, atoms keyed by the
// root-isomorphism class.

#include <string>
#include <vector>

#include "irs/atomic_measure.hpp"
#include "irs/finite_graph.hpp"
#include "irs/rational.hpp"

namespace irs {

using GraphLaw = AtomicMeasure<FiniteSchreierGraph>;

inline GraphLaw point_mass(const FiniteSchreierGraph& g) {
  GraphLaw law;
  law.add(canonical_code(g), Rational(1), g);
  return law;
}

// Uniform root on a finite graph: the invariant law carried by its vertex set.
inline GraphLaw uniform_rebasings(const FiniteSchreierGraph& g) {
  GraphLaw law;
  const Rational w(1, static_cast<long long>(g.size()));
  for (std::size_t v = 0; v < g.size(); ++v) {
    FiniteSchreierGraph h = g.rebased(static_cast<int>(v));
    law.add(canonical_code(h), w, h);
  }
  return law;
}

// Law of s . K: every atom re-rooted along s^-1.
inline GraphLaw conjugated_law(const GraphLaw& law, Letter s) {
  GraphLaw out;
  for (const auto& [key, atom] : law) {
    const FiniteSchreierGraph& g = atom.representative;
    FiniteSchreierGraph h = g.rebased(g.step(g.root(), s.inverse()));
    out.add(canonical_code(h), atom.mass, h);
  }
  return out;
}

struct InvarianceCheck {
  bool invariant = true;
  std::vector<std::string> problems;
};

// Exact check that conjugation by every generator and inverse preserves the law.
inline InvarianceCheck rebasing_invariance(const GraphLaw& law) {
  InvarianceCheck rep;
  const int r = law.size() ? law.begin()->second.representative.rank() : 0;
  for (int s = 0; s < 2 * r; ++s) {
    Letter l = Letter::from_slot(s);
    Rational d = tv_distance(law, conjugated_law(law, l));
    if (d != 0) {
      rep.invariant = false;
      rep.problems.push_back("conjugation by " + l.to_string() + " moves mass " + to_string(d));
    }
  }
  return rep;
}

}  // namespace irs
