// Exact law of the normaliser construction over the index-2 base, with its
// cylinder invariance check.

#include <iostream>

#include "irs/irs.hpp"

int main(int argc, char** argv) {
  const std::string path = argc > 1 ? argv[1] : "data/index2.sgr";
  const irs::FiniteSchreierGraph base = irs::load_finite_graph(path);
  const irs::GraphLaw law = irs::enumerate_normalizer_law(base, irs::Rational(1, 2));
  std::cout << "classes " << law.size() << "\ntotal " << irs::to_string(law.total()) << "\n";
  for (const auto& [key, atom] : law)
    std::cout << irs::to_string(atom.mass) << "  vertices=" << atom.representative.size()
              << "  aut=" << irs::aut_count(atom.representative) << "\n";
  const irs::ExactInvarianceReport rep = irs::exact_invariance_report(law, 2);
  std::cout << "invariant at radius 2: " << (rep.invariant() ? "yes" : "no") << "\n";
  return rep.invariant() ? 0 : 1;
}
