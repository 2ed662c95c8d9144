// Samples one Poulsen graph over the normaliser construction and prints its
// radius-3 ball in .sgr form.

#include <cstdint>
#include <iostream>
#include <string>

#include "irs/irs.hpp"

int main(int argc, char** argv) {
  const std::uint64_t seed = argc > 1 ? std::stoull(argv[1]) : 7;
  const irs::Rational p(1, 5);
  const irs::OracleSampler sampler = irs::parse_base_spec("poulsen:normalizer:trivial", p);
  const irs::BallView b = irs::ball(sampler(seed), 3);
  std::cout << "# seed=" << seed << " vertices=" << b.size() << "\n" << irs::to_sgr(b);
  return irs::validate(b).ok ? 0 : 1;
}
