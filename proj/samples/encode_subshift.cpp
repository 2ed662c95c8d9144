// Encodes a point of a finite subshift as a subgroup, decodes it back and
// retracts a translate into Z.

#include <iostream>

#include "irs/irs.hpp"

int main(int argc, char** argv) {
  const std::string path = argc > 1 ? argv[1] : "data/sample.sub";
  const irs::SubshiftFile f = irs::load_subshift(path);
  const irs::EncodingSpace Z(f.space);
  const irs::OraclePtr k = Z.encode(f.basepoint);
  const irs::Pattern decoded = irs::decode(k, 2);
  const irs::Pattern direct = irs::pattern_of(f.point(), 2);
  std::cout << "decoded pattern matches: " << (decoded == direct ? "yes" : "no") << "\n";
  const irs::Word g = irs::parse_word("s2.s1^-1");
  const irs::UpsilonResult u = Z.upsilon(irs::conjugate(k, g.inverse()));
  std::cout << "retraction word " << u.translate.to_string() << ", class " << u.config_class << "\n";
  return decoded == direct ? 0 : 1;
}
