#pragma once

// The encoding of a configuration x as a subgroup Psi(x) of F_r (r >= 2).
//
// Start from the Cayley graph of F_r. Subdivide every s1-edge (g, g.s1) by a
// vertex Cycle(g,0) and attach to it an s2-cycle Cycle(g,0) -> Cycle(g,1) ->
// ... -> Cycle(g,0) of length x(g). Cycle vertices carry s_i-loops for i >= 3,
// and s1-loops except at Cycle(g,0). Tokens: Cayley(g) is the compact word of
// g, Cycle(g,j) is "<compact g>/<j>".

#include <memory>
#include <optional>
#include <string>

#include "irs/encoder/subshift.hpp"
#include "irs/errors.hpp"
#include "irs/oracle.hpp"
#include "irs/word.hpp"

namespace irs {

// phi(s1) = s1^2, phi(s_i) = s_i: an isomorphism onto <s1^2, s2, ..., s_r>.
inline Word phi(const Word& w) {
  Word out;
  for (Letter l : w) {
    out *= l;
    if (l.generator() == 1) out *= l;
  }
  return out;
}

// Inverse of phi, or nullopt when w has a maximal s1-run of odd length.
inline std::optional<Word> phi_inverse(const Word& w) {
  Word out;
  const auto& ls = w.letters();
  for (std::size_t k = 0; k < ls.size();) {
    if (ls[k].generator() != 1) {
      out *= ls[k++];
      continue;
    }
    std::size_t run = 0;
    while (k + run < ls.size() && ls[k + run] == ls[k]) ++run;
    if (run % 2) return std::nullopt;
    for (std::size_t j = 0; j < run / 2; ++j) out *= ls[k];
    k += run;
  }
  return out;
}

inline Word word_from_compact(std::string_view token) {
  std::vector<Letter> ls;
  if (token == "1") return Word();
  for (char c : token) {
    if (c >= 'a' && c <= 'z') {
      ls.push_back(Letter::gen(c - 'a' + 1));
    } else if (c >= 'A' && c <= 'Z') {
      ls.push_back(Letter::inv(c - 'A' + 1));
    } else {
      throw DomainError("bad word token '" + std::string(token) + "'");
    }
  }
  return Word(ls);
}

struct EncodedVertex {
  Word g;
  std::optional<int> cycle;  // position j on the cycle attached at g

  VertexId token() const {
    std::string t = g.compact();
    if (cycle) t += "/" + std::to_string(*cycle);
    return t;
  }

  static EncodedVertex parse(const VertexId& t) {
    auto slash = t.find('/');
    if (slash == std::string::npos) return {word_from_compact(t), std::nullopt};
    int j = 0;
    try {
      j = std::stoi(t.substr(slash + 1));
    } catch (const std::exception&) {
      throw DomainError("bad encoded vertex '" + t + "'");
    }
    return {word_from_compact(std::string_view(t).substr(0, slash)), j};
  }
};

class PsiOracle final : public SchreierOracle {
 public:
  explicit PsiOracle(SubshiftPoint x) : x_(std::move(x)) {}

  int rank() const noexcept override { return x_.rank(); }
  VertexId root() const override { return "1"; }
  const SubshiftPoint& point() const noexcept { return x_; }

  int length_at(const Word& g) const {
    int k = x_(g);
    if (k < 1) throw DomainError("symbol " + std::to_string(k) + " at " + g.to_string() + " is not a valid cycle length");
    return k;
  }

  VertexId neighbor(const VertexId& token, Letter l) const override {
    check_letter(*this, l);
    EncodedVertex v = EncodedVertex::parse(token);
    const int gen = l.generator();
    if (!v.cycle) {
      if (gen != 1) return (v.g * l).compact();
      if (!l.is_inverse()) return EncodedVertex{v.g, 0}.token();
      return EncodedVertex{v.g * l, 0}.token();
    }
    const int j = *v.cycle;
    if (gen == 1) {
      if (j != 0) return token;
      return l.is_inverse() ? v.g.compact() : (v.g * l).compact();
    }
    if (gen >= 3) return token;
    const int k = length_at(v.g);
    if (j >= k) throw DomainError("cycle position out of range in '" + token + "'");
    return EncodedVertex{v.g, l.is_inverse() ? (j + k - 1) % k : (j + 1) % k}.token();
  }

 private:
  SubshiftPoint x_;
};

inline OraclePtr psi_oracle(SubshiftPoint x) { return std::make_shared<PsiOracle>(std::move(x)); }

}  // namespace irs
