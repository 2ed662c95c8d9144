#pragma once

// Z = Psi(X) for the set X of configurations of a labelled action, its
// translates Y, the retraction Upsilon: Y -> Z, decoding, and the measure
// lambda on Y induced by an invariant measure on X.

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "irs/ball.hpp"
#include "irs/encoder/psi.hpp"
#include "irs/encoder/subshift.hpp"
#include "irs/errors.hpp"
#include "irs/oracle.hpp"
#include "irs/rational.hpp"
#include "irs/word.hpp"

namespace irs {

// Reduced words of length <= alphabet size, shortlex, identity first.
inline std::vector<Word> translate_set_L(int alphabet, int rank) {
  if (alphabet < 1) throw DomainError("alphabet size must be at least 1");
  return ball_words(rank, alphabet);
}

enum class Membership { No, YesUpToRadius };

inline const char* to_string(Membership m) { return m == Membership::No ? "no" : "yes-up-to-radius"; }

struct ZTest {
  Membership answer = Membership::No;
  int radius = 0;
  std::vector<int> points;  // points p with ball(Psi(x_p), radius) matching
};

struct UpsilonResult {
  OraclePtr subgroup;  // f . K, an element of Z
  Word translate;      // f
  std::size_t index = 0;  // position of f in L
  int config_class = 0;
  std::vector<int> points;
};

class EncodingSpace {
 public:
  explicit EncodingSpace(std::shared_ptr<const LabeledAction> space, std::size_t budget = kDefaultVertexBudget)
      : space_(std::move(space)), budget_(budget) {}

  const LabeledAction& space() const noexcept { return *space_; }
  const std::shared_ptr<const LabeledAction>& space_ptr() const noexcept { return space_; }
  std::size_t budget() const noexcept { return budget_; }

  // Large enough to tell apart the configurations of different classes and to
  // see whether the root is a Cayley vertex.
  int default_radius() const { return 2 * space_->separation_depth() + 2 + space_->alphabet(); }

  std::vector<Word> translates() const { return translate_set_L(space_->alphabet(), space_->rank()); }

  OraclePtr encode(int p) const { return psi_oracle(SubshiftPoint(space_, p)); }

  ZTest in_Z(const SchreierOracle& o, std::optional<int> radius = std::nullopt) const {
    const int R = radius.value_or(default_radius());
    if (R < 2) throw DomainError("in_Z needs radius at least 2");
    ZTest t;
    t.radius = R;
    if (o.rank() != space_->rank()) return t;
    const auto& table = codes(R);
    auto it = table.find(canonical_code(ball(o, R, budget_)));
    if (it != table.end()) {
      t.answer = Membership::YesUpToRadius;
      t.points = it->second;
    }
    return t;
  }
  ZTest in_Z(const OraclePtr& o, std::optional<int> radius = std::nullopt) const { return in_Z(*o, radius); }

  // f_i . K for the first f_i in L that lands in Z. Matching points from
  // different configuration classes mean the radius is too small to decide.
  UpsilonResult upsilon(const OraclePtr& o, std::optional<int> radius = std::nullopt) const {
    const auto L = translates();
    for (std::size_t i = 0; i < L.size(); ++i) {
      OraclePtr t = conjugate(o, L[i]);
      ZTest z = in_Z(*t, radius);
      if (z.answer == Membership::No) continue;
      int c = space_->config_class(z.points.front());
      for (int p : z.points)
        if (space_->config_class(p) != c)
          throw AmbiguityError("translate " + L[i].to_string() + " matches configurations of different classes at radius " +
                               std::to_string(z.radius) + "; raise the radius");
      return {t, L[i], i, c, z.points};
    }
    throw NotInYError("no translate by a word of length <= " + std::to_string(space_->alphabet()) +
                      " lies in Z at radius " + std::to_string(radius.value_or(default_radius())));
  }

 private:
  const std::unordered_map<std::string, std::vector<int>>& codes(int R) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(R);
    if (it != cache_.end()) return it->second;
    std::unordered_map<std::string, std::vector<int>> table;
    for (int p = 0; p < space_->size(); ++p) table[canonical_code(ball(*encode(p), R, budget_))].push_back(p);
    return cache_.emplace(R, std::move(table)).first->second;
  }

  std::shared_ptr<const LabeledAction> space_;
  std::size_t budget_;
  mutable std::mutex mu_;
  mutable std::map<int, std::unordered_map<std::string, std::vector<int>>> cache_;
};

// Reads x(g) for |g| <= radius as the s2-cycle length at the vertex
// subdividing the s1-edge leaving the vertex reached by phi(g). Every vertex
// met must play a single consistent role, otherwise the graph is not in Z.
inline Pattern decode(const SchreierOracle& o, int radius, std::size_t max_cycle = kDefaultVertexBudget) {
  if (radius < 0) throw DomainError("decode radius must be nonnegative");
  const int r = o.rank();
  if (r < 2) throw NotInZError("encoded graphs have rank at least 2");
  std::unordered_map<VertexId, std::string> role;
  auto assign = [&](const VertexId& v, const std::string& what) {
    auto [it, fresh] = role.emplace(v, what);
    if (!fresh && it->second != what)
      throw NotInZError("vertex " + v + " would be both " + it->second + " and " + what);
  };
  auto loops = [&](const VertexId& v, int from_gen) {
    for (int i = from_gen; i <= r; ++i)
      if (o.neighbor(v, Letter::gen(i)) != v) return false;
    return true;
  };
  Pattern out;
  for (const Word& g : ball_words(r, radius)) {
    const std::string name = g.to_string();
    const VertexId v = trace(o, phi(g));
    assign(v, "Cayley(" + name + ")");
    for (int s = 0; s < 2 * r; ++s)
      if (o.neighbor(v, Letter::from_slot(s)) == v) throw NotInZError("Cayley vertex for " + name + " carries a loop");
    const VertexId c = o.neighbor(v, Letter::gen(1));
    assign(c, "Cycle(" + name + ",0)");
    if (o.neighbor(c, Letter::gen(1)) == c) throw NotInZError("subdivision vertex for " + name + " has an s1-loop");
    if (!loops(c, 3)) throw NotInZError("subdivision vertex for " + name + " lacks s_i-loops, i >= 3");
    std::size_t k = 1;
    for (VertexId u = o.neighbor(c, Letter::gen(2)); u != c; u = o.neighbor(u, Letter::gen(2)), ++k) {
      if (k > max_cycle) throw NotInZError("s2-cycle at " + name + " does not close");
      if (!loops(u, 3) || o.neighbor(u, Letter::gen(1)) != u)
        throw NotInZError("cycle vertex " + std::to_string(k) + " at " + name + " lacks its loops");
      assign(u, "Cycle(" + name + "," + std::to_string(k) + ")");
    }
    out.emplace(g, static_cast<int>(k));
  }
  return out;
}

inline Pattern decode(const OraclePtr& o, int radius, std::size_t max_cycle = kDefaultVertexBudget) {
  return decode(*o, radius, max_cycle);
}

struct LambdaAtom {
  std::string key;           // "Z:<class>" or "Y:<class>:<j>"
  int config_class = 0;      // class of the configuration seen from the nearest Cayley vertex
  std::optional<int> cycle;  // root is Cycle(e, j) of that configuration
  Rational mass;
  Word retraction;           // the f with Upsilon(K) = f . K
  int retract_class = 0;
  OraclePtr subgroup;
};

struct LambdaReport {
  std::vector<LambdaAtom> atoms;
  Rational total = 0;
  Rational eta_total = 0;
  std::size_t translate_count = 0;
  bool restriction_matches = true;  // lambda on Z equals Psi_* eta
  bool invariant = true;            // lambda(s.K) = lambda(K) for every atom and generator
  std::vector<std::string> problems;
};

// Configuration class mass of eta, after checking eta is invariant.
inline std::vector<Rational> class_masses(const LabeledAction& a, const std::vector<Rational>& eta) {
  if (static_cast<int>(eta.size()) != a.size()) throw DomainError("eta needs one mass per point");
  std::vector<Rational> m(a.class_count(), Rational(0));
  for (int p = 0; p < a.size(); ++p) {
    if (eta[p] < 0) throw DomainError("eta has a negative mass");
    m[a.config_class(p)] += eta[p];
  }
  for (int c = 0; c < a.class_count(); ++c)
    for (int s = 0; s < 2 * a.rank(); ++s) {
      Letter l = Letter::from_slot(s);
      int d = a.config_class(a.left(l, a.class_representative(c)));
      if (m[d] != m[c])
        throw DomainError("eta is not invariant: class masses differ across " + l.to_string());
    }
  return m;
}

inline LambdaReport lambda_pushforward(const EncodingSpace& Z, const std::vector<Rational>& eta,
                                       std::optional<int> radius = std::nullopt) {
  const LabeledAction& a = Z.space();
  const std::vector<Rational> mass = class_masses(a, eta);
  LambdaReport rep;
  rep.translate_count = Z.translates().size();
  for (const Rational& m : mass) rep.eta_total += m;

  // Every subgroup of Y is a re-rooting of some Psi(x). Atoms are identified
  // structurally: a Cayley vertex h of Psi(x_p) gives the configuration of
  // h^-1 . p; the cycle vertex (h, j) gives the same plus j.
  auto key_of = [&](int p, const VertexId& token, int* cls, std::optional<int>* cycle) {
    EncodedVertex v = EncodedVertex::parse(token);
    *cls = a.config_class(a.shifted(p, v.g));
    *cycle = v.cycle;
    std::string k = (v.cycle ? "Y:" : "Z:") + std::to_string(*cls);
    if (v.cycle) k += ":" + std::to_string(*v.cycle);
    return k;
  };

  std::map<std::string, std::size_t> index;
  for (int c = 0; c < a.class_count(); ++c) {
    if (mass[c] == 0) continue;
    const int p = a.class_representative(c);
    OraclePtr psi = Z.encode(p);
    std::vector<VertexId> roots{"1"};
    for (int j = 0; j < a.label(p); ++j) roots.push_back("1/" + std::to_string(j));
    for (const VertexId& t : roots) {
      LambdaAtom atom;
      atom.key = key_of(p, t, &atom.config_class, &atom.cycle);
      atom.subgroup = reroot(psi, t);
      UpsilonResult u = Z.upsilon(atom.subgroup, radius);
      atom.retraction = u.translate;
      atom.retract_class = u.config_class;
      atom.mass = mass[u.config_class];
      index.emplace(atom.key, rep.atoms.size());
      rep.total += atom.mass;
      rep.atoms.push_back(std::move(atom));
    }
  }

  for (const LambdaAtom& atom : rep.atoms) {
    if (!atom.cycle && atom.mass != mass[atom.config_class]) {
      rep.restriction_matches = false;
      rep.problems.push_back("lambda(" + atom.key + ") differs from the mass of its configuration");
    }
    const int p = a.class_representative(atom.config_class);
    for (int s = 0; s < 2 * a.rank(); ++s) {
      Letter l = Letter::from_slot(s);
      // s . K moves the root along s^-1.
      VertexId moved = trace_from(*atom.subgroup, atom.subgroup->root(), Word{l.inverse()});
      int cls = 0;
      std::optional<int> cyc;
      std::string k = key_of(p, moved, &cls, &cyc);
      auto it = index.find(k);
      Rational other = it == index.end() ? Rational(0) : rep.atoms[it->second].mass;
      if (other != atom.mass) {
        rep.invariant = false;
        rep.problems.push_back("lambda(" + atom.key + ") != lambda(" + l.to_string() + " . " + atom.key + ")");
      }
    }
  }
  return rep;
}

}  // namespace irs
