#pragma once

// Monte Carlo and exact estimates of cylinder probabilities, conjugation
// invariance reports and p -> 0 convergence sweeps.
//
// Sample i of a run with seed s uses the sub-seed derive_seed(s, "sample", i),
// so results do not depend on the number of threads.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "irs/ball.hpp"
#include "irs/errors.hpp"
#include "irs/finite_graph.hpp"
#include "irs/graph_law.hpp"
#include "irs/keyed_hash.hpp"
#include "irs/rational.hpp"
#include "irs/rng.hpp"
#include "irs/samplers/sampler.hpp"
#include "irs/stats/table.hpp"
#include "irs/subgroup.hpp"

namespace irs {

inline std::uint64_t sample_seed(std::uint64_t seed, std::size_t i) {
  return derive_seed(seed, "sample", std::to_string(i));
}

// Runs fn(i) for i < n on up to `threads` workers; results are in index order.
template <typename Fn>
auto parallel_map(std::size_t n, unsigned threads, Fn fn) -> std::vector<decltype(fn(std::size_t{}))> {
  using T = decltype(fn(std::size_t{}));
  std::vector<T> out(n);
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  if (threads == 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = t; i < n; i += threads) out[i] = fn(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

struct CylinderSpec {
  Fingerprint F;
  int radius = 0;

  void validate() const {
    if (radius < 0) throw DomainError("cylinder radius must be nonnegative");
    if (F.empty() || !F.front().empty()) throw DomainError("a cylinder fingerprint contains the empty word first");
    for (const Word& w : F) {
      if (static_cast<int>(w.size()) > radius) throw DomainError("cylinder word " + w.to_string() + " exceeds the radius");
      if (!std::binary_search(F.begin(), F.end(), w.inverse(), ShortlexLess{}))
        throw DomainError("cylinder fingerprint is not closed under inverses");
    }
    if (!std::is_sorted(F.begin(), F.end(), ShortlexLess{})) throw DomainError("cylinder fingerprint is not sorted");
  }
};

// "e" or a comma-separated list of words; the empty word is added and the list sorted.
inline CylinderSpec parse_cylinder(const std::string& words, int radius) {
  CylinderSpec c;
  c.radius = radius;
  c.F.push_back(Word());
  std::size_t pos = 0;
  while (pos <= words.size()) {
    std::size_t end = words.find(',', pos);
    if (end == std::string::npos) end = words.size();
    std::string item = words.substr(pos, end - pos);
    if (!item.empty()) {
      Word w = parse_word(item);
      if (!w.empty()) c.F.push_back(w);
    }
    pos = end + 1;
  }
  std::sort(c.F.begin(), c.F.end(), ShortlexLess{});
  c.F.erase(std::unique(c.F.begin(), c.F.end()), c.F.end());
  c.validate();
  return c;
}

struct EstimateReport {
  std::size_t hits = 0;
  std::size_t N = 0;
  std::uint64_t seed = 0;

  Rational estimate() const { return Rational(static_cast<long long>(hits), static_cast<long long>(N)); }
  double value() const { return static_cast<double>(hits) / static_cast<double>(N); }
  double standard_error() const {
    double p = value();
    return std::sqrt(p * (1 - p) / static_cast<double>(N));
  }
};

// Per-sample cylinder indicator, kept for bootstrap checks.
inline std::vector<char> cylinder_hits(const OracleSampler& sampler, const CylinderSpec& spec, std::size_t N,
                                       std::uint64_t seed, unsigned threads = 1) {
  spec.validate();
  return parallel_map(N, threads, [&](std::size_t i) -> char {
    OraclePtr o = sampler(sample_seed(seed, i));
    return cylinder_fingerprint(*o, spec.radius) == spec.F;
  });
}

inline EstimateReport estimate_cylinder(const OracleSampler& sampler, const CylinderSpec& spec, std::size_t N,
                                        std::uint64_t seed, unsigned threads = 1) {
  if (N < 1) throw DomainError("need at least one sample");
  auto hits = cylinder_hits(sampler, spec, N, seed, threads);
  EstimateReport r;
  r.N = N;
  r.seed = seed;
  for (char h : hits) r.hits += h;
  return r;
}

// Standard deviation of the bootstrap distribution of the mean of `hits`.
inline double bootstrap_stderr(const std::vector<char>& hits, int resamples, std::uint64_t seed) {
  Rng rng(seed);
  const std::size_t n = hits.size();
  double sum = 0, sum2 = 0;
  for (int b = 0; b < resamples; ++b) {
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) k += hits[rng.below(static_cast<std::uint64_t>(n))];
    double m = static_cast<double>(k) / static_cast<double>(n);
    sum += m;
    sum2 += m * m;
  }
  double mean = sum / resamples;
  return std::sqrt(std::max(0.0, sum2 / resamples - mean * mean));
}

struct InvarianceRow {
  std::string cylinder;  // fingerprint key
  Letter g;
  double mass = 0;       // estimate of eta(C)
  double moved = 0;      // estimate of eta(g . C)
  double deviation = 0;
  double z = 0;
};

struct InvarianceReport {
  std::vector<InvarianceRow> rows;
  std::size_t N = 0;
  std::uint64_t seed = 0;
  int radius = 0;
  double min_mass = 0.01;

  double max_z() const {
    double m = 0;
    for (const auto& r : rows) m = std::max(m, r.z);
    return m;
  }
};

namespace detail {

inline double pooled_z(double a, double b, std::size_t N) {
  double dev = std::abs(a - b);
  double se = std::sqrt((a * (1 - a) + b * (1 - b)) / static_cast<double>(N));
  if (se == 0) return dev == 0 ? 0.0 : INFINITY;
  return dev / se;
}

}  // namespace detail

// For every cylinder C seen with estimated mass >= min_mass and every letter g,
// compares the frequency of C with that of g . C. A sample K lies in g . C iff
// g^-1 K g lies in C, which is read off the fingerprint of the re-rooted graph.
inline InvarianceReport invariance_report(const OracleSampler& sampler, int radius, std::size_t N,
                                          std::uint64_t seed, double min_mass = 0.01, unsigned threads = 1) {
  if (N < 1) throw DomainError("need at least one sample");
  struct Sample {
    int rank = 0;
    std::vector<std::string> keys;  // slot 0: K itself; slot 1 + s: letter s
  };
  auto samples = parallel_map(N, threads, [&](std::size_t i) {
    OraclePtr o = sampler(sample_seed(seed, i));
    Sample s;
    s.rank = o->rank();
    s.keys.push_back(fingerprint_key(cylinder_fingerprint(*o, radius)));
    for (int slot = 0; slot < 2 * s.rank; ++slot) {
      Letter g = Letter::from_slot(slot);
      s.keys.push_back(fingerprint_key(cylinder_fingerprint(conjugate(o, Word{g.inverse()}), radius)));
    }
    return s;
  });
  const int r = samples.empty() ? 0 : samples.front().rank;
  std::vector<std::map<std::string, std::size_t>> counts(2 * r + 1);
  for (const Sample& s : samples)
    for (std::size_t k = 0; k < s.keys.size(); ++k) ++counts[k][s.keys[k]];
  InvarianceReport rep;
  rep.N = N;
  rep.seed = seed;
  rep.radius = radius;
  rep.min_mass = min_mass;
  const double n = static_cast<double>(N);
  for (const auto& [key, c] : counts[0]) {
    double a = static_cast<double>(c) / n;
    if (a < min_mass) continue;
    for (int slot = 0; slot < 2 * r; ++slot) {
      auto it = counts[1 + slot].find(key);
      double b = it == counts[1 + slot].end() ? 0.0 : static_cast<double>(it->second) / n;
      rep.rows.push_back({key, Letter::from_slot(slot), a, b, std::abs(a - b), detail::pooled_z(a, b, N)});
    }
  }
  return rep;
}

struct ExactInvarianceRow {
  std::string cylinder;
  Letter g;
  Rational mass;
  Rational moved;
};

struct ExactInvarianceReport {
  std::vector<ExactInvarianceRow> rows;
  int radius = 0;

  bool invariant() const {
    for (const auto& r : rows)
      if (r.mass != r.moved) return false;
    return true;
  }
};

// The same comparison for an exact law of finite rooted graphs; deviations are
// exact rationals. Cylinders of either law are all listed.
inline ExactInvarianceReport exact_invariance_report(const GraphLaw& law, int radius) {
  ExactInvarianceReport rep;
  rep.radius = radius;
  int r = 0;
  std::map<std::string, Rational> base;
  std::vector<std::map<std::string, Rational>> moved;
  for (const auto& [key, atom] : law) {
    const FiniteSchreierGraph& g = atom.representative;
    r = g.rank();
    if (moved.empty()) moved.resize(2 * r);
    FiniteOracle o(g);
    base[fingerprint_key(cylinder_fingerprint(o, radius))] += atom.mass;
    for (int slot = 0; slot < 2 * r; ++slot) {
      Letter s = Letter::from_slot(slot);
      FiniteOracle h(g.rebased(g.step(g.root(), s)));  // root moved along s = (s^-1) . K
      moved[slot][fingerprint_key(cylinder_fingerprint(h, radius))] += atom.mass;
    }
  }
  std::map<std::string, bool> keys;
  for (const auto& [k, m] : base) keys[k] = true;
  for (const auto& mv : moved)
    for (const auto& [k, m] : mv) keys[k] = true;
  for (const auto& [k, unused] : keys) {
    Rational a = base.count(k) ? base.at(k) : Rational(0);
    for (int slot = 0; slot < 2 * r; ++slot) {
      Rational b = moved[slot].count(k) ? moved[slot].at(k) : Rational(0);
      rep.rows.push_back({k, Letter::from_slot(slot), a, b});
    }
  }
  return rep;
}

struct SweepRow {
  Rational p;
  EstimateReport estimate;
  double deviation = 0;
  double bound = 0;  // 2(1 - (1-p)^|B(r)|) + 3 stderr
};

// Rows ordered by p descending. make(p) builds the sampler for one p;
// base_value is the cylinder mass of the unperturbed law.
inline std::vector<SweepRow> convergence_sweep(const std::function<OracleSampler(const Rational&)>& make,
                                               std::vector<Rational> p_list, const CylinderSpec& spec,
                                               std::size_t N, std::uint64_t seed, double base_value, int rank,
                                               unsigned threads = 1) {
  std::sort(p_list.begin(), p_list.end(), [](const Rational& a, const Rational& b) { return a > b; });
  std::vector<SweepRow> rows;
  const double ball = static_cast<double>(ball_size(rank, spec.radius));
  for (const Rational& p : p_list) {
    SweepRow row;
    row.p = p;
    row.estimate = estimate_cylinder(make(p), spec, N, derive_seed(seed, "sweep", to_string(p)), threads);
    row.deviation = std::abs(row.estimate.value() - base_value);
    row.bound = 2 * (1 - std::pow(1 - to_double(p), ball)) + 3 * row.estimate.standard_error();
    rows.push_back(row);
  }
  return rows;
}

}  // namespace irs
