// Acceptance run: one PASS/FAIL line per criterion with a short summary.
// Exit status is nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "irs/irs.hpp"

using namespace irs;

namespace {

const std::string kData = IRS_DATA_DIR;
constexpr std::uint64_t kSeed = 20240611;

unsigned worker_count() { return std::max(1u, std::min(8u, std::thread::hardware_concurrency())); }

struct Outcome {
  bool pass = false;
  std::string summary;
  std::string report;  // full text compared across repeated runs
};

struct Criterion {
  int id;
  std::string name;
  bool randomized;
  double time_limit;  // seconds, 0 for none
  std::function<Outcome()> run;
};

FiniteSchreierGraph index2() { return load_finite_graph(kData + "/index2.sgr"); }

std::shared_ptr<const LabeledAction> random_space(int n, int k, Rng& rng) {
  std::vector<int> labels(n);
  for (int& l : labels) l = 1 + rng.below(k);
  return std::make_shared<LabeledAction>(k, random_action(2, n, rng), labels);
}

// The 100 action-backed points shared by the equivariance and round-trip criteria.
std::vector<SubshiftPoint> encoder_points() {
  Rng rng(derive_seed(kSeed, "encoder", "points"));
  std::vector<SubshiftPoint> pts;
  for (int s = 0; s < 20; ++s) {
    auto space = random_space(3 + rng.below(6), 2 + rng.below(3), rng);
    for (int k = 0; k < 5; ++k) pts.emplace_back(space, rng.below(space->size()));
  }
  return pts;
}

Outcome exact_invariance() {
  GraphLaw law = enumerate_normalizer_law(index2(), Rational(1, 2));
  ExactInvarianceReport rep = exact_invariance_report(law, 2);
  std::size_t unequal = 0;
  for (const auto& r : rep.rows) unequal += r.mass != r.moved;
  Outcome o;
  o.pass = rep.invariant() && law.total() == 1 && !rep.rows.empty();
  o.summary = std::to_string(law.size()) + " classes, total mass " + to_string(law.total()) + ", " +
              std::to_string(rep.rows.size()) + " (cylinder, generator) pairs, " + std::to_string(unequal) + " unequal";
  return o;
}

Outcome schreier_validity() {
  const std::vector<std::string> specs{"normalizer:trivial", "poulsen:trivial", "poulsen:normalizer:trivial"};
  const std::vector<Rational> ps{Rational(1, 20), Rational(1, 5), Rational(1, 2)};
  std::ostringstream report;
  std::size_t bad = 0, total = 0;
  for (const auto& spec : specs)
    for (const auto& p : ps) {
      OracleSampler s = parse_base_spec(spec, p);
      const std::uint64_t seed = derive_seed(kSeed, "validity", spec + to_string(p));
      auto sizes = parallel_map(1000, worker_count(), [&](std::size_t i) -> long {
        BallView b = ball(s(sample_seed(seed, i)), 6);
        return validate(b).ok ? static_cast<long>(b.size()) : -1;
      });
      std::size_t fails = std::count(sizes.begin(), sizes.end(), -1L);
      bad += fails;
      total += sizes.size();
      report << spec << " p=" << to_string(p) << " failures=" << fails
             << " vertices=" << std::accumulate(sizes.begin(), sizes.end(), 0L) << "\n";
    }
  return {bad == 0, std::to_string(total) + " radius-6 balls, " + std::to_string(bad) + " invalid", report.str()};
}

Outcome convergence() {
  const std::vector<Rational> ps{Rational(1, 5), Rational(1, 10), Rational(1, 20), Rational(1, 100)};
  CylinderSpec spec = parse_cylinder("", 2);
  auto make = [](const Rational& p) { return parse_base_spec("poulsen:trivial", p); };
  auto rows = convergence_sweep(make, ps, spec, 10000, kSeed, 1.0, 2, worker_count());
  std::ostringstream report;
  bool ok = rows.size() == ps.size();
  double last = 0;
  for (const auto& r : rows) {
    ok = ok && r.deviation <= r.bound;
    report << "p=" << to_string(r.p) << " estimate=" << fmt(r.estimate.value()) << " deviation=" << fmt(r.deviation)
           << " bound=" << fmt(r.bound) << "\n";
    last = r.estimate.value();
  }
  ok = ok && last >= 0.80;

  // A nontrivial limit: Poulsen over the uniformly rooted index-2 base.
  const std::string base = "uniform:file:" + kData + "/index2.sgr";
  CylinderSpec f2{cylinder_fingerprint(make_finite_oracle(index2()), 2), 2};
  auto make2 = [&](const Rational& p) { return parse_base_spec("poulsen:" + base, p); };
  auto rows2 = convergence_sweep(make2, ps, f2, 10000, kSeed, 1.0, 2, worker_count());
  bool ok2 = true;
  for (const auto& r : rows2) {
    ok2 = ok2 && r.deviation <= r.bound;
    report << "index-2 p=" << to_string(r.p) << " estimate=" << fmt(r.estimate.value())
           << " deviation=" << fmt(r.deviation) << " bound=" << fmt(r.bound) << "\n";
  }
  Outcome o;
  o.pass = ok && ok2;
  o.summary = "trivial base: estimate at p=1/100 " + fmt(last, 4) + "; index-2 base: estimate at p=1/100 " +
              fmt(rows2.back().estimate.value(), 4) + (ok2 ? ", within bounds" : ", outside bounds");
  o.report = report.str();
  return o;
}

Outcome statistical_invariance() {
  const Rational p(1, 10);
  InvarianceReport rep = invariance_report(parse_base_spec("poulsen:normalizer:trivial", p), 1, 20000, kSeed, 0.01, worker_count());
  InvarianceReport neg = invariance_report(parse_base_spec("biased-normalizer:trivial", p), 1, 20000, kSeed, 0.01, worker_count());
  std::ostringstream report;
  for (const auto* r : {&rep, &neg})
    for (const auto& row : r->rows) report << row.cylinder << " " << row.g.to_string() << " " << fmt(row.z, 4) << "\n";
  Outcome o;
  o.pass = !rep.rows.empty() && rep.max_z() <= 4 && neg.max_z() > 6;
  o.summary = "poulsen max z " + fmt(rep.max_z(), 2) + " over " + std::to_string(rep.rows.size()) +
              " cells; biased control max z " + fmt(neg.max_z(), 2);
  o.report = report.str();
  return o;
}

Outcome equivariance() {
  Rng rng(derive_seed(kSeed, "encoder", "words"));
  std::size_t cases = 0, ok = 0;
  std::ostringstream report;
  for (const SubshiftPoint& x : encoder_points()) {
    OraclePtr psi = psi_oracle(x);
    for (int k = 0; k < 20; ++k) {
      Word f = rng.word_up_to(2, 3);
      BallView lhs = ball(psi_oracle(x.translated(f)), 4);
      bool same = root_isomorphic(lhs, ball(conjugate(psi, phi(f)), 4));
      ++cases;
      ok += same;
      report << f.compact() << (same ? "+" : "-") << lhs.size() << " ";
    }
  }
  return {ok == cases && cases == 2000, std::to_string(ok) + "/" + std::to_string(cases) + " root-isomorphic",
          report.str()};
}

Outcome round_trip() {
  std::size_t ok = 0, n = 0;
  for (const SubshiftPoint& x : encoder_points()) {
    ++n;
    try {
      ok += decode(psi_oracle(x), 5) == pattern_of(x, 5);
    } catch (const DomainError&) {
    }
  }
  return {ok == n && n == 100, std::to_string(ok) + "/" + std::to_string(n) + " patterns on B(5) recovered", {}};
}

Outcome covering() {
  SubshiftFile f = load_subshift(kData + "/sample.sub");
  EncodingSpace Z(f.space);
  Rng rng(derive_seed(kSeed, "covering", ""));
  std::size_t ok = 0;
  std::ostringstream report;
  for (int t = 0; t < 50; ++t) {
    const int p = rng.below(f.space->size());
    Word g = rng.word_up_to(2, f.space->alphabet());
    try {
      UpsilonResult u = Z.upsilon(conjugate(Z.encode(p), g.inverse()));
      bool in = Z.in_Z(u.subgroup).answer == Membership::YesUpToRadius;
      ok += in;
      report << p << " " << g.compact() << " -> " << u.translate.compact() << " class " << u.config_class << "\n";
    } catch (const DomainError& e) {
      report << p << " " << g.compact() << " error " << e.what() << "\n";
    }
  }
  bool trivial_rejected = false;
  try {
    Z.upsilon(make_cayley(2));
  } catch (const NotInYError&) {
    trivial_rejected = true;
  }
  return {ok == 50 && trivial_rejected,
          std::to_string(ok) + "/50 translates retracted into Z; trivial subgroup " +
              (trivial_rejected ? "not in Y" : "accepted"),
          report.str()};
}

Outcome lambda_properties() {
  SubshiftFile f = load_subshift(kData + "/period2.sub");
  EncodingSpace Z(f.space);
  std::vector<Rational> eta(f.space->size(), Rational(1, f.space->size()));
  LambdaReport rep = lambda_pushforward(Z, eta);
  const Rational bound = Rational(static_cast<long long>(rep.translate_count)) * rep.eta_total;
  Outcome o;
  o.pass = rep.restriction_matches && rep.invariant && rep.total <= bound;
  o.summary = std::to_string(rep.atoms.size()) + " atoms, total " + to_string(rep.total) + " <= |L| = " +
              std::to_string(rep.translate_count) + ", restriction " + (rep.restriction_matches ? "exact" : "differs") +
              ", invariance " + (rep.invariant ? "exact" : "violated");
  return o;
}

Outcome finite_dynamics() {
  Rng rng(derive_seed(kSeed, "dynamics", ""));
  std::size_t invariant = 0;
  std::ostringstream report;
  for (int t = 0; t < 100; ++t) {
    GraphLaw law = stab_pushforward_law(random_action(2, 8, rng));
    bool inv = rebasing_invariance(law).invariant;
    invariant += inv;
    report << law.size() << (inv ? "+" : "-") << " ";
  }
  std::size_t mismatches = 0, checked = 0;
  for (int n = 1; n <= 6; ++n) {
    std::vector<int> f(n);
    std::iota(f.begin(), f.end(), 0);
    do {
      for (std::uint64_t bits = 1; bits < (1u << n); ++bits) {
        SubsetMask y = mask_from_bits(bits, n);
        std::vector<int> brute(n, -1);
        for (int x = 0; x < n; ++x) {
          if (!y[x]) continue;
          int z = f[x];
          while (!y[z]) z = f[z];
          brute[x] = z;
        }
        mismatches += first_return(f, y) != brute;
        ++checked;
      }
    } while (std::next_permutation(f.begin(), f.end()));
  }
  const bool tnf_index2 = is_totally_nonfree(load_action(kData + "/index2.act"));
  const bool tnf_sep = is_totally_nonfree(load_action(kData + "/separating.act"));
  Outcome o;
  o.pass = invariant == 100 && mismatches == 0 && !tnf_index2 && tnf_sep;
  o.summary = std::to_string(invariant) + "/100 stabiliser laws invariant; first return " + std::to_string(mismatches) +
              " mismatches in " + std::to_string(checked) + " cases; totally non-free: index-2 " +
              (tnf_index2 ? "true" : "false") + ", separating " + (tnf_sep ? "true" : "false");
  o.report = report.str();
  return o;
}

Outcome metric_criterion() {
  Rng rng(derive_seed(kSeed, "metric", ""));
  auto sample = [&]() -> OraclePtr {
    switch (rng.below(3)) {
      case 0: {
        FiniteAction a = random_action(2, 4 + rng.below(12), rng);
        return make_finite_oracle(orbit_schreier(a, rng.below(a.size())));
      }
      case 1: {
        FiniteAction a = random_action(2, 3 + rng.below(6), rng);
        return normalizer_oracle(make_finite_oracle(orbit_schreier(a, 0)), Rational(1, 2), rng.next());
      }
      default:
        return parse_base_spec("poulsen:normalizer:trivial", Rational(1, 5))(rng.next());
    }
  };
  std::size_t ok = 0, nonzero = 0, deep = 0;
  std::ostringstream report;
  for (int t = 0; t < 50; ++t) {
    OraclePtr a = sample(), b = sample(), c = sample();
    Rational ab = metric(a, b, 6).value(), bc = metric(b, c, 6).value(), ac = metric(a, c, 6).value();
    ok += ac <= std::max(ab, bc);
    nonzero += ac != 0;
    deep += ab < 1 && bc < 1 && ac < 1;
    report << to_string(ab) << " " << to_string(bc) << " " << to_string(ac) << "\n";
  }
  const std::size_t aut = aut_count(index2());
  return {ok == 50 && aut == 2,
          std::to_string(ok) + "/50 triples ultrametric (" + std::to_string(nonzero) +
              " with positive distance, " + std::to_string(deep) +
              " with all three balls agreeing at radius 0); aut(index-2) = " + std::to_string(aut),
          report.str()};
}

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "exact invariance of the normaliser law over the index-2 base", false, 60, exact_invariance},
      {2, "Schreier validity of sampled balls", true, 0, schreier_validity},
      {3, "convergence as p decreases to 0", true, 120, convergence},
      {4, "statistical conjugation invariance with negative control", true, 0, statistical_invariance},
      {5, "encoding equivariance", true, 60, equivariance},
      {6, "encoding round trip", true, 0, round_trip},
      {7, "covering of Y by translates of Z", true, 0, covering},
      {8, "lambda on a period-2 orbit", false, 0, lambda_properties},
      {9, "finite dynamics", true, 0, finite_dynamics},
      {10, "ultrametric inequality and automorphism count", true, 0, metric_criterion},
  };

  int failures = 0;
  std::vector<std::string> first_reports(criteria.size());
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const Criterion& c = criteria[k];
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.summary = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.time_limit <= 0 || secs < c.time_limit;
    const bool pass = o.pass && in_time;
    failures += !pass;
    first_reports[k] = o.summary + "\n" + o.report;
    std::cout << (pass ? "PASS" : "FAIL") << "  " << c.id << ". " << c.name << ": " << o.summary << " [" << fmt(secs, 2)
              << " s" << (c.time_limit > 0 ? ", limit " + fmt(c.time_limit, 0) + " s" : std::string()) << "]"
              << std::endl;
  }

  // Determinism: every randomized criterion again, same seeds, byte-identical reports.
  std::size_t identical = 0, rerun = 0;
  std::string differing;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    if (!criteria[k].randomized) continue;
    ++rerun;
    Outcome o;
    try {
      o = criteria[k].run();
    } catch (const std::exception& e) {
      o.summary = std::string("exception: ") + e.what();
    }
    if (o.summary + "\n" + o.report == first_reports[k]) {
      ++identical;
    } else {
      differing += " " + std::to_string(criteria[k].id);
    }
  }
  const bool det = identical == rerun;
  failures += !det;
  std::cout << (det ? "PASS" : "FAIL") << "  11. determinism under repeated runs: " << identical << "/" << rerun
            << " randomized reports byte-identical" << (det ? "" : "; differing:" + differing) << std::endl;
  std::cout << (failures ? "acceptance: " + std::to_string(failures) + " criteria failed" : "acceptance: all criteria passed")
            << std::endl;
  return failures ? 1 : 0;
}
