// Command-line front end. Exit codes: 0 success, 1 invalid input or usage,
// 2 resource budget exceeded, 3 a verification subcommand found a violation.

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "irs/irs.hpp"

namespace {

using namespace irs;

constexpr int kVerificationFailure = 3;

struct Common {
  std::uint64_t seed = 0;
  std::size_t budget = kDefaultVertexBudget;
  std::string format = "text";
  unsigned threads = 1;
  int rank = 2;
  std::string p = "1/10";
};

struct Output {
  std::string path;

  void write(const std::string& text) const {
    if (path.empty() || path == "-") {
      std::cout << text;
      return;
    }
    std::ofstream out(path);
    if (!out) throw DomainError("cannot write " + path);
    out << text;
  }
};

std::string header(const std::string& cmd, const std::vector<std::pair<std::string, std::string>>& fields) {
  std::string h = "# " + cmd;
  for (const auto& [k, v] : fields) h += " " + k + "=" + v;
  return h + "\n";
}

Rational parse_p(const std::string& text, bool exact_only = false) {
  Rational p = parse_rational(text, exact_only);
  check_open_unit(p);
  return p;
}

std::vector<Rational> parse_p_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) out.push_back(parse_p(item));
  return out;
}

void add_common(CLI::App* app, Common& c, bool random) {
  app->add_option("--budget", c.budget, "Vertex budget for ball exploration")->capture_default_str();
  app->add_option("--rank", c.rank, "Rank r of the free group for the trivial base")->capture_default_str();
  if (random) {
    app->add_option("--seed", c.seed, "Seed (64-bit)")->capture_default_str();
    app->add_option("--p", c.p, "Perturbation parameter, a/b or decimal")->capture_default_str();
  }
}

std::string sgr_with_header(const BallView& b, const std::string& head) { return head + to_sgr(b); }

OraclePtr load_graph_oracle(const std::string& path) {
  BallView b = load_sgr(path);
  if (!b.has_boundary() && validate(b).ok && b.star_count() == 0) {
    // A complete graph without boundary acts as a total oracle.
    bool complete = true;
    for (int t : b.out) complete = complete && t != kNoVertex;
    if (complete) return make_finite_oracle(to_finite_graph(b));
  }
  return std::make_shared<BallOracle>(std::move(b));
}

std::string pattern_table(const Pattern& p, const std::string& format) {
  Table t{{"word", "symbol"}, {}};
  for (const auto& [w, s] : p) t.add({w.to_string(), std::to_string(s)});
  return t.render(format);
}

int run(int argc, char** argv) {
  CLI::App app{"Subgroups of free groups as Schreier graphs: samplers, encodings and finite dynamics"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");
  Common c;
  Output out;
  std::function<int()> action;

  // ball
  {
    auto* cmd = app.add_subcommand("ball", "Radius-R ball of a (random) Schreier graph, as .sgr");
    static std::string base = "trivial", dot;
    static int radius = 1;
    static bool raw = false;
    add_common(cmd, c, true);
    cmd->add_option("--base", base, "Base spec")->capture_default_str();
    cmd->add_option("--radius", radius, "Ball radius")->required();
    cmd->add_option("--out", out.path, "Output path (default stdout)");
    cmd->add_option("--dot", dot, "Also write Graphviz DOT to this path");
    cmd->add_flag("--raw", raw, "For poulsen:<spec>, show the graph before surgery with its *-edges");
    cmd->callback([&] {
      action = [&] {
        Rational p = parse_p(c.p);
        OraclePtr o;
        if (raw) {
          if (base.rfind("poulsen:", 0) != 0) throw DomainError("--raw needs a poulsen:<spec> base");
          o = poulsen_raw_oracle(parse_base_spec(base.substr(8), p, c.rank), p, c.seed);
        } else {
          o = parse_base_spec(base, p, c.rank)(c.seed);
        }
        BallView b = ball(o, radius, c.budget);
        out.write(sgr_with_header(b, header("ball", {{"base", base}, {"p", to_string(p)}, {"seed", std::to_string(c.seed)}})));
        if (!dot.empty()) {
          std::ofstream d(dot);
          write_dot(d, b);
        }
        return 0;
      };
    });
  }

  // sample-normalizer / sample-poulsen
  for (std::string which : {"normalizer", "poulsen"}) {
    auto* cmd = app.add_subcommand("sample-" + which, "Sample a ball of the " + which + " construction, as .sgr");
    auto base = std::make_shared<std::string>("trivial");
    auto radius = std::make_shared<int>(2);
    add_common(cmd, c, true);
    cmd->add_option("--base", *base, "Base spec")->capture_default_str();
    cmd->add_option("--radius", *radius, "Ball radius")->capture_default_str();
    cmd->add_option("--out", out.path, "Output path (default stdout)");
    cmd->callback([&, which, base, radius] {
      action = [&, which, base, radius] {
        Rational p = parse_p(c.p);
        OraclePtr o = parse_base_spec(which + ":" + *base, p, c.rank)(c.seed);
        BallView b = ball(o, *radius, c.budget);
        out.write(sgr_with_header(b, header("sample-" + which, {{"base", *base}, {"p", to_string(p)}, {"seed", std::to_string(c.seed)}})));
        return 0;
      };
    });
  }

  // metric
  {
    auto* cmd = app.add_subcommand("metric", "Distance 1/(n+1), n the first radius where the balls differ");
    static std::string a = "trivial", b = "trivial";
    static int max_radius = 6;
    static std::uint64_t seed_b = 0;
    add_common(cmd, c, true);
    cmd->add_option("--a", a, "First base spec")->capture_default_str();
    cmd->add_option("--b", b, "Second base spec")->capture_default_str();
    cmd->add_option("--seed-b", seed_b, "Seed for the second graph")->capture_default_str();
    cmd->add_option("--max-radius", max_radius, "Largest radius compared")->capture_default_str();
    cmd->callback([&] {
      action = [&] {
        Rational p = parse_p(c.p);
        OraclePtr oa = parse_base_spec(a, p, c.rank)(c.seed), ob = parse_base_spec(b, p, c.rank)(seed_b);
        MetricResult m = metric(oa, ob, max_radius, c.budget);
        std::string s = header("metric", {{"a", a}, {"b", b}, {"seed", std::to_string(c.seed)}, {"seed-b", std::to_string(seed_b)}});
        if (m.first_disagreement) {
          s += "first-disagreement " + std::to_string(*m.first_disagreement) + "\n";
          s += "distance " + to_string(m.value()) + "\n";
        } else {
          s += "first-disagreement none up to " + std::to_string(max_radius) + "\n";
          s += "distance <= " + to_string(m.upper_bound()) + "\n";
        }
        out.write(s);
        return 0;
      };
    });
  }

  // fingerprint
  {
    auto* cmd = app.add_subcommand("fingerprint", "Words of length <= R in the subgroup");
    static std::string base = "trivial", graph;
    static int radius = 2;
    add_common(cmd, c, true);
    cmd->add_option("--base", base, "Base spec")->capture_default_str();
    cmd->add_option("--graph", graph, "Read the graph from an .sgr file instead");
    cmd->add_option("--radius", radius, "Word length bound")->capture_default_str();
    cmd->callback([&] {
      action = [&] {
        OraclePtr o = graph.empty() ? parse_base_spec(base, parse_p(c.p), c.rank)(c.seed) : load_graph_oracle(graph);
        std::string s;
        for (const Word& w : cylinder_fingerprint(o, radius)) s += w.to_string() + "\n";
        out.write(s);
        return 0;
      };
    });
  }

  // aut
  {
    auto* cmd = app.add_subcommand("aut", "Automorphism count of a finite Schreier graph (index of K in its normaliser)");
    static std::string graph;
    cmd->add_option("--graph", graph, "Complete .sgr file")->required();
    cmd->callback([&] {
      action = [&] {
        FiniteSchreierGraph g = load_finite_graph(graph);
        out.write("aut " + std::to_string(aut_count(g)) + "\nvertices " + std::to_string(g.size()) + "\n");
        return 0;
      };
    });
  }

  // enumerate-normalizer
  {
    auto* cmd = app.add_subcommand("enumerate-normalizer", "Exact law of the normaliser construction over a finite base");
    static std::string base;
    static int radius = 2;
    static bool check = false, selfnorm = false, list = false;
    static std::size_t enum_budget = kDefaultEnumerationBudget;
    cmd->add_option("--base", base, "file:<path.sgr> or uniform:file:<path.sgr>")->required();
    cmd->add_option("--p", c.p, "Parameter as a/b (decimals rejected)")->required();
    cmd->add_option("--radius", radius, "Cylinder radius for --check-invariance")->capture_default_str();
    cmd->add_option("--enum-budget", enum_budget, "Maximum number of outcomes")->capture_default_str();
    cmd->add_option("--format", c.format, "text or csv")->check(CLI::IsMember({"text", "csv"}));
    cmd->add_flag("--check-invariance", check, "Check eta(C) = eta(g.C) exactly for all cylinders and generators");
    cmd->add_flag("--self-normalizing", selfnorm, "Report the mass on graphs with trivial automorphism group");
    cmd->add_flag("--list", list, "List every atom");
    cmd->callback([&] {
      action = [&] {
        Rational p = parse_p(c.p, true);
        GraphLaw base_law = parse_finite_base_law(base);
        GraphLaw law = enumerate_normalizer_law(base_law, p, enum_budget);
        std::string s = header("enumerate-normalizer", {{"base", base}, {"p", to_string(p)}});
        s += "classes " + std::to_string(law.size()) + "\n";
        s += "total-mass " + to_string(law.total()) + "\n";
        if (list) {
          Table t{{"mass", "vertices", "aut", "class"}, {}};
          for (const auto& [k, atom] : law)
            t.add({to_string(atom.mass), std::to_string(atom.representative.size()),
                   std::to_string(aut_count(atom.representative)), k});
          s += t.render(c.format);
        }
        if (selfnorm) s += "self-normalizing-mass " + to_string(self_normalizing_mass(base_law, p, enum_budget)) + "\n";
        int code = 0;
        if (check) {
          ExactInvarianceReport rep = exact_invariance_report(law, radius);
          bool ok = rep.invariant() && rebasing_invariance(law).invariant;
          s += "cylinders " + std::to_string(rep.rows.size() / (2 * law.begin()->second.representative.rank())) + "\n";
          s += std::string("exact invariance: ") + (ok ? "PASS" : "FAIL") + "\n";
          if (!ok) code = kVerificationFailure;
        }
        out.write(s);
        return code;
      };
    });
  }

  // encode
  {
    auto* cmd = app.add_subcommand("encode", "Ball of the encoded subgroup Psi(x), as .sgr");
    static std::string subshift;
    static int radius = 4;
    static int basepoint = -1;
    cmd->add_option("--subshift", subshift, "Subshift point file")->required();
    cmd->add_option("--radius", radius, "Ball radius")->capture_default_str();
    cmd->add_option("--basepoint", basepoint, "Override the file's basepoint");
    cmd->add_option("--out", out.path, "Output path (default stdout)");
    cmd->add_option("--budget", c.budget, "Vertex budget")->capture_default_str();
    cmd->callback([&] {
      action = [&] {
        SubshiftFile f = load_subshift(subshift);
        int b = basepoint >= 0 ? basepoint : f.basepoint;
        OraclePtr o = psi_oracle(SubshiftPoint(f.space, b));
        out.write(sgr_with_header(ball(o, radius, c.budget), header("encode", {{"subshift", subshift}, {"basepoint", std::to_string(b)}})));
        return 0;
      };
    });
  }

  // decode
  {
    auto* cmd = app.add_subcommand("decode", "Read the configuration x on B(R) off an encoded graph");
    static std::string graph;
    static int radius = 1;
    cmd->add_option("--graph", graph, ".sgr file")->required();
    cmd->add_option("--radius", radius, "Word radius of the decoded pattern")->capture_default_str();
    cmd->add_option("--format", c.format, "text or csv")->check(CLI::IsMember({"text", "csv"}));
    cmd->callback([&] {
      action = [&] {
        OraclePtr o = load_graph_oracle(graph);
        Pattern p;
        try {
          p = decode(o, radius);
        } catch (const OutsideBallError& e) {
          throw DomainError(std::string(e.what()) + "; the file's ball is too small for this radius");
        }
        out.write(pattern_table(p, c.format));
        return 0;
      };
    });
  }

  // check-equivariance
  {
    auto* cmd = app.add_subcommand("check-equivariance", "Check ball(Psi(f.x), R) = ball(phi(f).Psi(x), R) on random f, x");
    static std::string subshift;
    static int trials = 100, radius = 4, max_len = 3;
    add_common(cmd, c, true);
    cmd->add_option("--subshift", subshift, "Subshift point file")->required();
    cmd->add_option("--trials", trials, "Number of (x, f) pairs")->capture_default_str();
    cmd->add_option("--radius", radius, "Ball radius")->capture_default_str();
    cmd->add_option("--max-length", max_len, "Longest word f")->capture_default_str();
    cmd->callback([&] {
      action = [&] {
        SubshiftFile f = load_subshift(subshift);
        Rng rng(c.seed);
        int failures = 0;
        for (int t = 0; t < trials; ++t) {
          SubshiftPoint x(f.space, rng.below(f.space->size()));
          Word w = rng.word_up_to(f.space->rank(), max_len);
          BallView lhs = ball(psi_oracle(x.translated(w)), radius, c.budget);
          BallView rhs = ball(conjugate(psi_oracle(x), phi(w)), radius, c.budget);
          if (!root_isomorphic(lhs, rhs)) ++failures;
        }
        std::string s = header("check-equivariance", {{"subshift", subshift}, {"seed", std::to_string(c.seed)}, {"radius", std::to_string(radius)}});
        s += "trials " + std::to_string(trials) + "\nfailures " + std::to_string(failures) + "\n";
        s += std::string("equivariance: ") + (failures ? "FAIL" : "PASS") + "\n";
        out.write(s);
        return failures ? kVerificationFailure : 0;
      };
    });
  }

  // upsilon
  {
    auto* cmd = app.add_subcommand("upsilon", "Retract a translate of an encoded subgroup back into Z");
    static std::string subshift, graph, word;
    static bool trivial = false;
    static int radius = -1;
    cmd->add_option("--subshift", subshift, "Subshift file defining X")->required();
    auto* g = cmd->add_option("--graph", graph, "Subgroup as an .sgr file");
    auto* w = cmd->add_option("--word", word, "Use conjugate(Psi(x), g^-1) for this word g");
    auto* tr = cmd->add_flag("--trivial", trivial, "Use the trivial subgroup");
    g->excludes(w)->excludes(tr);
    w->excludes(tr);
    cmd->add_option("--radius", radius, "in_Z radius (default 2d+2+n)");
    cmd->callback([&] {
      action = [&] {
        SubshiftFile f = load_subshift(subshift);
        EncodingSpace Z(f.space);
        OraclePtr o;
        if (!graph.empty()) {
          o = load_graph_oracle(graph);
        } else if (trivial) {
          o = make_cayley(f.space->rank());
        } else {
          o = conjugate(psi_oracle(f.point()), parse_word(word.empty() ? "e" : word).inverse());
        }
        std::optional<int> R = radius >= 0 ? std::optional<int>(radius) : std::nullopt;
        UpsilonResult u = Z.upsilon(o, R);
        std::string s = header("upsilon", {{"subshift", subshift}, {"radius", std::to_string(R.value_or(Z.default_radius()))}});
        s += "translate " + u.translate.to_string() + "\nindex " + std::to_string(u.index) + "\n";
        s += "configuration-class " + std::to_string(u.config_class) + "\n";
        s += std::string("in_Z ") + to_string(Z.in_Z(u.subgroup, R).answer) + "\n";
        out.write(s);
        return 0;
      };
    });
  }

  // lambda
  {
    auto* cmd = app.add_subcommand("lambda", "The measure lambda on Y from the uniform measure on the action's points");
    static std::string subshift;
    static int radius = -1;
    cmd->add_option("--subshift", subshift, "Subshift file")->required();
    cmd->add_option("--radius", radius, "in_Z radius (default 2d+2+n)");
    cmd->add_option("--format", c.format, "text or csv")->check(CLI::IsMember({"text", "csv"}));
    cmd->callback([&] {
      action = [&] {
        SubshiftFile f = load_subshift(subshift);
        EncodingSpace Z(f.space);
        std::vector<Rational> eta(f.space->size(), Rational(1, f.space->size()));
        LambdaReport rep = lambda_pushforward(Z, eta, radius >= 0 ? std::optional<int>(radius) : std::nullopt);
        Table t{{"atom", "mass", "retraction"}, {}};
        for (const auto& a : rep.atoms) t.add({a.key, to_string(a.mass), a.retraction.to_string()});
        std::string s = header("lambda", {{"subshift", subshift}}) + t.render(c.format);
        s += "total " + to_string(rep.total) + "\n|L| " + std::to_string(rep.translate_count) + "\n";
        bool ok = rep.restriction_matches && rep.invariant && rep.total <= rep.translate_count * rep.eta_total;
        s += std::string("restriction-to-Z: ") + (rep.restriction_matches ? "PASS" : "FAIL") + "\n";
        s += std::string("invariance: ") + (rep.invariant ? "PASS" : "FAIL") + "\n";
        for (const auto& p : rep.problems) s += "# " + p + "\n";
        out.write(s);
        return ok ? 0 : kVerificationFailure;
      };
    });
  }

  // stab-law
  {
    auto* cmd = app.add_subcommand("stab-law", "Law of Stab(x) for a uniform point, with its invariance check");
    static std::string file;
    cmd->add_option("--action", file, "Action file")->required();
    cmd->add_option("--format", c.format, "text or csv")->check(CLI::IsMember({"text", "csv"}));
    cmd->callback([&] {
      action = [&] {
        GraphLaw law = stab_pushforward_law(load_action(file));
        Table t{{"mass", "orbit", "aut", "class"}, {}};
        for (const auto& [k, atom] : law)
          t.add({to_string(atom.mass), std::to_string(atom.representative.size()),
                 std::to_string(aut_count(atom.representative)), k});
        InvarianceCheck inv = rebasing_invariance(law);
        std::string s = header("stab-law", {{"action", file}}) + t.render(c.format);
        s += std::string("rebasing invariance: ") + (inv.invariant ? "PASS" : "FAIL") + "\n";
        out.write(s);
        return inv.invariant ? 0 : kVerificationFailure;
      };
    });
  }

  // tnf-check
  {
    auto* cmd = app.add_subcommand("tnf-check", "Whether the stabiliser map separates points");
    static std::string file;
    cmd->add_option("--action", file, "Action file")->required();
    cmd->callback([&] {
      action = [&] {
        out.write(std::string("totally-nonfree ") + (is_totally_nonfree(load_action(file)) ? "true" : "false") + "\n");
        return 0;
      };
    });
  }

  // first-return
  {
    auto* cmd = app.add_subcommand("first-return", "First-return map of one generator to a subset");
    static std::string file, subset;
    static int gen = 1;
    cmd->add_option("--action", file, "Action file")->required();
    cmd->add_option("--gen", gen, "Generator index i (uses s_i)")->capture_default_str();
    cmd->add_option("--subset", subset, "Bit mask (bit k = point k) or list {0,2}")->required();
    cmd->callback([&] {
      action = [&] {
        FiniteAction a = load_action(file);
        if (gen < 1 || gen > a.rank()) throw DomainError("generator index out of range");
        auto m = first_return(a.perm(gen), parse_mask(subset, a.size()));
        std::string s;
        for (int y = 0; y < a.size(); ++y)
          if (m[y] >= 0) s += std::to_string(y) + " -> " + std::to_string(m[y]) + "\n";
        out.write(s);
        return 0;
      };
    });
  }

  // estimate
  {
    auto* cmd = app.add_subcommand("estimate", "Monte Carlo estimate of a cylinder probability");
    static std::string base = "trivial", cylinder;
    static int radius = 2;
    static std::size_t N = 10000;
    add_common(cmd, c, true);
    cmd->add_option("--base", base, "Sampler spec")->capture_default_str();
    cmd->add_option("--cylinder", cylinder, "Comma-separated words of F besides e (default: only e)");
    cmd->add_option("--radius", radius, "Cylinder radius")->capture_default_str();
    cmd->add_option("--N", N, "Samples")->capture_default_str();
    cmd->add_option("--threads", c.threads, "Worker threads")->capture_default_str();
    cmd->callback([&] {
      action = [&] {
        Rational p = parse_p(c.p);
        CylinderSpec spec = parse_cylinder(cylinder, radius);
        EstimateReport r = estimate_cylinder(parse_base_spec(base, p, c.rank), spec, N, c.seed, c.threads);
        std::string s = header("estimate", {{"base", base}, {"p", to_string(p)}, {"seed", std::to_string(c.seed)}, {"N", std::to_string(N)}});
        s += "cylinder " + fingerprint_key(spec.F) + " radius " + std::to_string(radius) + "\n";
        s += "hits " + std::to_string(r.hits) + "\nestimate " + fmt(r.value()) + "\nstderr " + fmt(r.standard_error()) + "\n";
        out.write(s);
        return 0;
      };
    });
  }

  // invariance
  {
    auto* cmd = app.add_subcommand("invariance", "Conjugation-invariance z-scores over cylinders");
    static std::string base = "poulsen:normalizer:trivial";
    static int radius = 1;
    static std::size_t N = 20000;
    static double min_mass = 0.01, z_threshold = 4;
    add_common(cmd, c, true);
    cmd->add_option("--base", base, "Sampler spec")->capture_default_str();
    cmd->add_option("--radius", radius, "Cylinder radius")->capture_default_str();
    cmd->add_option("--N", N, "Samples")->capture_default_str();
    cmd->add_option("--min-mass", min_mass, "Skip cylinders with smaller estimated mass")->capture_default_str();
    cmd->add_option("--z-threshold", z_threshold, "Largest acceptable z-score")->capture_default_str();
    cmd->add_option("--threads", c.threads, "Worker threads")->capture_default_str();
    cmd->add_option("--format", c.format, "text or csv")->check(CLI::IsMember({"text", "csv"}));
    cmd->callback([&] {
      action = [&] {
        Rational p = parse_p(c.p);
        InvarianceReport rep = invariance_report(parse_base_spec(base, p, c.rank), radius, N, c.seed, min_mass, c.threads);
        Table t{{"cylinder", "g", "eta(C)", "eta(g.C)", "deviation", "z"}, {}};
        for (const auto& r : rep.rows)
          t.add({r.cylinder, r.g.to_string(), fmt(r.mass), fmt(r.moved), fmt(r.deviation), fmt(r.z, 3)});
        std::string s = header("invariance", {{"base", base}, {"p", to_string(p)}, {"seed", std::to_string(c.seed)}, {"N", std::to_string(N)}, {"radius", std::to_string(radius)}});
        s += t.render(c.format);
        bool ok = rep.max_z() <= z_threshold;
        s += "max-z " + fmt(rep.max_z(), 3) + "\n";
        s += std::string("invariance: ") + (ok ? "PASS" : "FAIL") + "\n";
        out.write(s);
        return ok ? 0 : kVerificationFailure;
      };
    });
  }

  // sweep
  {
    auto* cmd = app.add_subcommand("sweep", "Cylinder estimates as p decreases to 0");
    static std::string base = "trivial", construction = "poulsen", cylinder, p_list = "1/5,1/10,1/20,1/100";
    static int radius = 2;
    static std::size_t N = 10000;
    add_common(cmd, c, true);
    cmd->add_option("--base", base, "Base law spec (the p -> 0 limit)")->capture_default_str();
    cmd->add_option("--construction", construction, "poulsen or normalizer")
        ->check(CLI::IsMember({"poulsen", "normalizer"}))
        ->capture_default_str();
    cmd->add_option("--p-list", p_list, "Comma-separated values of p")->capture_default_str();
    cmd->add_option("--cylinder", cylinder, "Comma-separated words of F besides e");
    cmd->add_option("--radius", radius, "Cylinder radius")->capture_default_str();
    cmd->add_option("--N", N, "Samples per p")->capture_default_str();
    cmd->add_option("--threads", c.threads, "Worker threads")->capture_default_str();
    cmd->add_option("--format", c.format, "text or csv")->check(CLI::IsMember({"text", "csv"}));
    cmd->callback([&] {
      action = [&] {
        CylinderSpec spec = parse_cylinder(cylinder, radius);
        auto ps = parse_p_list(p_list);
        // The base law never reads p; any valid value works here.
        OracleSampler base_sampler = parse_base_spec(base, Rational(1, 2), c.rank);
        double base_value = estimate_cylinder(base_sampler, spec, N, derive_seed(c.seed, "base", ""), c.threads).value();
        auto make = [&](const Rational& p) { return parse_base_spec(construction + ":" + base, p, c.rank); };
        auto rows = convergence_sweep(make, ps, spec, N, c.seed, base_value, c.rank, c.threads);
        Table t{{"p", "estimate", "stderr", "deviation", "bound"}, {}};
        for (const auto& r : rows)
          t.add({to_string(r.p), fmt(r.estimate.value()), fmt(r.estimate.standard_error()), fmt(r.deviation), fmt(r.bound)});
        std::string s = header("sweep", {{"base", base}, {"construction", construction}, {"seed", std::to_string(c.seed)}, {"N", std::to_string(N)}});
        s += "base-value " + fmt(base_value) + "\n" + t.render(c.format);
        out.write(s);
        return 0;
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }
  return action ? action() : 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const irs::ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 2;
  } catch (const irs::NotInZError& e) {
    std::cerr << "not in Z: " << e.what() << "\n";
    return 1;
  } catch (const irs::NotInYError& e) {
    std::cerr << "not in Y: " << e.what() << "\n";
    return 1;
  } catch (const irs::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
