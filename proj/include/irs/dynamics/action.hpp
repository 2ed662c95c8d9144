#pragma once

// Finite actions of F_r: r permutations of {0, ..., n-1}. Words act on the
// right, letter by letter: x.(uv) = (x.u).v, with s_i sending x to perms[i-1][x].

#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "irs/errors.hpp"
#include "irs/finite_graph.hpp"
#include "irs/rng.hpp"
#include "irs/word.hpp"

namespace irs {

class FiniteAction {
 public:
  FiniteAction() = default;

  explicit FiniteAction(std::vector<std::vector<int>> perms) : perms_(std::move(perms)) {
    check_rank(static_cast<int>(perms_.size()));
    const std::size_t n = perms_[0].size();
    if (n == 0) throw DomainError("an action needs at least one point");
    inverse_.assign(perms_.size(), std::vector<int>(n, -1));
    for (std::size_t i = 0; i < perms_.size(); ++i) {
      if (perms_[i].size() != n) throw DomainError("permutations act on sets of different sizes");
      for (std::size_t x = 0; x < n; ++x) {
        int y = perms_[i][x];
        if (y < 0 || static_cast<std::size_t>(y) >= n || inverse_[i][y] != -1)
          throw DomainError("s" + std::to_string(i + 1) + " is not a permutation");
        inverse_[i][y] = static_cast<int>(x);
      }
    }
  }

  int rank() const noexcept { return static_cast<int>(perms_.size()); }
  int size() const noexcept { return perms_.empty() ? 0 : static_cast<int>(perms_[0].size()); }
  const std::vector<int>& perm(int gen) const { return perms_.at(gen - 1); }
  const std::vector<std::vector<int>>& perms() const noexcept { return perms_; }

  int apply(int x, Letter l) const {
    return l.is_inverse() ? inverse_[l.generator() - 1][x] : perms_[l.generator() - 1][x];
  }
  int apply(int x, const Word& w) const {
    for (Letter l : w) x = apply(x, l);
    return x;
  }

  // The whole action as one (possibly disconnected) permutation table set.
  FiniteSchreierGraph as_graph(int root) const { return FiniteSchreierGraph(rank(), perms_, root); }

  friend bool operator==(const FiniteAction& a, const FiniteAction& b) { return a.perms_ == b.perms_; }

 private:
  std::vector<std::vector<int>> perms_;
  std::vector<std::vector<int>> inverse_;
};

inline FiniteAction random_action(int rank, int n, Rng& rng) {
  std::vector<std::vector<int>> perms;
  for (int i = 0; i < rank; ++i) perms.push_back(rng.permutation(n));
  return FiniteAction(std::move(perms));
}

// "(0 1)(2 3 4)", "()" or "id"; unlisted points are fixed.
inline std::vector<int> parse_cycles(std::string_view text, int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::vector<bool> used(n, false);
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip();
  if (text.substr(pos) == "id") return p;
  while (pos < text.size()) {
    if (text[pos] != '(') throw DomainError("cycle notation: expected '(' in '" + std::string(text) + "'");
    ++pos;
    std::vector<int> cycle;
    while (true) {
      skip();
      if (pos >= text.size()) throw DomainError("cycle notation: unclosed cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      std::size_t end = pos;
      while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
      if (end == pos) throw DomainError("cycle notation: bad character '" + std::string(1, text[pos]) + "'");
      int x = std::stoi(std::string(text.substr(pos, end - pos)));
      if (x >= n) throw DomainError("cycle notation: point " + std::to_string(x) + " out of range");
      if (used[x]) throw DomainError("cycle notation: point " + std::to_string(x) + " appears twice");
      used[x] = true;
      cycle.push_back(x);
      pos = end;
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) p[cycle[k]] = cycle[(k + 1) % cycle.size()];
    skip();
  }
  return p;
}

inline std::string format_cycles(const std::vector<int>& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (seen[x] || p[x] == static_cast<int>(x)) continue;
    out += "(";
    for (int y = static_cast<int>(x); !seen[y]; y = p[y]) {
      if (y != static_cast<int>(x)) out += " ";
      out += std::to_string(y);
      seen[y] = true;
    }
    out += ")";
  }
  return out.empty() ? "id" : out;
}

namespace detail {

struct ActionLines {
  int points = -1;
  std::vector<std::pair<int, std::string>> perms;  // (generator, cycles)
  std::vector<std::vector<std::string>> other;     // remaining tokenised lines
};

inline ActionLines read_action_lines(std::istream& is) {
  ActionLines a;
  std::string line;
  while (std::getline(is, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "points") {
      if (!(ls >> a.points) || a.points < 1) throw DomainError("bad 'points' line");
    } else if (head == "perm") {
      std::string label;
      ls >> label;
      if (label.size() < 3 || label[0] != 's' || label.back() != ':')
        throw DomainError("perm lines look like 'perm s1: (0 1)'");
      int i = std::stoi(label.substr(1, label.size() - 2));
      std::string rest;
      std::getline(ls, rest);
      a.perms.emplace_back(i, rest);
    } else {
      std::vector<std::string> tok{head};
      for (std::string t; ls >> t;) tok.push_back(t);
      a.other.push_back(std::move(tok));
    }
  }
  if (a.points < 0) throw DomainError("missing 'points' line");
  if (a.perms.empty()) throw DomainError("no 'perm' lines");
  return a;
}

inline FiniteAction build_action(const ActionLines& a) {
  int rank = 0;
  for (const auto& [i, c] : a.perms) rank = std::max(rank, i);
  check_rank(rank);
  std::vector<std::vector<int>> perms(rank);
  std::vector<bool> given(rank, false);
  for (const auto& [i, cycles] : a.perms) {
    if (i < 1) throw DomainError("generators are numbered from s1");
    if (given[i - 1]) throw DomainError("s" + std::to_string(i) + " given twice");
    given[i - 1] = true;
    perms[i - 1] = parse_cycles(cycles, a.points);
  }
  for (int i = 0; i < rank; ++i)
    if (!given[i]) perms[i] = parse_cycles("id", a.points);
  return FiniteAction(std::move(perms));
}

}  // namespace detail

// Action file: "points <n>" and one "perm s<i>: <cycles>" line per generator.
// Generators up to the largest listed index exist; unlisted ones act trivially.
inline FiniteAction read_action(std::istream& is) {
  auto lines = detail::read_action_lines(is);
  if (!lines.other.empty()) throw DomainError("unexpected line '" + lines.other.front().front() + "' in action file");
  return detail::build_action(lines);
}

inline FiniteAction parse_action(const std::string& text) {
  std::istringstream is(text);
  return read_action(is);
}

inline FiniteAction load_action(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  return read_action(in);
}

inline std::string format_action(const FiniteAction& a) {
  std::string out = "points " + std::to_string(a.size()) + "\n";
  for (int i = 1; i <= a.rank(); ++i) out += "perm s" + std::to_string(i) + ": " + format_cycles(a.perm(i)) + "\n";
  return out;
}

}  // namespace irs
