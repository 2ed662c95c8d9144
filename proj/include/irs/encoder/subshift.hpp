#pragma once

// Configurations x: F_r -> {1..n} and the finite closed invariant sets they
// come from.
//
// A labelled action is a finite action with a symbol on every point. Its point
// b defines x_b(g) = label(g^-1 . b), where F_r acts on the left by s_i . p =
// sigma_i(p). Then f . x_b = x_{f . b} for the shift g . x(h) = x(g^-1 h).

#include <fstream>
#include <istream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "irs/dynamics/action.hpp"
#include "irs/errors.hpp"
#include "irs/word.hpp"

namespace irs {

class LabeledAction {
 public:
  LabeledAction(int alphabet, FiniteAction action, std::vector<int> labels)
      : alphabet_(alphabet), action_(std::move(action)), labels_(std::move(labels)) {
    if (alphabet_ < 1) throw DomainError("alphabet size must be at least 1");
    if (action_.rank() < 2) throw DomainError("the encoding needs rank at least 2");
    if (static_cast<int>(labels_.size()) != action_.size()) throw DomainError("one label per point required");
    for (int s : labels_)
      if (s < 1 || s > alphabet_)
        throw DomainError("label " + std::to_string(s) + " outside the alphabet 1.." + std::to_string(alphabet_));
    refine();
  }

  int alphabet() const noexcept { return alphabet_; }
  int rank() const noexcept { return action_.rank(); }
  int size() const noexcept { return action_.size(); }
  const FiniteAction& action() const noexcept { return action_; }
  int label(int p) const { return labels_.at(p); }
  const std::vector<int>& labels() const noexcept { return labels_; }

  // s . p for the left action.
  int left(Letter s, int p) const { return action_.apply(p, s); }
  // f . p: the rightmost letter of f acts first.
  int left(const Word& f, int p) const {
    for (auto it = f.letters().rbegin(); it != f.letters().rend(); ++it) p = action_.apply(p, *it);
    return p;
  }
  // g^-1 . p, the point whose configuration is x_p(g .).
  int shifted(int p, const Word& g) const {
    for (Letter t : g) p = action_.apply(p, t.inverse());
    return p;
  }

  int symbol(int p, const Word& g) const { return labels_[shifted(p, g)]; }

  // Points with equal configuration share a class. Classes come from
  // refining the label partition by the generators until it is stable.
  int config_class(int p) const { return classes_.at(p); }
  int class_count() const noexcept { return class_count_; }
  // Refinement rounds needed; configurations of different classes differ on B(depth).
  int separation_depth() const noexcept { return depth_; }
  int class_representative(int c) const { return reps_.at(c); }

 private:
  void refine() {
    const int n = size();
    std::vector<int> cls(labels_);
    auto renumber = [&](const std::vector<std::vector<int>>& sig) {
      std::map<std::vector<int>, int> ids;
      std::vector<int> out(n);
      for (int p = 0; p < n; ++p) out[p] = ids.emplace(sig[p], static_cast<int>(ids.size())).first->second;
      return std::pair{out, static_cast<int>(ids.size())};
    };
    std::vector<std::vector<int>> sig(n);
    for (int p = 0; p < n; ++p) sig[p] = {labels_[p]};
    auto [cur, count] = renumber(sig);
    depth_ = 0;
    while (true) {
      for (int p = 0; p < n; ++p) {
        sig[p] = {cur[p]};
        for (int s = 0; s < 2 * rank(); ++s) sig[p].push_back(cur[action_.apply(p, Letter::from_slot(s))]);
      }
      auto [next, next_count] = renumber(sig);
      if (next_count == count) break;
      cur = std::move(next);
      count = next_count;
      ++depth_;
    }
    classes_ = std::move(cur);
    class_count_ = count;
    reps_.assign(count, -1);
    for (int p = 0; p < n; ++p)
      if (reps_[classes_[p]] < 0) reps_[classes_[p]] = p;
  }

  int alphabet_;
  FiniteAction action_;
  std::vector<int> labels_;
  std::vector<int> classes_;
  std::vector<int> reps_;
  int class_count_ = 0;
  int depth_ = 0;
};

// A configuration: either x_b for a point b of a labelled action, or an
// explicit table on a ball B(R) (truncated; undefined beyond R).
class SubshiftPoint {
 public:
  SubshiftPoint(std::shared_ptr<const LabeledAction> space, int basepoint)
      : space_(std::move(space)), base_(basepoint) {
    if (base_ < 0 || base_ >= space_->size()) throw DomainError("basepoint out of range");
  }

  SubshiftPoint(int rank, int radius, std::map<Word, int, ShortlexLess> table)
      : rank_(rank), radius_(radius), table_(std::move(table)) {
    check_rank(rank);
    if (rank < 2) throw DomainError("the encoding needs rank at least 2");
  }

  bool action_backed() const noexcept { return static_cast<bool>(space_); }
  int rank() const noexcept { return space_ ? space_->rank() : rank_; }
  const std::shared_ptr<const LabeledAction>& space() const noexcept { return space_; }
  int basepoint() const noexcept { return base_; }
  int pattern_radius() const noexcept { return radius_; }

  int operator()(const Word& g) const {
    if (space_) return space_->symbol(base_, g);
    auto it = table_.find(g);
    if (it == table_.end())
      throw DomainError("truncated configuration is undefined at " + g.to_string() + " (pattern radius " +
                        std::to_string(radius_) + ")");
    return it->second;
  }

  // f . x (action-backed points only).
  SubshiftPoint translated(const Word& f) const {
    if (!space_) throw DomainError("translating a truncated pattern is not supported");
    return SubshiftPoint(space_, space_->left(f, base_));
  }

 private:
  std::shared_ptr<const LabeledAction> space_;
  int base_ = 0;
  int rank_ = 0;
  int radius_ = -1;
  std::map<Word, int, ShortlexLess> table_;
};

// Values of x on B(radius), in shortlex order of the words.
using Pattern = std::map<Word, int, ShortlexLess>;

inline Pattern pattern_of(const SubshiftPoint& x, int radius) {
  Pattern p;
  for (const Word& g : ball_words(x.rank(), radius)) p.emplace(g, x(g));
  return p;
}

inline std::string format_pattern(const Pattern& p) {
  std::string out;
  for (const auto& [g, s] : p) out += g.to_string() + " " + std::to_string(s) + "\n";
  return out;
}

// Subshift file: "alphabet n", "points k", "perm s<i>: <cycles>" lines,
// "label <point> <symbol>" lines (every point), and "basepoint <point>".
struct SubshiftFile {
  std::shared_ptr<const LabeledAction> space;
  int basepoint = 0;

  SubshiftPoint point() const { return SubshiftPoint(space, basepoint); }
};

inline SubshiftFile read_subshift(std::istream& is) {
  auto lines = detail::read_action_lines(is);
  FiniteAction action = detail::build_action(lines);
  int alphabet = -1, basepoint = 0;
  std::vector<int> labels(action.size(), 0);
  for (const auto& tok : lines.other) {
    auto num = [&](std::size_t k) {
      if (k >= tok.size()) throw DomainError("line '" + tok[0] + "' is missing a field");
      try {
        return std::stoi(tok[k]);
      } catch (const std::exception&) {
        throw DomainError("not a number: '" + tok[k] + "'");
      }
    };
    if (tok[0] == "alphabet") {
      alphabet = num(1);
    } else if (tok[0] == "label") {
      int p = num(1), s = num(2);
      if (p < 0 || p >= action.size()) throw DomainError("label for unknown point " + std::to_string(p));
      if (s == 0) throw DomainError("symbol 0 is not allowed (cycle lengths start at 1)");
      labels[p] = s;
    } else if (tok[0] == "basepoint") {
      basepoint = num(1);
    } else {
      throw DomainError("unexpected line '" + tok[0] + "' in subshift file");
    }
  }
  if (alphabet < 1) throw DomainError("missing or invalid 'alphabet' line");
  for (int p = 0; p < action.size(); ++p)
    if (labels[p] == 0) throw DomainError("point " + std::to_string(p) + " has no label");
  auto space = std::make_shared<const LabeledAction>(alphabet, std::move(action), std::move(labels));
  if (basepoint < 0 || basepoint >= space->size()) throw DomainError("basepoint out of range");
  return {space, basepoint};
}

inline SubshiftFile parse_subshift(const std::string& text) {
  std::istringstream is(text);
  return read_subshift(is);
}

inline SubshiftFile load_subshift(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path);
  return read_subshift(in);
}

}  // namespace irs
