#pragma once

// Letters and reduced words of the free group F_r on generators s1..sr.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdlib>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "irs/errors.hpp"

namespace irs {

// Compact tokens use one character per letter, so ranks are capped here.
inline constexpr int kMaxRank = 26;

class Letter {
 public:
  constexpr Letter() = default;
  // generator in 1..r; inverse selects s_i^-1.
  constexpr Letter(int generator, bool inverse) : value_(inverse ? -generator : generator) {}

  static constexpr Letter gen(int i) { return Letter(i, false); }
  static constexpr Letter inv(int i) { return Letter(i, true); }

  constexpr int generator() const noexcept { return value_ < 0 ? -value_ : value_; }
  constexpr bool is_inverse() const noexcept { return value_ < 0; }
  constexpr int sign() const noexcept { return value_ < 0 ? -1 : 1; }
  constexpr Letter inverse() const noexcept {
    Letter l;
    l.value_ = -value_;
    return l;
  }
  // Position in the fixed letter order s1 < s1^-1 < s2 < s2^-1 < ...
  constexpr int slot() const noexcept { return 2 * (generator() - 1) + (is_inverse() ? 1 : 0); }
  static constexpr Letter from_slot(int slot) { return Letter(slot / 2 + 1, slot % 2 == 1); }

  constexpr bool valid_for_rank(int rank) const noexcept {
    return value_ != 0 && generator() <= rank;
  }

  char compact() const noexcept {
    return static_cast<char>((is_inverse() ? 'A' : 'a') + generator() - 1);
  }

  std::string to_string() const {
    std::string s = "s" + std::to_string(generator());
    if (is_inverse()) s += "^-1";
    return s;
  }

  friend constexpr bool operator==(Letter a, Letter b) noexcept { return a.value_ == b.value_; }
  friend constexpr auto operator<=>(Letter a, Letter b) noexcept { return a.slot() <=> b.slot(); }

 private:
  int value_ = 0;
};

// All 2r letters in slot order.
inline std::vector<Letter> letters_of_rank(int rank) {
  std::vector<Letter> out;
  out.reserve(2 * rank);
  for (int s = 0; s < 2 * rank; ++s) out.push_back(Letter::from_slot(s));
  return out;
}

// Free reduction by a single left-to-right stack pass.
inline std::vector<Letter> free_reduce(std::span<const Letter> letters) {
  std::vector<Letter> out;
  out.reserve(letters.size());
  for (Letter l : letters) {
    if (!out.empty() && out.back() == l.inverse()) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

// An element of F_r, always stored in reduced form.
class Word {
 public:
  Word() = default;
  explicit Word(std::span<const Letter> letters) : letters_(free_reduce(letters)) {}
  Word(std::initializer_list<Letter> letters)
      : Word(std::span<const Letter>(letters.begin(), letters.size())) {}

  static Word identity() { return Word(); }

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  Word inverse() const {
    Word w;
    w.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(it->inverse());
    return w;
  }

  // Appends one letter, cancelling against the last letter when possible.
  Word& operator*=(Letter l) {
    if (!letters_.empty() && letters_.back() == l.inverse()) {
      letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
    return *this;
  }

  Word& operator*=(const Word& other) {
    for (Letter l : other.letters_) *this *= l;
    return *this;
  }

  friend Word operator*(Word a, const Word& b) { return a *= b; }
  friend Word operator*(Word a, Letter l) { return a *= l; }

  int max_generator() const noexcept {
    int m = 0;
    for (Letter l : letters_) m = std::max(m, l.generator());
    return m;
  }

  // Compact token: "1" for the identity, otherwise a/A for s1/s1^-1, b/B for s2, ...
  std::string compact() const {
    if (letters_.empty()) return "1";
    std::string s;
    s.reserve(letters_.size());
    for (Letter l : letters_) s.push_back(l.compact());
    return s;
  }

  // Readable form with exponent runs, e.g. "s1^2.s2^-1"; "e" for the identity.
  std::string to_string() const {
    if (letters_.empty()) return "e";
    std::string s;
    std::size_t i = 0;
    while (i < letters_.size()) {
      std::size_t j = i;
      while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
      if (!s.empty()) s += '.';
      s += "s" + std::to_string(letters_[i].generator());
      long exponent = static_cast<long>(j - i) * letters_[i].sign();
      if (exponent != 1) s += "^" + std::to_string(exponent);
      i = j;
    }
    return s;
  }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

// Shortlex: shorter words first, then lexicographic in slot order.
inline bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

struct ShortlexLess {
  bool operator()(const Word& a, const Word& b) const { return shortlex_less(a, b); }
};

inline Word reduce(std::span<const Letter> letters) { return Word(letters); }

// Parses "e", "1", compact tokens ("aB"), or '.'/'*'/space separated s<i>[^k] factors.
inline Word parse_word(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty() || text == "e" || text == "1") return Word();

  // Readable factors always carry a digit, compact tokens never do.
  bool compact = std::all_of(text.begin(), text.end(), [](char c) {
    return std::isalpha(static_cast<unsigned char>(c)) != 0;
  });
  std::vector<Letter> letters;
  if (compact) {
    for (char c : text) {
      if (c >= 'a' && c <= 'z') {
        letters.push_back(Letter::gen(c - 'a' + 1));
      } else {
        letters.push_back(Letter::inv(c - 'A' + 1));
      }
    }
    return Word(letters);
  }

  std::size_t pos = 0;
  auto fail = [&](const std::string& why) -> Word {
    throw DomainError("cannot parse word '" + std::string(text) + "': " + why);
  };
  while (pos < text.size()) {
    char c = text[pos];
    if (c == '.' || c == '*' || std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
      continue;
    }
    if (c != 's') return fail("expected 's<i>' at position " + std::to_string(pos));
    ++pos;
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) return fail("missing generator index");
    int gen = std::stoi(std::string(text.substr(start, pos - start)));
    if (gen < 1 || gen > kMaxRank) return fail("generator index out of range");
    long exponent = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      std::size_t es = pos;
      if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (es == pos) return fail("missing exponent");
      exponent = std::stol(std::string(text.substr(es, pos - es)));
    }
    Letter l(gen, exponent < 0);
    for (long k = 0; k < std::labs(exponent); ++k) letters.push_back(l);
  }
  return Word(letters);
}

// Every reduced word of length <= radius over rank r, in shortlex order (identity first).
inline std::vector<Word> ball_words(int rank, int radius) {
  std::vector<Word> all{Word()};
  std::size_t layer_begin = 0;
  const auto letters = letters_of_rank(rank);
  for (int len = 1; len <= radius; ++len) {
    std::size_t layer_end = all.size();
    for (std::size_t k = layer_begin; k < layer_end; ++k) {
      for (Letter l : letters) {
        const Word& w = all[k];
        if (!w.empty() && w.letters().back() == l.inverse()) continue;
        all.push_back(w * l);
      }
    }
    layer_begin = layer_end;
  }
  return all;
}

// |B(radius)| in F_r: 1 + 2r((2r-1)^radius - 1)/(2r-2).
inline std::size_t ball_size(int rank, int radius) {
  std::size_t total = 1, layer = 2 * static_cast<std::size_t>(rank);
  for (int k = 1; k <= radius; ++k) {
    total += layer;
    layer *= 2 * static_cast<std::size_t>(rank) - 1;
  }
  return total;
}

}  // namespace irs

template <>
struct std::hash<irs::Word> {
  std::size_t operator()(const irs::Word& w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (irs::Letter l : w) {
      h ^= static_cast<std::size_t>(l.slot() + 1);
      h *= 1099511628211ull;
    }
    return h;
  }
};
