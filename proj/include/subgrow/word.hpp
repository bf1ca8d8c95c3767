#pragma once

#include <compare>
#include <string>
#include <vector>

#include "subgrow/arith.hpp"
#include "subgrow/errors.hpp"

namespace subgrow {

// One signed generator symbol. sign is +1 or -1.
struct Letter {
  int gen;
  int sign;
  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

inline Letter inverse(Letter l) { return {l.gen, -l.sign}; }

// A freely reduced word in the generators of some presentation. The class
// invariant is that no adjacent pair cancels; every constructor enforces it.
class Word {
public:
  Word() = default;

  static Word from_letters(const std::vector<Letter>& raw) {
    Word w;
    for (const Letter& l : raw) w.push(l);
    return w;
  }

  // Appends one letter, cancelling against the current last letter.
  void push(Letter l) {
    if (l.gen < 0) throw input_error("word letter has negative generator index");
    if (l.sign != 1 && l.sign != -1) throw input_error("word letter sign must be +1 or -1");
    if (!letters_.empty() && letters_.back().gen == l.gen &&
        letters_.back().sign == -l.sign) {
      letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }

  void append(const Word& other) {
    for (const Letter& l : other.letters_) push(l);
  }

  Word inverse() const {
    Word w;
    w.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
      w.letters_.push_back(subgrow::inverse(*it));
    return w;
  }

  Word operator*(const Word& rhs) const {
    Word w = *this;
    w.append(rhs);
    return w;
  }

  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }
  const std::vector<Letter>& letters() const { return letters_; }

  // Largest generator index used; -1 for the empty word.
  int max_generator() const {
    int m = -1;
    for (const Letter& l : letters_)
      if (l.gen > m) m = l.gen;
    return m;
  }

  Int exponent_sum(int gen) const {
    Int s = 0;
    for (const Letter& l : letters_)
      if (l.gen == gen) s += l.sign;
    return s;
  }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

private:
  std::vector<Letter> letters_;
};

// The spec-level reduction operation; idempotent by construction.
inline Word free_reduce(const std::vector<Letter>& raw) {
  return Word::from_letters(raw);
}

inline Word word_from_gen(int gen, int sign = 1) {
  Word w;
  w.push({gen, sign});
  return w;
}

// Words print in letter syntax: lowercase = generator, uppercase = inverse.
// Only single-character generator names are printable this way; longer
// names fall back to a bracketed form used in diagnostics only.
inline std::string format_word(const Word& w, const std::vector<std::string>& names) {
  std::string out;
  for (const Letter& l : w.letters()) {
    if (l.gen >= static_cast<int>(names.size()))
      throw input_error("word uses generator outside the presentation");
    const std::string& name = names[l.gen];
    if (name.size() == 1 && name[0] >= 'a' && name[0] <= 'z') {
      out += l.sign > 0 ? name[0] : static_cast<char>(name[0] - 'a' + 'A');
    } else {
      out += l.sign > 0 ? "[" + name + "]" : "[" + name + "^-1]";
    }
  }
  return out;
}

inline Word parse_word(const std::string& text, const std::vector<std::string>& names) {
  Word w;
  for (char c : text) {
    if (c == ' ' || c == '\t') continue;
    bool upper = c >= 'A' && c <= 'Z';
    bool lower = c >= 'a' && c <= 'z';
    if (!upper && !lower) throw input_error(std::string("unexpected character '") + c + "' in word");
    char base = upper ? static_cast<char>(c - 'A' + 'a') : c;
    int gen = -1;
    for (std::size_t j = 0; j < names.size(); ++j)
      if (names[j].size() == 1 && names[j][0] == base) {
        gen = static_cast<int>(j);
        break;
      }
    if (gen < 0) throw input_error(std::string("unknown letter '") + base + "' in word");
    w.push({gen, upper ? -1 : 1});
  }
  return w;
}

}  // namespace subgrow
