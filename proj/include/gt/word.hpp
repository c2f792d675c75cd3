#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "gt/signature.hpp"

namespace gt {

// A basis word of the tensor algebra: a (possibly empty) string of letters.
using Word = std::u8string;

inline int word_degree(const Word& w) {
  int d = 0;
  for (Letter l : w) d += letter_weight(l);
  return d;
}

// Canonical order on basis words: total weight, then length, then letters.
struct WordLess {
  bool operator()(const Word& a, const Word& b) const {
    int da = word_degree(a), db = word_degree(b);
    if (da != db) return da < db;
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

inline std::string word_str(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += letter_name(w[i]);
  }
  return out;
}

// count letters of w read cyclically from position start
inline Word cyclic_range(const Word& w, size_t start, size_t count) {
  Word out;
  out.reserve(count);
  for (size_t t = 0; t < count; ++t) out.push_back(w[(start + t) % w.size()]);
  return out;
}

inline std::vector<Word> words_of_degree(const Signature& sig, int degree) {
  std::vector<Word> out;
  if (degree == 0) {
    out.push_back(Word());
    return out;
  }
  if (degree < 0) return out;
  for (Letter l : alphabet(sig)) {
    if (letter_weight(l) > degree) continue;
    for (const Word& tail : words_of_degree(sig, degree - letter_weight(l)))
      out.push_back(Word(1, l) + tail);
  }
  std::sort(out.begin(), out.end(), WordLess{});
  return out;
}

// Booth's least-rotation algorithm; returns the starting index of the
// lexicographically least rotation of w.
inline size_t least_rotation_index(const Word& w) {
  size_t m = w.size();
  if (m <= 1) return 0;
  std::u8string s = w + w;
  std::vector<long> f(s.size(), -1);
  size_t k = 0;
  for (size_t j = 1; j < s.size(); ++j) {
    Letter sj = s[j];
    long i = f[j - k - 1];
    while (i != -1 && sj != s[k + i + 1]) {
      if (sj < s[k + i + 1]) k = j - i - 1;
      i = f[i];
    }
    if (sj != s[k + i + 1]) {
      if (sj < s[k]) k = j;
      f[j - k] = -1;
    } else {
      f[j - k] = i + 1;
    }
  }
  return k;
}

// A cyclic word (necklace), stored by its canonical least rotation.
struct CyclicWord {
  Word rep;

  CyclicWord() = default;
  explicit CyclicWord(const Word& w) {
    size_t k = least_rotation_index(w);
    rep = w.substr(k) + w.substr(0, k);
  }

  int degree() const { return word_degree(rep); }
  size_t length() const { return rep.size(); }

  friend bool operator==(const CyclicWord& a, const CyclicWord& b) { return a.rep == b.rep; }
  friend bool operator!=(const CyclicWord& a, const CyclicWord& b) { return a.rep != b.rep; }
};

struct CyclicWordLess {
  bool operator()(const CyclicWord& a, const CyclicWord& b) const {
    return WordLess{}(a.rep, b.rep);
  }
};

inline std::string cyclic_word_str(const CyclicWord& c) {
  return "|" + word_str(c.rep) + "|";
}

}  // namespace gt
