#pragma once

#include <algorithm>
#include <vector>

#include "gt/series.hpp"

namespace gt {

inline bool is_lyndon(const Word& w) {
  if (w.empty()) return false;
  for (size_t k = 1; k < w.size(); ++k)
    if (w.substr(k) + w.substr(0, k) <= w) return false;
  return true;
}

// All Lyndon words over the signature alphabet whose letter weights sum to
// the given degree, sorted by WordLess. Generation in lex order up to
// length `degree` (the longest possible word at that weight), then filter.
inline std::vector<Word> lyndon_words_of_degree(const Signature& sig, int degree) {
  std::vector<Letter> alpha = alphabet(sig);
  std::vector<Word> out;
  if (degree <= 0 || alpha.empty()) return out;
  size_t maxlen = static_cast<size_t>(degree);
  std::vector<size_t> w{0};
  while (!w.empty()) {
    Word word;
    int wt = 0;
    for (size_t i : w) {
      word.push_back(alpha[i]);
      wt += letter_weight(alpha[i]);
    }
    if (wt == degree) out.push_back(word);
    size_t len = w.size();
    while (w.size() < maxlen) w.push_back(w[w.size() % len]);
    while (!w.empty() && w.back() == alpha.size() - 1) w.pop_back();
    if (!w.empty()) ++w.back();
  }
  std::sort(out.begin(), out.end(), WordLess{});
  return out;
}

// Right factor of the standard factorization: the lexicographically
// smallest proper suffix.
inline size_t standard_factorization_split(const Word& w) {
  size_t best = 1;
  for (size_t k = 2; k < w.size(); ++k)
    if (w.compare(k, Word::npos, w, best, Word::npos) < 0) best = k;
  return best;
}

// Iterated bracketing of a Lyndon word, as a series. Leading term is the
// word itself with coefficient 1.
inline Series lyndon_bracketing(const Signature& sig, const Word& w) {
  if (w.size() == 1) return Series::generator(sig, w[0]);
  size_t k = standard_factorization_split(w);
  return commutator(lyndon_bracketing(sig, w.substr(0, k)),
                    lyndon_bracketing(sig, w.substr(k)));
}

// Basis of the degree-d graded piece of the free Lie algebra.
struct LieBasisElement {
  Word word;
  Series value;
};

inline std::vector<LieBasisElement> lie_basis(const Signature& sig, int degree) {
  std::vector<LieBasisElement> out;
  for (const Word& w : lyndon_words_of_degree(sig, degree))
    out.push_back({w, lyndon_bracketing(sig, w)});
  return out;
}

}  // namespace gt
