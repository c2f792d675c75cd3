#pragma once

#include <map>
#include <utility>

#include "gt/word.hpp"

namespace gt {

// Sentinel validity for data that is exact in every degree (finite sums).
constexpr int kExactDegree = 1 << 28;
constexpr int kInfiniteDegree = 1 << 29;  // min_degree of the zero series

inline int valid_min(int a, int b) { return a < b ? a : b; }

// Shifting the exactness frontier; exact data stays exact.
inline int valid_shift(int v, int s) {
  if (v >= kExactDegree) return kExactDegree;
  return v + s;
}

// A truncated series in the completed graded tensor algebra: a finite table
// word -> coefficient, exact through degree `valid`.
template <class K>
class SeriesT {
 public:
  Signature sig{};
  int valid = kExactDegree;
  std::map<Word, K, WordLess> terms;

  SeriesT() = default;
  explicit SeriesT(const Signature& s, int v = kExactDegree) : sig(s), valid(v) {}

  static SeriesT zero(const Signature& s, int v = kExactDegree) { return SeriesT(s, v); }
  static SeriesT one(const Signature& s, int v = kExactDegree) {
    SeriesT r(s, v);
    r.add_term(Word(), K(Rational(1)));
    return r;
  }
  static SeriesT from_word(const Signature& s, const Word& w, const K& c = K(Rational(1)),
                           int v = kExactDegree) {
    SeriesT r(s, v);
    r.add_term(w, c);
    return r;
  }
  static SeriesT generator(const Signature& s, Letter l, int v = kExactDegree) {
    return from_word(s, Word(1, l), K(Rational(1)), v);
  }

  bool is_zero() const { return terms.empty(); }

  void add_term(const Word& w, const K& c) {
    if (coeff_is_zero(c)) return;
    if (word_degree(w) > valid) return;
    auto [it, fresh] = terms.emplace(w, c);
    if (!fresh) {
      it->second += c;
      if (coeff_is_zero(it->second)) terms.erase(it);
    }
  }

  K coeff(const Word& w) const {
    auto it = terms.find(w);
    return it == terms.end() ? K() : it->second;
  }

  int min_degree() const {
    if (terms.empty()) return kInfiniteDegree;
    return word_degree(terms.begin()->first);  // map is ordered by degree first
  }
  int max_degree() const {
    if (terms.empty()) return -1;
    return word_degree(terms.rbegin()->first);
  }

  SeriesT truncated(int N) const {
    SeriesT r(sig, valid_min(valid, N));
    for (const auto& [w, c] : terms)
      if (word_degree(w) <= N) r.terms.emplace(w, c);
    return r;
  }

  SeriesT graded_component(int d) const {
    if (d > valid) throw DegreeOverflow("graded component beyond valid degree");
    SeriesT r(sig, valid);
    for (const auto& [w, c] : terms)
      if (word_degree(w) == d) r.terms.emplace(w, c);
    return r;
  }

  SeriesT operator-() const {
    SeriesT r(sig, valid);
    for (const auto& [w, c] : terms) r.terms.emplace(w, -c);
    return r;
  }

  friend SeriesT operator+(const SeriesT& a, const SeriesT& b) {
    require_same_sig(a.sig, b.sig, "series add");
    SeriesT r(a.sig, valid_min(a.valid, b.valid));
    for (const auto& [w, c] : a.terms)
      if (word_degree(w) <= r.valid) r.terms.emplace(w, c);
    for (const auto& [w, c] : b.terms) r.add_term(w, c);
    return r;
  }
  friend SeriesT operator-(const SeriesT& a, const SeriesT& b) { return a + (-b); }

  friend SeriesT operator*(const SeriesT& a, const SeriesT& b) {
    require_same_sig(a.sig, b.sig, "series mul");
    SeriesT r(a.sig, valid_min(a.valid, b.valid));
    for (const auto& [wa, ca] : a.terms) {
      int da = word_degree(wa);
      if (da > r.valid) break;
      for (const auto& [wb, cb] : b.terms) {
        if (da + word_degree(wb) > r.valid) break;
        r.add_term(wa + wb, ca * cb);
      }
    }
    return r;
  }

  SeriesT scaled(const K& k) const {
    SeriesT r(sig, valid);
    if (coeff_is_zero(k)) return r;
    for (const auto& [w, c] : terms) {
      K v = c * k;
      if (!coeff_is_zero(v)) r.terms.emplace(w, v);
    }
    return r;
  }

  // Coefficient-wise equality through the smaller valid degree.
  friend bool operator==(const SeriesT& a, const SeriesT& b) {
    if (a.sig != b.sig) return false;
    int N = valid_min(a.valid, b.valid);
    auto ia = a.terms.begin(), ib = b.terms.begin();
    while (true) {
      while (ia != a.terms.end() && word_degree(ia->first) > N) ++ia;
      while (ib != b.terms.end() && word_degree(ib->first) > N) ++ib;
      if (ia == a.terms.end() || ib == b.terms.end()) break;
      if (ia->first != ib->first || !(ia->second == ib->second)) return false;
      ++ia;
      ++ib;
    }
    while (ia != a.terms.end()) {
      if (word_degree(ia->first) <= N) return false;
      ++ia;
    }
    while (ib != b.terms.end()) {
      if (word_degree(ib->first) <= N) return false;
      ++ib;
    }
    return true;
  }
  friend bool operator!=(const SeriesT& a, const SeriesT& b) { return !(a == b); }
};

using Series = SeriesT<Rational>;

template <class K>
inline K counit(const SeriesT<K>& a) {
  return a.coeff(Word());
}

// Antipode: reverse each word and negate per letter.
template <class K>
inline SeriesT<K> antipode(const SeriesT<K>& a) {
  SeriesT<K> r(a.sig, a.valid);
  for (const auto& [w, c] : a.terms) {
    Word rw(w.rbegin(), w.rend());
    r.terms.emplace(std::move(rw), (w.size() % 2) ? -c : c);
  }
  return r;
}

template <class K>
inline SeriesT<K> exp_series(const SeriesT<K>& a) {
  if (a.valid >= kExactDegree && !a.is_zero())
    throw DegreeOverflow("exp needs a finite valid degree");
  if (!coeff_is_zero(counit(a))) throw NonAugmentedExp("exp of series with constant term");
  SeriesT<K> r = SeriesT<K>::one(a.sig, a.valid);
  SeriesT<K> pw = SeriesT<K>::one(a.sig, a.valid);
  for (int m = 1; m <= a.valid; ++m) {
    pw = pw * a;
    if (pw.is_zero()) break;
    r = r + pw.scaled(K(factorial(m).inv()));
  }
  return r;
}

template <class K>
inline SeriesT<K> log_series(const SeriesT<K>& a) {
  if (a.valid >= kExactDegree && !(a == SeriesT<K>::one(a.sig)))
    throw DegreeOverflow("log needs a finite valid degree");
  if (!(counit(a) == K(Rational(1)))) throw NonUnitalLog("log of series with constant term != 1");
  SeriesT<K> x = a - SeriesT<K>::one(a.sig, a.valid);
  SeriesT<K> r = SeriesT<K>::zero(a.sig, a.valid);
  SeriesT<K> pw = SeriesT<K>::one(a.sig, a.valid);
  for (int m = 1; m <= a.valid; ++m) {
    pw = pw * x;
    if (pw.is_zero()) break;
    r = r + pw.scaled(K(Rational((m % 2) ? 1 : -1) / Rational(m)));
  }
  return r;
}

template <class K>
inline SeriesT<K> commutator(const SeriesT<K>& a, const SeriesT<K>& b) {
  return a * b - b * a;
}

// Scalar summands are central, so they split off additively.
template <class K>
inline SeriesT<K> bch(const SeriesT<K>& a, const SeriesT<K>& b) {
  SeriesT<K> ap = a, bp = b;
  K ca = counit(a), cb = counit(b);
  ap.add_term(Word(), K() - ca);
  bp.add_term(Word(), K() - cb);
  SeriesT<K> r = log_series(exp_series(ap) * exp_series(bp));
  r.add_term(Word(), ca + cb);
  return r;
}

// omega = sum_i [x_i, y_i] + sum_j z_j, the graded boundary class.
inline Series omega(const Signature& sig) {
  Series r(sig);
  for (int i = 1; i <= sig.g; ++i) {
    Word xy{letter_x(i), letter_y(i)};
    Word yx{letter_y(i), letter_x(i)};
    r.add_term(xy, Rational(1));
    r.add_term(yx, Rational(-1));
  }
  for (int j = 1; j <= sig.n; ++j) r.add_term(Word(1, letter_z(j)), Rational(1));
  return r;
}

// xi = log( prod_i e^{x_i} e^{y_i} e^{-x_i} e^{-y_i} . prod_j e^{z_j} ), truncated.
inline Series xi(const Signature& sig, int N) {
  Series p = Series::one(sig, N);
  for (int i = 1; i <= sig.g; ++i) {
    Series x = Series::generator(sig, letter_x(i), N);
    Series y = Series::generator(sig, letter_y(i), N);
    p = p * exp_series(x) * exp_series(y) * exp_series(-x) * exp_series(-y);
  }
  for (int j = 1; j <= sig.n; ++j)
    p = p * exp_series(Series::generator(sig, letter_z(j), N));
  return log_series(p);
}

// Change of coefficient ring, term by term.
template <class K2, class K1, class F>
inline SeriesT<K2> map_coeffs(const SeriesT<K1>& a, F&& f) {
  SeriesT<K2> r(a.sig, a.valid);
  for (const auto& [w, c] : a.terms) {
    K2 v = f(c);
    if (!coeff_is_zero(v)) r.terms.emplace(w, v);
  }
  return r;
}

}  // namespace gt
