#pragma once

#include "gt/series.hpp"

namespace gt {

struct WordPairLess {
  bool operator()(const std::pair<Word, Word>& a, const std::pair<Word, Word>& b) const {
    WordLess less;
    if (less(a.first, b.first)) return true;
    if (less(b.first, a.first)) return false;
    return less(a.second, b.second);
  }
};

// Series in A (x) A, truncated by total degree.
template <class K>
class TensorSeriesT {
 public:
  Signature sig{};
  int valid = kExactDegree;
  std::map<std::pair<Word, Word>, K, WordPairLess> terms;

  TensorSeriesT() = default;
  explicit TensorSeriesT(const Signature& s, int v = kExactDegree) : sig(s), valid(v) {}

  bool is_zero() const { return terms.empty(); }

  void add_term(const Word& l, const Word& r, const K& c) {
    if (coeff_is_zero(c)) return;
    if (word_degree(l) + word_degree(r) > valid) return;
    auto key = std::make_pair(l, r);
    auto [it, fresh] = terms.emplace(std::move(key), c);
    if (!fresh) {
      it->second += c;
      if (coeff_is_zero(it->second)) terms.erase(it);
    }
  }

  TensorSeriesT operator-() const {
    TensorSeriesT r(sig, valid);
    for (const auto& [k, c] : terms) r.terms.emplace(k, -c);
    return r;
  }

  friend TensorSeriesT operator+(const TensorSeriesT& a, const TensorSeriesT& b) {
    require_same_sig(a.sig, b.sig, "tensor add");
    TensorSeriesT r(a.sig, valid_min(a.valid, b.valid));
    for (const auto& [k, c] : a.terms)
      if (word_degree(k.first) + word_degree(k.second) <= r.valid) r.terms.emplace(k, c);
    for (const auto& [k, c] : b.terms) r.add_term(k.first, k.second, c);
    return r;
  }
  friend TensorSeriesT operator-(const TensorSeriesT& a, const TensorSeriesT& b) {
    return a + (-b);
  }

  // Componentwise product (a (x) b)(c (x) d) = ac (x) bd.
  friend TensorSeriesT operator*(const TensorSeriesT& a, const TensorSeriesT& b) {
    require_same_sig(a.sig, b.sig, "tensor mul");
    TensorSeriesT r(a.sig, valid_min(a.valid, b.valid));
    for (const auto& [ka, ca] : a.terms) {
      int da = word_degree(ka.first) + word_degree(ka.second);
      for (const auto& [kb, cb] : b.terms) {
        if (da + word_degree(kb.first) + word_degree(kb.second) > r.valid) continue;
        r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
      }
    }
    return r;
  }

  TensorSeriesT scaled(const K& k) const {
    TensorSeriesT r(sig, valid);
    if (coeff_is_zero(k)) return r;
    for (const auto& [key, c] : terms) {
      K v = c * k;
      if (!coeff_is_zero(v)) r.terms.emplace(key, v);
    }
    return r;
  }

  friend bool operator==(const TensorSeriesT& a, const TensorSeriesT& b) {
    if (a.sig != b.sig) return false;
    int N = valid_min(a.valid, b.valid);
    auto deg = [](const std::pair<Word, Word>& k) {
      return word_degree(k.first) + word_degree(k.second);
    };
    auto ia = a.terms.begin(), ib = b.terms.begin();
    while (true) {
      while (ia != a.terms.end() && deg(ia->first) > N) ++ia;
      while (ib != b.terms.end() && deg(ib->first) > N) ++ib;
      if (ia == a.terms.end() || ib == b.terms.end()) break;
      if (ia->first != ib->first || !(ia->second == ib->second)) return false;
      ++ia;
      ++ib;
    }
    while (ia != a.terms.end()) {
      if (deg(ia->first) <= N) return false;
      ++ia;
    }
    while (ib != b.terms.end()) {
      if (deg(ib->first) <= N) return false;
      ++ib;
    }
    return true;
  }
  friend bool operator!=(const TensorSeriesT& a, const TensorSeriesT& b) { return !(a == b); }
};

using TensorSeries = TensorSeriesT<Rational>;

template <class K>
inline TensorSeriesT<K> tensor_of(const SeriesT<K>& a, const SeriesT<K>& b) {
  require_same_sig(a.sig, b.sig, "tensor of");
  TensorSeriesT<K> r(a.sig, valid_min(a.valid, b.valid));
  for (const auto& [wa, ca] : a.terms)
    for (const auto& [wb, cb] : b.terms) r.add_term(wa, wb, ca * cb);
  return r;
}

// Coproduct with primitive generators: Delta(w) runs over subsets of letter
// positions, splitting w into a subsequence and its complement.
template <class K>
inline TensorSeriesT<K> coproduct(const SeriesT<K>& a) {
  TensorSeriesT<K> r(a.sig, a.valid);
  for (const auto& [w, c] : a.terms) {
    size_t L = w.size();
    for (unsigned long mask = 0; mask < (1ul << L); ++mask) {
      Word left, right;
      for (size_t i = 0; i < L; ++i) {
        if (mask & (1ul << i))
          left.push_back(w[i]);
        else
          right.push_back(w[i]);
      }
      r.add_term(left, right, c);
    }
  }
  return r;
}

template <class K>
inline TensorSeriesT<K> apply_antipode_second(const TensorSeriesT<K>& a) {
  TensorSeriesT<K> r(a.sig, a.valid);
  for (const auto& [k, c] : a.terms) {
    Word rw(k.second.rbegin(), k.second.rend());
    r.add_term(k.first, rw, (k.second.size() % 2) ? -c : c);
  }
  return r;
}

// (id (x) counit): keep the first slot of terms whose second slot is empty.
template <class K>
inline SeriesT<K> counit_second(const TensorSeriesT<K>& a) {
  SeriesT<K> r(a.sig, a.valid);
  for (const auto& [k, c] : a.terms)
    if (k.second.empty()) r.add_term(k.first, c);
  return r;
}

template <class K>
inline bool is_lie_like(const SeriesT<K>& a) {
  if (!coeff_is_zero(counit(a))) return false;
  TensorSeriesT<K> d = coproduct(a);
  TensorSeriesT<K> p = tensor_of(a, SeriesT<K>::one(a.sig, a.valid)) +
                       tensor_of(SeriesT<K>::one(a.sig, a.valid), a);
  return d == p;
}

template <class K>
inline bool is_group_like(const SeriesT<K>& a) {
  if (!(counit(a) == K(Rational(1)))) return false;
  return coproduct(a) == tensor_of(a, a);
}

// Double derivation d/ds: sends a word to the sum over occurrences of the
// letter s of (prefix (x) suffix).
template <class K>
inline TensorSeriesT<K> double_derivative(Letter s, const SeriesT<K>& a) {
  TensorSeriesT<K> r(a.sig, valid_shift(a.valid, -letter_weight(s)));
  for (const auto& [w, c] : a.terms) {
    for (size_t i = 0; i < w.size(); ++i) {
      if (w[i] != s) continue;
      r.add_term(w.substr(0, i), w.substr(i + 1), c);
    }
  }
  return r;
}

}  // namespace gt
