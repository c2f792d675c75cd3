#pragma once

#include <array>

#include "gt/tensor.hpp"

namespace gt {

// Linear combination of necklace words: the trace space |A| = A/[A,A].
template <class K>
class CyclicSeriesT {
 public:
  Signature sig{};
  int valid = kExactDegree;
  std::map<CyclicWord, K, CyclicWordLess> terms;

  CyclicSeriesT() = default;
  explicit CyclicSeriesT(const Signature& s, int v = kExactDegree) : sig(s), valid(v) {}

  static CyclicSeriesT zero(const Signature& s, int v = kExactDegree) {
    return CyclicSeriesT(s, v);
  }
  static CyclicSeriesT unit(const Signature& s, int v = kExactDegree) {
    CyclicSeriesT r(s, v);
    r.add_term(CyclicWord(), K(Rational(1)));
    return r;
  }
  static CyclicSeriesT from_word(const Signature& s, const Word& w,
                                 const K& c = K(Rational(1)), int v = kExactDegree) {
    CyclicSeriesT r(s, v);
    r.add_term(CyclicWord(w), c);
    return r;
  }

  bool is_zero() const { return terms.empty(); }

  void add_term(const CyclicWord& w, const K& c) {
    if (coeff_is_zero(c)) return;
    if (w.degree() > valid) return;
    auto [it, fresh] = terms.emplace(w, c);
    if (!fresh) {
      it->second += c;
      if (coeff_is_zero(it->second)) terms.erase(it);
    }
  }

  K coeff(const CyclicWord& w) const {
    auto it = terms.find(w);
    return it == terms.end() ? K() : it->second;
  }

  int min_degree() const {
    if (terms.empty()) return kInfiniteDegree;
    return terms.begin()->first.degree();
  }

  CyclicSeriesT truncated(int N) const {
    CyclicSeriesT r(sig, valid_min(valid, N));
    for (const auto& [w, c] : terms)
      if (w.degree() <= N) r.terms.emplace(w, c);
    return r;
  }

  CyclicSeriesT graded_component(int d) const {
    if (d > valid) throw DegreeOverflow("graded component beyond valid degree");
    CyclicSeriesT r(sig, valid);
    for (const auto& [w, c] : terms)
      if (w.degree() == d) r.terms.emplace(w, c);
    return r;
  }

  CyclicSeriesT operator-() const {
    CyclicSeriesT r(sig, valid);
    for (const auto& [w, c] : terms) r.terms.emplace(w, -c);
    return r;
  }

  friend CyclicSeriesT operator+(const CyclicSeriesT& a, const CyclicSeriesT& b) {
    require_same_sig(a.sig, b.sig, "cyclic add");
    CyclicSeriesT r(a.sig, valid_min(a.valid, b.valid));
    for (const auto& [w, c] : a.terms)
      if (w.degree() <= r.valid) r.terms.emplace(w, c);
    for (const auto& [w, c] : b.terms) r.add_term(w, c);
    return r;
  }
  friend CyclicSeriesT operator-(const CyclicSeriesT& a, const CyclicSeriesT& b) {
    return a + (-b);
  }

  CyclicSeriesT scaled(const K& k) const {
    CyclicSeriesT r(sig, valid);
    if (coeff_is_zero(k)) return r;
    for (const auto& [w, c] : terms) {
      K v = c * k;
      if (!coeff_is_zero(v)) r.terms.emplace(w, v);
    }
    return r;
  }

  friend bool operator==(const CyclicSeriesT& a, const CyclicSeriesT& b) {
    if (a.sig != b.sig) return false;
    int N = valid_min(a.valid, b.valid);
    auto ia = a.terms.begin(), ib = b.terms.begin();
    while (true) {
      while (ia != a.terms.end() && ia->first.degree() > N) ++ia;
      while (ib != b.terms.end() && ib->first.degree() > N) ++ib;
      if (ia == a.terms.end() || ib == b.terms.end()) break;
      if (!(ia->first == ib->first) || !(ia->second == ib->second)) return false;
      ++ia;
      ++ib;
    }
    while (ia != a.terms.end()) {
      if (ia->first.degree() <= N) return false;
      ++ia;
    }
    while (ib != b.terms.end()) {
      if (ib->first.degree() <= N) return false;
      ++ib;
    }
    return true;
  }
  friend bool operator!=(const CyclicSeriesT& a, const CyclicSeriesT& b) { return !(a == b); }
};

using CyclicSeries = CyclicSeriesT<Rational>;

template <class K>
inline CyclicSeriesT<K> trace(const SeriesT<K>& a) {
  CyclicSeriesT<K> r(a.sig, a.valid);
  for (const auto& [w, c] : a.terms) r.add_term(CyclicWord(w), c);
  return r;
}

// Counit of the trace space: coefficient of the empty necklace.
template <class K>
inline K cyclic_counit(const CyclicSeriesT<K>& a) {
  return a.coeff(CyclicWord());
}

struct CyclicPairLess {
  bool operator()(const std::pair<CyclicWord, CyclicWord>& a,
                  const std::pair<CyclicWord, CyclicWord>& b) const {
    CyclicWordLess less;
    if (less(a.first, b.first)) return true;
    if (less(b.first, a.first)) return false;
    return less(a.second, b.second);
  }
};

// Series in |A| (x) |A|.
template <class K>
class BiCyclicSeriesT {
 public:
  Signature sig{};
  int valid = kExactDegree;
  std::map<std::pair<CyclicWord, CyclicWord>, K, CyclicPairLess> terms;

  BiCyclicSeriesT() = default;
  explicit BiCyclicSeriesT(const Signature& s, int v = kExactDegree) : sig(s), valid(v) {}

  bool is_zero() const { return terms.empty(); }

  void add_term(const CyclicWord& l, const CyclicWord& r, const K& c) {
    if (coeff_is_zero(c)) return;
    if (l.degree() + r.degree() > valid) return;
    auto key = std::make_pair(l, r);
    auto [it, fresh] = terms.emplace(std::move(key), c);
    if (!fresh) {
      it->second += c;
      if (coeff_is_zero(it->second)) terms.erase(it);
    }
  }

  BiCyclicSeriesT operator-() const {
    BiCyclicSeriesT r(sig, valid);
    for (const auto& [k, c] : terms) r.terms.emplace(k, -c);
    return r;
  }

  friend BiCyclicSeriesT operator+(const BiCyclicSeriesT& a, const BiCyclicSeriesT& b) {
    require_same_sig(a.sig, b.sig, "bicyclic add");
    BiCyclicSeriesT r(a.sig, valid_min(a.valid, b.valid));
    for (const auto& [k, c] : a.terms)
      if (k.first.degree() + k.second.degree() <= r.valid) r.terms.emplace(k, c);
    for (const auto& [k, c] : b.terms) r.add_term(k.first, k.second, c);
    return r;
  }
  friend BiCyclicSeriesT operator-(const BiCyclicSeriesT& a, const BiCyclicSeriesT& b) {
    return a + (-b);
  }

  BiCyclicSeriesT scaled(const K& k) const {
    BiCyclicSeriesT r(sig, valid);
    if (coeff_is_zero(k)) return r;
    for (const auto& [key, c] : terms) {
      K v = c * k;
      if (!coeff_is_zero(v)) r.terms.emplace(key, v);
    }
    return r;
  }

  BiCyclicSeriesT truncated(int N) const {
    BiCyclicSeriesT r(sig, valid_min(valid, N));
    for (const auto& [k, c] : terms)
      if (k.first.degree() + k.second.degree() <= N) r.terms.emplace(k, c);
    return r;
  }

  // Swap the two slots.
  BiCyclicSeriesT flipped() const {
    BiCyclicSeriesT r(sig, valid);
    for (const auto& [k, c] : terms) r.add_term(k.second, k.first, c);
    return r;
  }

  friend bool operator==(const BiCyclicSeriesT& a, const BiCyclicSeriesT& b) {
    if (a.sig != b.sig) return false;
    int N = valid_min(a.valid, b.valid);
    auto deg = [](const std::pair<CyclicWord, CyclicWord>& k) {
      return k.first.degree() + k.second.degree();
    };
    auto ia = a.terms.begin(), ib = b.terms.begin();
    while (true) {
      while (ia != a.terms.end() && deg(ia->first) > N) ++ia;
      while (ib != b.terms.end() && deg(ib->first) > N) ++ib;
      if (ia == a.terms.end() || ib == b.terms.end()) break;
      if (!(ia->first == ib->first) || !(ia->second == ib->second)) return false;
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
  friend bool operator!=(const BiCyclicSeriesT& a, const BiCyclicSeriesT& b) { return !(a == b); }
};

using BiCyclicSeries = BiCyclicSeriesT<Rational>;

template <class K>
inline BiCyclicSeriesT<K> tensor_of(const CyclicSeriesT<K>& a, const CyclicSeriesT<K>& b) {
  require_same_sig(a.sig, b.sig, "cyclic tensor of");
  BiCyclicSeriesT<K> r(a.sig, valid_min(a.valid, b.valid));
  for (const auto& [wa, ca] : a.terms)
    for (const auto& [wb, cb] : b.terms) r.add_term(wa, wb, ca * cb);
  return r;
}

// P ^ Q = P (x) Q - Q (x) P.
template <class K>
inline BiCyclicSeriesT<K> wedge(const CyclicSeriesT<K>& a, const CyclicSeriesT<K>& b) {
  return tensor_of(a, b) - tensor_of(b, a);
}

// Trace both slots of a tensor series.
template <class K>
inline BiCyclicSeriesT<K> trace_both(const TensorSeriesT<K>& a) {
  BiCyclicSeriesT<K> r(a.sig, a.valid);
  for (const auto& [k, c] : a.terms) r.add_term(CyclicWord(k.first), CyclicWord(k.second), c);
  return r;
}

// (|.| (x) |.|) o (id (x) antipode) o Delta, on a canonical lift of each necklace.
// The result does not depend on the chosen rotation.
template <class K>
inline BiCyclicSeriesT<K> delta_tilde(const CyclicSeriesT<K>& a) {
  BiCyclicSeriesT<K> r(a.sig, a.valid);
  for (const auto& [cw, c] : a.terms) {
    SeriesT<K> lift = SeriesT<K>::from_word(a.sig, cw.rep, c, a.valid);
    r = r + trace_both(apply_antipode_second(coproduct(lift)));
  }
  return r;
}

// (id (x) counit): recovers P from sum P (x) |1| terms.
template <class K>
inline CyclicSeriesT<K> co_counit_first(const BiCyclicSeriesT<K>& a) {
  CyclicSeriesT<K> r(a.sig, a.valid);
  for (const auto& [k, c] : a.terms)
    if (k.second.length() == 0) r.add_term(k.first, c);
  return r;
}

struct CyclicTripleLess {
  bool operator()(const std::array<CyclicWord, 3>& a, const std::array<CyclicWord, 3>& b) const {
    CyclicWordLess less;
    for (int i = 0; i < 3; ++i) {
      if (less(a[i], b[i])) return true;
      if (less(b[i], a[i])) return false;
    }
    return false;
  }
};

// Series in |A| (x) |A| (x) |A|; only what the co-Jacobi check needs.
template <class K>
class TriCyclicSeriesT {
 public:
  Signature sig{};
  int valid = kExactDegree;
  std::map<std::array<CyclicWord, 3>, K, CyclicTripleLess> terms;

  TriCyclicSeriesT() = default;
  explicit TriCyclicSeriesT(const Signature& s, int v = kExactDegree) : sig(s), valid(v) {}

  bool is_zero() const { return terms.empty(); }

  void add_term(const CyclicWord& a, const CyclicWord& b, const CyclicWord& c, const K& k) {
    if (coeff_is_zero(k)) return;
    if (a.degree() + b.degree() + c.degree() > valid) return;
    std::array<CyclicWord, 3> key{a, b, c};
    auto [it, fresh] = terms.emplace(std::move(key), k);
    if (!fresh) {
      it->second += k;
      if (coeff_is_zero(it->second)) terms.erase(it);
    }
  }

  friend TriCyclicSeriesT operator+(const TriCyclicSeriesT& a, const TriCyclicSeriesT& b) {
    require_same_sig(a.sig, b.sig, "tricyclic add");
    TriCyclicSeriesT r(a.sig, valid_min(a.valid, b.valid));
    for (const auto& [k, c] : a.terms)
      if (k[0].degree() + k[1].degree() + k[2].degree() <= r.valid) r.terms.emplace(k, c);
    for (const auto& [k, c] : b.terms) r.add_term(k[0], k[1], k[2], c);
    return r;
  }

  // Cyclic slot rotation (a,b,c) -> (c,a,b).
  TriCyclicSeriesT rotated() const {
    TriCyclicSeriesT r(sig, valid);
    for (const auto& [k, c] : terms) r.add_term(k[2], k[0], k[1], c);
    return r;
  }

  bool is_zero_through(int N) const {
    for (const auto& [k, c] : terms)
      if (k[0].degree() + k[1].degree() + k[2].degree() <= N) return false;
    return true;
  }
};

using TriCyclicSeries = TriCyclicSeriesT<Rational>;

}  // namespace gt
