#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "gt/cyclic_series.hpp"
#include "gt/loop_ops.hpp"
#include "gt/lyndon.hpp"
#include "gt/series.hpp"

namespace gt {

// polynomial rings used for the exponential flow and for first-order
// deformations
constexpr int kMaxFlowOrder = 20;
using TPoly = Poly<kMaxFlowOrder>;
using DualPoly = Poly<2>;

// Tangential derivation: free images on the handle generators, and one
// element per boundary letter acting through z_j -> [z_j, tang_j].
template <class K>
struct TDerT {
  Signature sig{};
  int valid = kExactDegree;
  std::vector<SeriesT<K>> ximg, yimg;
  std::vector<SeriesT<K>> tang;

  TDerT() = default;
  explicit TDerT(const Signature& s, int v = kExactDegree)
      : sig(s),
        valid(v),
        ximg(s.g, SeriesT<K>(s, v)),
        yimg(s.g, SeriesT<K>(s, v)),
        tang(s.n, SeriesT<K>(s, v)) {}

  SeriesT<K> image(Letter l) const {
    if (letter_is_x(l)) return ximg.at(letter_index(l) - 1);
    if (letter_is_y(l)) return yimg.at(letter_index(l) - 1);
    return commutator(SeriesT<K>::generator(sig, l), tang.at(letter_index(l) - 1));
  }

  bool is_zero() const {
    for (const auto& s : ximg)
      if (!s.is_zero()) return false;
    for (const auto& s : yimg)
      if (!s.is_zero()) return false;
    for (const auto& s : tang)
      if (!s.is_zero()) return false;
    return true;
  }

  // Smallest degree shift the derivation can produce. Scalar parts of the
  // tangential components act trivially and do not count.
  int op_min_degree() const {
    int m = kInfiniteDegree;
    for (const auto& s : ximg)
      if (!s.is_zero()) m = std::min(m, s.min_degree() - 1);
    for (const auto& s : yimg)
      if (!s.is_zero()) m = std::min(m, s.min_degree() - 1);
    for (const auto& s : tang) {
      SeriesT<K> aug = s;
      aug.add_term(Word(), K() - counit(s));
      if (!aug.is_zero()) m = std::min(m, aug.min_degree());
    }
    return m;
  }

  TDerT operator+(const TDerT& o) const {
    require_same_sig(sig, o.sig, "tangential derivation sum");
    TDerT r(sig, valid_min(valid, o.valid));
    for (int i = 0; i < sig.g; ++i) {
      r.ximg[i] = ximg[i] + o.ximg[i];
      r.yimg[i] = yimg[i] + o.yimg[i];
    }
    for (int j = 0; j < sig.n; ++j) r.tang[j] = tang[j] + o.tang[j];
    return r;
  }
  TDerT operator-(const TDerT& o) const { return *this + o.scaled(K(Rational(-1))); }
  TDerT scaled(const K& k) const {
    TDerT r(sig, valid);
    for (int i = 0; i < sig.g; ++i) {
      r.ximg[i] = ximg[i].scaled(k);
      r.yimg[i] = yimg[i].scaled(k);
    }
    for (int j = 0; j < sig.n; ++j) r.tang[j] = tang[j].scaled(k);
    return r;
  }

  // homogeneous piece acting with degree shift d
  TDerT graded(int d) const {
    TDerT r(sig, kExactDegree);
    for (int i = 0; i < sig.g; ++i) {
      r.ximg[i] = ximg[i].graded_component(d + 1);
      r.yimg[i] = yimg[i].graded_component(d + 1);
    }
    for (int j = 0; j < sig.n; ++j) r.tang[j] = tang[j].graded_component(d);
    return r;
  }

  TDerT truncated(int N) const {
    TDerT r(sig, std::min(valid, N));
    for (int i = 0; i < sig.g; ++i) {
      r.ximg[i] = ximg[i].truncated(N);
      r.yimg[i] = yimg[i].truncated(N);
    }
    for (int j = 0; j < sig.n; ++j) r.tang[j] = tang[j].truncated(N);
    return r;
  }

  friend bool operator==(const TDerT& a, const TDerT& b) {
    if (a.sig != b.sig) return false;
    for (int i = 0; i < a.sig.g; ++i)
      if (a.ximg[i] != b.ximg[i] || a.yimg[i] != b.yimg[i]) return false;
    for (int j = 0; j < a.sig.n; ++j)
      if (a.tang[j] != b.tang[j]) return false;
    return true;
  }
  friend bool operator!=(const TDerT& a, const TDerT& b) { return !(a == b); }
};

using TDer = TDerT<Rational>;

template <class K>
inline SeriesT<K> tder_apply(const TDerT<K>& u, const SeriesT<K>& a) {
  require_same_sig(u.sig, a.sig, "tder_apply");
  int rmin = u.op_min_degree();
  if (rmin >= kInfiniteDegree || a.is_zero()) return SeriesT<K>(a.sig, kExactDegree);
  long vu = a.valid >= kExactDegree ? kExactDegree
                                    : static_cast<long>(a.valid) + rmin;
  int v = static_cast<int>(std::min({static_cast<long>(u.valid), vu,
                                     static_cast<long>(kExactDegree)}));
  SeriesT<K> out(a.sig, v);
  std::map<Letter, SeriesT<K>> cache;
  for (const auto& [w, c] : a.terms)
    for (size_t i = 0; i < w.size(); ++i) {
      auto it = cache.find(w[i]);
      if (it == cache.end()) it = cache.emplace(w[i], u.image(w[i])).first;
      for (const auto& [iw, ic] : it->second.terms)
        out.add_term(w.substr(0, i) + iw + w.substr(i + 1), c * ic);
    }
  return out;
}

template <class K>
inline CyclicSeriesT<K> tder_apply(const TDerT<K>& u, const CyclicSeriesT<K>& a) {
  require_same_sig(u.sig, a.sig, "tder_apply");
  int rmin = u.op_min_degree();
  if (rmin >= kInfiniteDegree || a.is_zero())
    return CyclicSeriesT<K>(a.sig, kExactDegree);
  long vu = a.valid >= kExactDegree ? kExactDegree
                                    : static_cast<long>(a.valid) + rmin;
  int v = static_cast<int>(std::min({static_cast<long>(u.valid), vu,
                                     static_cast<long>(kExactDegree)}));
  CyclicSeriesT<K> out(a.sig, v);
  std::map<Letter, SeriesT<K>> cache;
  for (const auto& [cw, c] : a.terms) {
    const Word& w = cw.rep;
    for (size_t i = 0; i < w.size(); ++i) {
      auto it = cache.find(w[i]);
      if (it == cache.end()) it = cache.emplace(w[i], u.image(w[i])).first;
      for (const auto& [iw, ic] : it->second.terms)
        out.add_term(CyclicWord(w.substr(0, i) + iw + w.substr(i + 1)), c * ic);
    }
  }
  return out;
}

template <class K>
inline BiCyclicSeriesT<K> tder_apply(const TDerT<K>& u, const BiCyclicSeriesT<K>& a) {
  require_same_sig(u.sig, a.sig, "tder_apply");
  int rmin = u.op_min_degree();
  if (rmin >= kInfiniteDegree || a.is_zero())
    return BiCyclicSeriesT<K>(a.sig, kExactDegree);
  long vu = a.valid >= kExactDegree ? kExactDegree
                                    : static_cast<long>(a.valid) + rmin;
  int v = static_cast<int>(std::min({static_cast<long>(u.valid), vu,
                                     static_cast<long>(kExactDegree)}));
  BiCyclicSeriesT<K> out(a.sig, v);
  for (const auto& [pq, c] : a.terms) {
    CyclicSeriesT<K> left(a.sig, kExactDegree), right(a.sig, kExactDegree);
    left.add_term(pq.first, K(Rational(1)));
    right.add_term(pq.second, K(Rational(1)));
    for (const auto& [lw, lc] : tder_apply(u, left).terms)
      out.add_term(lw, pq.second, c * lc);
    for (const auto& [rw, rc] : tder_apply(u, right).terms)
      out.add_term(pq.first, rw, c * rc);
  }
  return out;
}

// bracket of tangential derivations; the tangential component is
// u(v_j) - v(u_j) + [u_j, v_j]
template <class K>
inline TDerT<K> tder_bracket(const TDerT<K>& u, const TDerT<K>& v) {
  require_same_sig(u.sig, v.sig, "tder_bracket");
  TDerT<K> r(u.sig, valid_min(u.valid, v.valid));
  for (int i = 0; i < u.sig.g; ++i) {
    r.ximg[i] = tder_apply(u, v.ximg[i]) - tder_apply(v, u.ximg[i]);
    r.yimg[i] = tder_apply(u, v.yimg[i]) - tder_apply(v, u.yimg[i]);
  }
  for (int j = 0; j < u.sig.n; ++j)
    r.tang[j] = tder_apply(u, v.tang[j]) - tder_apply(v, u.tang[j]) +
                commutator(u.tang[j], v.tang[j]);
  return r;
}

// ---- tangential automorphisms ----

// F fixes the filtration with identity graded part; boundary images are
// conjugates F(z_j) = e^{-f_j} z_j e^{f_j}.
template <class K>
struct TAutT {
  Signature sig{};
  int valid = kExactDegree;
  std::vector<SeriesT<K>> ximg, yimg;
  std::vector<SeriesT<K>> tang;

  TAutT() = default;
  explicit TAutT(const Signature& s, int v = kExactDegree)
      : sig(s),
        valid(v),
        ximg(s.g, SeriesT<K>(s, v)),
        yimg(s.g, SeriesT<K>(s, v)),
        tang(s.n, SeriesT<K>(s, v)) {}

  static TAutT identity(const Signature& s, int v = kExactDegree) {
    TAutT r(s, v);
    for (int i = 1; i <= s.g; ++i) {
      r.ximg[i - 1] = SeriesT<K>::generator(s, letter_x(i), v);
      r.yimg[i - 1] = SeriesT<K>::generator(s, letter_y(i), v);
    }
    return r;
  }

  SeriesT<K> image(Letter l) const {
    if (letter_is_x(l)) return ximg.at(letter_index(l) - 1);
    if (letter_is_y(l)) return yimg.at(letter_index(l) - 1);
    // scalar parts of f_j drop out of the conjugation
    SeriesT<K> f = tang.at(letter_index(l) - 1);
    f.add_term(Word(), K() - counit(f));
    return exp_series(-f) * SeriesT<K>::generator(sig, l) * exp_series(f);
  }

  TAutT truncated(int N) const {
    TAutT r(sig, std::min(valid, N));
    for (int i = 0; i < sig.g; ++i) {
      r.ximg[i] = ximg[i].truncated(N);
      r.yimg[i] = yimg[i].truncated(N);
    }
    for (int j = 0; j < sig.n; ++j) r.tang[j] = tang[j].truncated(N);
    return r;
  }

  friend bool operator==(const TAutT& a, const TAutT& b) {
    if (a.sig != b.sig) return false;
    for (int i = 0; i < a.sig.g; ++i)
      if (a.ximg[i] != b.ximg[i] || a.yimg[i] != b.yimg[i]) return false;
    for (int j = 0; j < a.sig.n; ++j)
      if (a.tang[j] != b.tang[j]) return false;
    return true;
  }
  friend bool operator!=(const TAutT& a, const TAutT& b) { return !(a == b); }
};

using TAut = TAutT<Rational>;

template <class K>
inline SeriesT<K> taut_apply(const TAutT<K>& F, const SeriesT<K>& a) {
  require_same_sig(F.sig, a.sig, "taut_apply");
  int v = valid_min(F.valid, a.valid);
  SeriesT<K> out(a.sig, v);
  std::map<Letter, SeriesT<K>> cache;
  auto img = [&](Letter l) -> const SeriesT<K>& {
    auto it = cache.find(l);
    if (it == cache.end()) it = cache.emplace(l, F.image(l)).first;
    return it->second;
  };
  for (const auto& [w, c] : a.terms) {
    SeriesT<K> prod = SeriesT<K>::one(a.sig, v);
    for (Letter l : w) prod = prod * img(l);
    for (const auto& [pw, pc] : prod.terms) out.add_term(pw, pc * c);
  }
  return out;
}

template <class K>
inline CyclicSeriesT<K> taut_apply(const TAutT<K>& F, const CyclicSeriesT<K>& a) {
  require_same_sig(F.sig, a.sig, "taut_apply");
  int v = valid_min(F.valid, a.valid);
  CyclicSeriesT<K> out(a.sig, v);
  for (const auto& [cw, c] : a.terms) {
    SeriesT<K> lift = SeriesT<K>::from_word(a.sig, cw.rep, c, v);
    for (const auto& [t, tc] : trace(taut_apply(F, lift)).terms) out.add_term(t, tc);
  }
  return out;
}

template <class K>
inline BiCyclicSeriesT<K> taut_apply(const TAutT<K>& F, const BiCyclicSeriesT<K>& a) {
  require_same_sig(F.sig, a.sig, "taut_apply");
  int v = valid_min(F.valid, a.valid);
  BiCyclicSeriesT<K> out(a.sig, v);
  for (const auto& [pq, c] : a.terms) {
    CyclicSeriesT<K> l(a.sig, v), r(a.sig, v);
    l.add_term(pq.first, K(Rational(1)));
    r.add_term(pq.second, K(Rational(1)));
    CyclicSeriesT<K> fl = taut_apply(F, l);
    CyclicSeriesT<K> fr = taut_apply(F, r);
    for (const auto& [lw, lc] : fl.terms)
      for (const auto& [rw, rc] : fr.terms) out.add_term(lw, rw, c * lc * rc);
  }
  return out;
}

template <class K>
inline TAutT<K> taut_compose(const TAutT<K>& F, const TAutT<K>& G) {
  require_same_sig(F.sig, G.sig, "taut_compose");
  TAutT<K> r(F.sig, valid_min(F.valid, G.valid));
  for (int i = 0; i < F.sig.g; ++i) {
    r.ximg[i] = taut_apply(F, G.ximg[i]);
    r.yimg[i] = taut_apply(F, G.yimg[i]);
  }
  for (int j = 0; j < F.sig.n; ++j)
    r.tang[j] = bch(F.tang[j], taut_apply(F, G.tang[j]));
  return r;
}

template <class K>
inline TAutT<K> taut_inverse(const TAutT<K>& F) {
  TAutT<K> r(F.sig, F.valid);
  auto invert = [&F](Letter l) {
    SeriesT<K> target = SeriesT<K>::generator(F.sig, l, F.valid);
    SeriesT<K> h = target;
    while (true) {
      SeriesT<K> err = taut_apply(F, h) - target;
      if (err.is_zero()) break;
      if (F.valid >= kExactDegree)
        throw DegreeOverflow("inverse needs a truncated automorphism");
      h = h - err;
    }
    return h;
  };
  for (int i = 1; i <= F.sig.g; ++i) {
    r.ximg[i - 1] = invert(letter_x(i));
    r.yimg[i - 1] = invert(letter_y(i));
  }
  // tangential exponents solve F(g_j) = -f_j
  for (int j = 0; j < F.sig.n; ++j) {
    SeriesT<K> g = -F.tang[j];
    while (true) {
      SeriesT<K> err = taut_apply(F, g) + F.tang[j];
      if (err.is_zero()) break;
      if (F.valid >= kExactDegree)
        throw DegreeOverflow("inverse needs a truncated automorphism");
      g = g - err;
    }
    r.tang[j] = g;
  }
  return r;
}

// sum of u^m(a)/m!, truncated at the given order
template <class K>
inline SeriesT<K> tder_exp_apply(const TDerT<K>& u, const SeriesT<K>& a, int order) {
  SeriesT<K> acc = a.truncated(order);
  SeriesT<K> cur = acc;
  for (int m = 1; m <= order + 2 && !cur.is_zero(); ++m)
    cur = tder_apply(u, cur).scaled(K(Rational(1, m))), acc = acc + cur;
  return acc;
}

// y + [x,y]/2 + sum_{k>=2} B_k/k! ad_x^k(y); scalar terms of y pass
// through untouched since ad kills them
template <class K>
inline SeriesT<K> dbch_apply(const SeriesT<K>& x, const SeriesT<K>& y, int order) {
  auto B = bernoulli_numbers(order + 2);
  SeriesT<K> acc = y;
  SeriesT<K> cur = y;
  for (int k = 1; k <= order + 1 && !cur.is_zero(); ++k) {
    cur = commutator(x, cur);
    Rational coef = (k == 1) ? Rational(1, 2) : B[k] / factorial(k);
    if (!coef.is_zero()) acc = acc + cur.scaled(K(coef));
  }
  return acc;
}

// Exponential of a positive tangential derivation. Generator images come
// from the operator exponential; the tangential components solve
// df_j/dt = dbch_{f_j}(e^{tu} u_j), f_j(0) = 0, at t = 1.
inline TAut taut_exp(const TDer& u, int N) {
  if (u.op_min_degree() < 1)
    throw NotPositiveDegree("exponential needs a derivation of positive degree");
  TDer ut = u.truncated(N);
  TAut F = TAut::identity(u.sig, N);
  for (int i = 0; i < u.sig.g; ++i) {
    F.ximg[i] = tder_exp_apply(ut, Series::generator(u.sig, letter_x(i + 1), N), N);
    F.yimg[i] = tder_exp_apply(ut, Series::generator(u.sig, letter_y(i + 1), N), N);
  }
  if (u.sig.n == 0) return F;
  auto lift = [](const Series& s) {
    return map_coeffs<TPoly>(s, [](const Rational& c) { return TPoly(c); });
  };
  TDerT<TPoly> tu(u.sig, N);
  for (int i = 0; i < u.sig.g; ++i) {
    tu.ximg[i] = lift(ut.ximg[i]).scaled(TPoly::t());
    tu.yimg[i] = lift(ut.yimg[i]).scaled(TPoly::t());
  }
  for (int j = 0; j < u.sig.n; ++j) tu.tang[j] = lift(ut.tang[j]).scaled(TPoly::t());
  for (int j = 0; j < u.sig.n; ++j) {
    SeriesT<TPoly> g = tder_exp_apply(tu, lift(ut.tang[j]), N);
    SeriesT<TPoly> f(u.sig, N);
    for (int d = 0; d <= N; ++d) {
      SeriesT<TPoly> rhs = dbch_apply(f, g, N).graded_component(d);
      f = f + map_coeffs<TPoly>(rhs, [](const TPoly& p) { return p.integrate(); });
    }
    F.tang[j] = map_coeffs<Rational>(f, [](const TPoly& p) { return p.eval_at_one(); });
  }
  return F;
}

// Logarithm: operator part by the alternating series in (F - id), then a
// triangular solve recovering the tangential components degree by degree
// from the exponential flow.
inline TDer taut_log(const TAut& F, int N) {
  for (Letter l : alphabet(F.sig)) {
    Series d = F.image(l) - Series::generator(F.sig, l, F.valid);
    if (!d.is_zero() && d.min_degree() <= letter_weight(l))
      throw Error("logarithm needs identity graded part");
  }
  TAut Ft = F.truncated(N);
  TDer u(F.sig, N);
  auto log_image = [&Ft, N](Letter l) {
    Series cur = taut_apply(Ft, Series::generator(Ft.sig, l, N)) -
                 Series::generator(Ft.sig, l, N);
    Series acc = cur;
    for (int m = 2; m <= N + 2 && !cur.is_zero(); ++m) {
      cur = taut_apply(Ft, cur) - cur;
      acc = acc + cur.scaled(Rational((m % 2) ? 1 : -1, m));
    }
    return acc;
  };
  for (int i = 0; i < F.sig.g; ++i) {
    u.ximg[i] = log_image(letter_x(i + 1));
    u.yimg[i] = log_image(letter_y(i + 1));
  }
  for (int d = 0; d <= N; ++d) {
    if (F.sig.n == 0) break;
    TAut E = taut_exp(u, N);
    for (int j = 0; j < F.sig.n; ++j)
      u.tang[j] = u.tang[j] + (Ft.tang[j] - E.tang[j]).graded_component(d);
  }
  return u;
}

// Conjugation of a derivation by an automorphism, computed on the
// first-order deformation id + eps u over dual numbers.
inline TDer taut_adjoint(const TAut& F, const TDer& u, int N) {
  auto lift = [](const Series& s) {
    return map_coeffs<DualPoly>(s, [](const Rational& c) { return DualPoly(c); });
  };
  TAutT<DualPoly> Fl(F.sig, std::min(F.valid, N));
  TAut Ft = F.truncated(N);
  for (int i = 0; i < F.sig.g; ++i) {
    Fl.ximg[i] = lift(Ft.ximg[i]);
    Fl.yimg[i] = lift(Ft.yimg[i]);
  }
  for (int j = 0; j < F.sig.n; ++j) Fl.tang[j] = lift(Ft.tang[j]);
  DualPoly eps = DualPoly::t();
  TDer utc = u.truncated(N);
  TAutT<DualPoly> G = TAutT<DualPoly>::identity(F.sig, std::min({F.valid, u.valid, N}));
  for (int i = 0; i < F.sig.g; ++i) {
    G.ximg[i] = G.ximg[i] + lift(utc.ximg[i]).scaled(eps);
    G.yimg[i] = G.yimg[i] + lift(utc.yimg[i]).scaled(eps);
  }
  for (int j = 0; j < F.sig.n; ++j) G.tang[j] = lift(utc.tang[j]).scaled(eps);
  TAutT<DualPoly> H = taut_compose(Fl, taut_compose(G, taut_inverse(Fl)));
  TDer out(F.sig, H.valid);
  auto drop = [](const SeriesT<DualPoly>& s) {
    return map_coeffs<Rational>(s, [](const DualPoly& p) { return p.coeff(1); });
  };
  for (int i = 0; i < F.sig.g; ++i) {
    out.ximg[i] = drop(H.ximg[i]);
    out.yimg[i] = drop(H.yimg[i]);
  }
  for (int j = 0; j < F.sig.n; ++j) out.tang[j] = drop(H.tang[j]);
  return out;
}

// The sigma operators of a cyclic element assemble into a tangential
// derivation.
inline TDer sigma_hat(const CyclicSeries& u) {
  TDer r(u.sig, valid_shift(u.valid, -2));
  for (int i = 1; i <= u.sig.g; ++i) {
    r.ximg[i - 1] = sigma_image_letter(u, letter_x(i));
    r.yimg[i - 1] = sigma_image_letter(u, letter_y(i));
  }
  for (int j = 1; j <= u.sig.n; ++j) r.tang[j - 1] = sigma_tangential(u, j);
  return r;
}

// Free parameterization of the homogeneous degree-d part of the positive
// tangential derivations: handle images over the degree d+1 Lie basis,
// tangential components over the degree-d one.
inline std::vector<TDer> tder_basis(const Signature& sig, int d) {
  std::vector<TDer> out;
  auto push_img = [&](int count, auto set) {
    for (int i = 0; i < count; ++i)
      for (const auto& e : lie_basis(sig, d + 1)) {
        TDer u(sig, kExactDegree);
        set(u, i, e.value);
        out.push_back(u);
      }
  };
  push_img(sig.g, [](TDer& u, int i, const Series& s) { u.ximg[i] = s; });
  push_img(sig.g, [](TDer& u, int i, const Series& s) { u.yimg[i] = s; });
  for (int j = 0; j < sig.n; ++j)
    for (const auto& e : lie_basis(sig, d)) {
      TDer u(sig, kExactDegree);
      u.tang[j] = e.value;
      out.push_back(u);
    }
  return out;
}

}  // namespace gt
