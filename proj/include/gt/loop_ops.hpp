#pragma once

#include <set>
#include <vector>

#include "gt/cyclic_series.hpp"
#include "gt/framing.hpp"
#include "gt/linalg.hpp"

namespace gt {

// Goldman bracket on cyclic series. Each pair of positions contributes the
// intersection-pairing term on weight-1 letters and, when the two letters
// are the same z_j, the pair of weight-2 terms with opposite signs.
inline CyclicSeries goldman_bracket(const CyclicSeries& a, const CyclicSeries& b) {
  require_same_sig(a.sig, b.sig, "goldman_bracket");
  CyclicSeries out(a.sig, valid_shift(std::min(a.valid, b.valid), -2));
  for (const auto& [cu, ca] : a.terms)
    for (const auto& [cv, cb] : b.terms) {
      const Word& u = cu.rep;
      const Word& v = cv.rep;
      Rational cc = ca * cb;
      for (size_t i = 0; i < u.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) {
          Word rest_u = cyclic_range(u, i + 1, u.size() - 1);
          Word rest_v = cyclic_range(v, j + 1, v.size() - 1);
          if (int s = intersection_pairing(u[i], v[j]); s != 0)
            out.add_term(CyclicWord(rest_u + rest_v), cc * Rational(s));
          if (z_pairing_fires(u[i], v[j])) {
            out.add_term(CyclicWord(Word(1, u[i]) + rest_u + rest_v), cc);
            out.add_term(CyclicWord(Word(1, u[i]) + rest_v + rest_u), -cc);
          }
        }
    }
  return out;
}

// Framed Turaev cobracket. For each position pair j < k the word splits
// into the arc between and the arc outside; the framing term deletes one
// letter and wedges against the unit.
inline BiCyclicSeries turaev_cobracket(const CyclicSeries& a, const Framing& f) {
  require_same_sig(a.sig, f.sig(), "turaev_cobracket");
  BiCyclicSeries out(a.sig, valid_shift(a.valid, -2));
  auto wedge_in = [&out](const CyclicWord& p, const CyclicWord& q, const Rational& c) {
    out.add_term(p, q, c);
    out.add_term(q, p, -c);
  };
  for (const auto& [cu, ca] : a.terms) {
    const Word& u = cu.rep;
    size_t l = u.size();
    for (size_t j = 0; j < l; ++j) {
      for (size_t k = j + 1; k < l; ++k) {
        Word inner = cyclic_range(u, j + 1, k - j - 1);
        Word outer = cyclic_range(u, k + 1, l - (k - j) - 1);
        if (int s = intersection_pairing(u[j], u[k]); s != 0)
          wedge_in(CyclicWord(inner), CyclicWord(outer), ca * Rational(s));
        if (z_pairing_fires(u[j], u[k])) {
          wedge_in(CyclicWord(Word(1, u[j]) + inner), CyclicWord(outer), ca);
          wedge_in(CyclicWord(Word(1, u[j]) + outer), CyclicWord(inner), ca);
        }
      }
      if (long cf = f.c(u[j]); cf != 0)
        wedge_in(CyclicWord(), CyclicWord(cyclic_range(u, j + 1, l - 1)),
                 ca * Rational(cf));
    }
  }
  return out;
}

// Cyclic sum over adjacent position pairs; coincides with the part of the
// cobracket wedged against the unit. The two pairing sums need two
// distinct positions, the framing sum runs even on single letters.
inline CyclicSeries es_part(const CyclicSeries& a, const Framing& f) {
  require_same_sig(a.sig, f.sig(), "es_part");
  CyclicSeries out(a.sig, valid_shift(a.valid, -2));
  for (const auto& [cu, ca] : a.terms) {
    const Word& u = cu.rep;
    size_t l = u.size();
    for (size_t i = 0; i < l; ++i) {
      if (l >= 2) {
        size_t s = (i + 1) % l;
        Word mid = cyclic_range(u, i + 2, l - 2);
        if (int pr = intersection_pairing(u[i], u[s]); pr != 0)
          out.add_term(CyclicWord(mid), ca * Rational(pr));
        if (z_pairing_fires(u[i], u[s]))
          out.add_term(CyclicWord(Word(1, u[i]) + mid), -ca);
      }
      if (long cf = f.c(u[i]); cf != 0)
        out.add_term(CyclicWord(cyclic_range(u, i + 1, l - 1)), ca * Rational(cf));
    }
  }
  return out;
}

// terms of t with exactly one empty slot
inline BiCyclicSeries unit_wedge_part(const BiCyclicSeries& t) {
  BiCyclicSeries out(t.sig, t.valid);
  for (const auto& [pq, c] : t.terms)
    if (pq.first.rep.empty() != pq.second.rep.empty())
      out.add_term(pq.first, pq.second, c);
  return out;
}

// Image of a generator under the derivation attached to a cyclic series.
// Each occurrence of a pairing partner opens the necklace at that spot.
inline Series sigma_image_letter(const CyclicSeries& u, Letter s) {
  Series out(u.sig, valid_shift(u.valid, -2) + letter_weight(s));
  out.valid = std::min(out.valid, kExactDegree);
  for (const auto& [cu, ca] : u.terms) {
    const Word& w = cu.rep;
    for (size_t i = 0; i < w.size(); ++i) {
      Word rest = cyclic_range(w, i + 1, w.size() - 1);
      if (int pr = intersection_pairing(w[i], s); pr != 0)
        out.add_term(rest, ca * Rational(pr));
      if (z_pairing_fires(w[i], s)) {
        out.add_term(Word(1, s) + rest, ca);
        out.add_term(rest + Word(1, s), -ca);
      }
    }
  }
  return out;
}

// sum of opened necklaces over the occurrences of z_j
inline Series sigma_tangential(const CyclicSeries& u, int j) {
  Letter zj = letter_z(j);
  Series out(u.sig, valid_shift(u.valid, -2));
  for (const auto& [cu, ca] : u.terms) {
    const Word& w = cu.rep;
    for (size_t i = 0; i < w.size(); ++i)
      if (w[i] == zj) out.add_term(cyclic_range(w, i + 1, w.size() - 1), ca);
  }
  return out;
}

// Leibniz extension of sigma_image_letter to the whole algebra. The
// operator shifts degree by at least min_degree(u) - 2, which sets how far
// an inexact argument stays trustworthy.
inline Series sigma_apply(const CyclicSeries& u, const Series& v) {
  require_same_sig(u.sig, v.sig, "sigma_apply");
  int out_valid = kExactDegree;
  if (!u.terms.empty() && !v.terms.empty()) {
    long from_u = (u.valid >= kExactDegree)
                      ? kExactDegree
                      : static_cast<long>(u.valid) - 2 + v.min_degree();
    long from_v = (v.valid >= kExactDegree)
                      ? kExactDegree
                      : static_cast<long>(v.valid) + u.min_degree() - 2;
    out_valid = static_cast<int>(
        std::min({from_u, from_v, static_cast<long>(kExactDegree)}));
  }
  Series out(v.sig, out_valid);
  for (const auto& [w, c] : v.terms)
    for (size_t i = 0; i < w.size(); ++i) {
      Series img = sigma_image_letter(u, w[i]);
      for (const auto& [iw, ic] : img.terms)
        out.add_term(w.substr(0, i) + iw + w.substr(i + 1), c * ic);
    }
  return out;
}

// --- structure defects, all identically zero for the graded operations ---

inline CyclicSeries jacobi_defect(const CyclicSeries& a, const CyclicSeries& b,
                                  const CyclicSeries& c) {
  return goldman_bracket(goldman_bracket(a, b), c) +
         goldman_bracket(goldman_bracket(b, c), a) +
         goldman_bracket(goldman_bracket(c, a), b);
}

// (1 + rho + rho^2) (delta (x) id) delta, rho the cyclic slot rotation
inline TriCyclicSeries cojacobi_defect(const CyclicSeries& a, const Framing& f) {
  BiCyclicSeries d = turaev_cobracket(a, f);
  TriCyclicSeries once(a.sig, valid_shift(d.valid, -2));
  for (const auto& [pq, c] : d.terms) {
    CyclicSeries left(a.sig, kExactDegree);
    left.add_term(pq.first, Rational(1));
    BiCyclicSeries dl = turaev_cobracket(left, f);
    for (const auto& [rs, c2] : dl.terms)
      once.add_term(rs.first, rs.second, pq.second, c * c2);
  }
  TriCyclicSeries out = once;
  TriCyclicSeries r1 = once.rotated();
  TriCyclicSeries r2 = r1.rotated();
  return out + r1 + r2;
}

// diagonal bracket action of a cyclic series on a two-slot tensor
inline BiCyclicSeries bracket_action(const CyclicSeries& a, const BiCyclicSeries& t) {
  require_same_sig(a.sig, t.sig, "bracket_action");
  BiCyclicSeries out(a.sig, valid_shift(std::min(a.valid, t.valid), -2));
  for (const auto& [pq, c] : t.terms) {
    CyclicSeries left(a.sig, kExactDegree), right(a.sig, kExactDegree);
    left.add_term(pq.first, Rational(1));
    right.add_term(pq.second, Rational(1));
    CyclicSeries bl = goldman_bracket(a, left);
    CyclicSeries br = goldman_bracket(a, right);
    for (const auto& [w, cw] : bl.terms) out.add_term(w, pq.second, c * cw);
    for (const auto& [w, cw] : br.terms) out.add_term(pq.first, w, c * cw);
  }
  return out;
}

inline BiCyclicSeries compatibility_defect(const CyclicSeries& a,
                                           const CyclicSeries& b,
                                           const Framing& f) {
  return turaev_cobracket(goldman_bracket(a, b), f) - bracket_action(a, turaev_cobracket(b, f)) +
         bracket_action(b, turaev_cobracket(a, f));
}

inline CyclicSeries involutivity_defect(const CyclicSeries& a, const Framing& f) {
  BiCyclicSeries d = turaev_cobracket(a, f);
  CyclicSeries out(a.sig, valid_shift(d.valid, -2));
  for (const auto& [pq, c] : d.terms) {
    CyclicSeries left(a.sig, kExactDegree), right(a.sig, kExactDegree);
    left.add_term(pq.first, Rational(1));
    right.add_term(pq.second, Rational(1));
    out = out + goldman_bracket(left, right).scaled(c);
  }
  return out;
}

// --- center of the Goldman bracket ---

inline Series z_total(const Signature& sig) {
  Series out = Series::zero(sig, kExactDegree);
  for (int j = 1; j <= sig.n; ++j)
    out = out + Series::generator(sig, letter_z(j));
  return out;
}

// Traces of powers of omega, of the z_j, and of their sum, together with
// the unit: these span the center degree by degree.
inline std::vector<CyclicSeries> center_basis(const Signature& sig, int max_degree) {
  std::vector<CyclicSeries> out;
  auto push_unique = [&out](const CyclicSeries& s) {
    if (s.is_zero()) return;
    for (const auto& e : out)
      if (e == s) return;
    out.push_back(s);
  };
  push_unique(CyclicSeries::unit(sig));
  Series om = omega(sig);
  Series zt = z_total(sig);
  Series om_pow = Series::one(sig, kExactDegree);
  Series zt_pow = om_pow;
  for (int k = 1; 2 * k <= max_degree; ++k) {
    om_pow = om_pow * om;
    zt_pow = zt_pow * zt;
    push_unique(trace(om_pow));
    push_unique(trace(zt_pow));
    for (int j = 1; j <= sig.n; ++j)
      push_unique(CyclicSeries::from_word(sig, Word(static_cast<size_t>(k), letter_z(j))));
  }
  return out;
}

inline bool is_central_brute(const CyclicSeries& a, int probe_degree) {
  for (int d = 1; d <= probe_degree; ++d)
    for (const Word& w : words_of_degree(a.sig, d)) {
      CyclicSeries probe = CyclicSeries::from_word(a.sig, w);
      if (!goldman_bracket(a, probe).is_zero()) return false;
    }
  return true;
}

inline bool is_central(const CyclicSeries& a, int max_degree) {
  std::vector<CyclicSeries> basis;
  for (auto& e : center_basis(a.sig, max_degree)) basis.push_back(e.truncated(max_degree));
  return solve_in_span(basis, a.truncated(max_degree)).member;
}

// --- membership in the image of a bracket with a fixed element ---

inline bool power_traces_vanish(const Series& a, const Series& x, int count) {
  Series pw = Series::one(a.sig, kExactDegree);
  for (int l = 0; l <= count; ++l) {
    if (!trace(a * pw).is_zero()) return false;
    pw = pw * x;
  }
  return true;
}

// solve [pivot, c] = a degree by degree through the validity of a
inline bool in_commutator_image(const Series& a, const Series& pivot, int max_degree) {
  int top = std::min(max_degree, a.valid);
  int pd = pivot.min_degree();
  for (int d = 0; d <= top; ++d) {
    Series ad = a.graded_component(d);
    if (ad.is_zero()) continue;
    std::vector<Series> gens;
    for (const Word& w : words_of_degree(a.sig, d - pd))
      gens.push_back(commutator(pivot, Series::from_word(a.sig, w)));
    if (!solve_in_span(gens, ad).member) return false;
  }
  return true;
}

}  // namespace gt
