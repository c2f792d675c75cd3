#pragma once

#include <map>
#include <random>
#include <utility>
#include <vector>

#include "gt/cocycles.hpp"
#include "gt/linalg.hpp"
#include "gt/tangent.hpp"

namespace gt {

// Problem instance: a framed surface with a working truncation. The boundary
// relator image and the center are fixed for the whole run.
struct KvProblem {
  Signature sig;
  Framing fr;
  int N;
  Series xi_full;                    // valid through N + 2
  std::vector<CyclicSeries> center;  // basis through degree N

  KvProblem(const Framing& f, int degree)
      : sig(f.sig()),
        fr(f),
        N(degree),
        xi_full(xi(f.sig(), degree + 2)),
        center(center_basis(f.sig(), degree)) {}
};

// First condition: defect of F against the boundary relator.
inline Series kvI_check(const TAut& F, int N) {
  return (taut_apply(F, omega(F.sig)) - xi(F.sig, N)).truncated(N);
}

// Left side of the second condition, before reduction modulo the center.
inline CyclicSeries kvII_phi(const TAut& F, const Framing& fr, int N) {
  const Signature& sig = F.sig;
  // the handle part of the double divergence costs one degree of validity
  const int order = sig.g > 0 ? N + 1 : N;
  TAut Fi = taut_inverse(F);
  CyclicSeries out = framed_jacobian(Fi, fr, order);
  CyclicSeries src = trace(fr.p());
  if (sig.g > 0) src = src + handle_rotation_correction(sig, order);
  if (!src.is_zero()) out = out + taut_apply(Fi, src);
  return out.truncated(N);
}

// Canonical representative of target modulo the span of gens, by full
// elimination over the coordinate keys.
template <class S>
inline S reduce_by_span(const S& target, const std::vector<S>& gens) {
  std::vector<S> ech;
  auto pivot = [](const S& s) { return s.terms.begin()->first; };
  auto eliminate = [&](S& s) {
    for (const auto& e : ech) {
      auto it = s.terms.find(pivot(e));
      if (it != s.terms.end()) s = s - e.scaled(it->second);
    }
  };
  for (S g : gens) {
    eliminate(g);
    if (g.is_zero()) continue;
    g = g.scaled(g.terms.begin()->second.inv());
    for (auto& e : ech) {
      auto it = e.terms.find(pivot(g));
      if (it != e.terms.end()) e = e - g.scaled(it->second);
    }
    ech.push_back(g);
  }
  S r = target;
  eliminate(r);
  return r;
}

// Residue of the second condition modulo the center; zero means KVII holds.
inline CyclicSeries kvII_defect(const TAut& F, const KvProblem& pb) {
  if (!kvI_check(F, pb.N + 2).is_zero())
    throw KvIFailed("second Kashiwara-Vergne condition needs the first");
  return reduce_by_span(kvII_phi(F, pb.fr, pb.N), pb.center);
}

// Part of the Jacobian of exp(u) that is linear in u.
inline CyclicSeries jacobian_leading(const TDer& u, const Framing& fr) {
  return co_counit_first(tdiv(u)) - c_q(u, fr);
}

struct DufloData {
  std::vector<Rational> h;               // h[k-1] is the s^k coefficient
  std::vector<std::vector<Rational>> hj;
  bool ambiguous = false;                // degeneracy beyond the linear parts
  bool matches_modulo_linear = true;
};

// Degree-wise decomposition j(F^{-1}) = |sum_j h_j(z_j) - h(sum_i z_i)|.
inline DufloData duflo_extract(const TAut& F, const KvProblem& pb) {
  if (pb.sig.g != 0) throw GenusNotZero("Duflo data needs genus 0");
  const int n = pb.sig.n;
  DufloData out;
  out.hj.resize(n);
  CyclicSeries jf = jacobian(taut_inverse(F), pb.N);
  Series zt_pow = Series::one(pb.sig, kExactDegree);
  for (int k = 1; 2 * k <= pb.N; ++k) {
    zt_pow = zt_pow * z_total(pb.sig);
    std::vector<CyclicSeries> gens;
    for (int j = 1; j <= n; ++j)
      gens.push_back(
          CyclicSeries::from_word(pb.sig, Word(static_cast<size_t>(k), letter_z(j))));
    gens.push_back(trace(zt_pow).scaled(Rational(-1)));
    CyclicSeries target = jf.graded_component(2 * k);

    std::map<CyclicWord, int, CyclicWordLess> row;
    auto note = [&row](const CyclicSeries& s) {
      for (const auto& [w, c] : s.terms) row.emplace(w, 0);
    };
    for (const auto& g : gens) note(g);
    note(target);
    int idx = 0;
    for (auto& [w, i] : row) i = idx++;
    QMatrix A(idx, static_cast<int>(gens.size()));
    std::vector<Rational> b(idx);
    for (size_t j = 0; j < gens.size(); ++j)
      for (const auto& [w, c] : gens[j].terms)
        A.at(row.at(w), static_cast<int>(j)) = c;
    for (const auto& [w, c] : target.terms) b[row.at(w)] = c;
    AffineSolution sol = solve_affine(A, b);
    if (!sol.solvable) throw Error("Jacobian outside the Duflo span");
    if (k >= 2 && !sol.kernel.empty()) out.ambiguous = true;
    std::vector<Rational> x = least_norm_point(sol);
    for (int j = 0; j < n; ++j) out.hj[j].push_back(x[j]);
    out.h.push_back(x[n]);
    if (k >= 2)
      for (int j = 0; j < n; ++j)
        if (x[j] != x[n]) out.matches_modulo_linear = false;
  }
  return out;
}

enum class KvStatus { Solved, Obstructed, CheckedOnly };

struct KvReport {
  KvStatus status = KvStatus::CheckedOnly;
  TAut F;
  std::vector<int> completed_degrees;
  bool kvI_ok = false;
  bool kvII_ok = false;
  Series kvI_defect;
  CyclicSeries kvII_residue;
  int obstruction_degree = 0;
  std::vector<Word> obstruction_series_rows;   // keys of the relator block
  std::vector<CyclicWord> obstruction_trace_rows;  // keys of the residue block
  std::vector<Rational> obstruction_lambda;    // functional over stacked rows
  DufloData duflo;
  bool has_duflo = false;
};

// Degree-by-degree correction scheme. At degree d the unknown homogeneous
// derivation must cancel the relator defect in degree d+2 and, unless
// kvI_only is set, the residue of the second condition in degree d modulo
// the center. Each step re-verifies from a fresh defect computation.
// gauge_seed 0 picks the least-norm solution; other seeds mix in kernel
// directions deterministically.
inline KvReport kv_solve(const KvProblem& pb, bool kvI_only = false,
                         unsigned gauge_seed = 0) {
  if (pb.N < 2) throw Error("KV solver needs truncation at least 2");
  const Signature& sig = pb.sig;
  const int NS = pb.N + 2;
  KvReport rep;
  rep.F = TAut::identity(sig);
  std::mt19937_64 rng(gauge_seed);
  Series om = omega(sig);

  for (int d = 1; d <= pb.N; ++d) {
    for (int attempt = 0;; ++attempt) {
      Series D = (taut_apply(rep.F, om) - pb.xi_full).truncated(NS);
      Series Dd = D.graded_component(d + 2);
      CyclicSeries phid(sig);
      if (!kvI_only) phid = kvII_phi(rep.F, pb.fr, pb.N).graded_component(d);
      if (Dd.is_zero() && reduce_by_span(phid, pb.center).is_zero()) {
        rep.completed_degrees.push_back(d);
        break;
      }
      if (attempt >= 3) throw Error("KV degree step failed to stabilize");

      std::vector<TDer> basis = tder_basis(sig, d);
      std::vector<CyclicSeries> cent;
      if (!kvI_only)
        for (const auto& c : pb.center) {
          CyclicSeries cd = c.graded_component(d);
          if (!cd.is_zero()) cent.push_back(cd);
        }
      std::vector<Series> colS;
      std::vector<CyclicSeries> colT;
      for (const auto& u : basis) {
        colS.push_back(tder_apply(u, om));
        colT.push_back(kvI_only ? CyclicSeries(sig)
                                : jacobian_leading(u, pb.fr).graded_component(d));
      }

      std::map<Word, int> srow;
      std::map<CyclicWord, int, CyclicWordLess> trow;
      for (const auto& s : colS)
        for (const auto& [w, c] : s.terms) srow.emplace(w, 0);
      for (const auto& [w, c] : Dd.terms) srow.emplace(w, 0);
      for (const auto& t : colT)
        for (const auto& [w, c] : t.terms) trow.emplace(w, 0);
      for (const auto& t : cent)
        for (const auto& [w, c] : t.terms) trow.emplace(w, 0);
      for (const auto& [w, c] : phid.terms) trow.emplace(w, 0);
      int idx = 0;
      for (auto& [w, i] : srow) i = idx++;
      const int ns = idx;
      for (auto& [w, i] : trow) i = idx++;

      const int cols = static_cast<int>(basis.size() + cent.size());
      QMatrix A(idx, cols);
      std::vector<Rational> b(idx);
      for (size_t j = 0; j < basis.size(); ++j) {
        for (const auto& [w, c] : colS[j].terms)
          A.at(srow.at(w), static_cast<int>(j)) = c;
        for (const auto& [w, c] : colT[j].terms)
          A.at(trow.at(w), static_cast<int>(j)) = c;
      }
      for (size_t j = 0; j < cent.size(); ++j)
        for (const auto& [w, c] : cent[j].terms)
          A.at(trow.at(w), static_cast<int>(basis.size() + j)) = c;
      for (const auto& [w, c] : Dd.terms) b[srow.at(w)] = -c;
      for (const auto& [w, c] : phid.terms) b[trow.at(w)] = c;

      AffineSolution sol = solve_affine(A, b);
      if (!sol.solvable) {
        rep.status = KvStatus::Obstructed;
        rep.obstruction_degree = d;
        rep.obstruction_series_rows.resize(ns);
        for (const auto& [w, i] : srow) rep.obstruction_series_rows[i] = w;
        rep.obstruction_trace_rows.resize(idx - ns);
        for (const auto& [w, i] : trow) rep.obstruction_trace_rows[i - ns] = w;
        rep.obstruction_lambda = sol.infeasibility;
        rep.kvI_defect = kvI_check(rep.F, NS);
        rep.kvII_residue = reduce_by_span(kvII_phi(rep.F, pb.fr, pb.N), pb.center);
        return rep;
      }
      std::vector<Rational> x = least_norm_point(sol);
      if (gauge_seed != 0 && !sol.kernel.empty()) {
        x = sol.particular;
        std::uniform_int_distribution<int> pick(-2, 2);
        for (const auto& k : sol.kernel) {
          Rational f(pick(rng));
          for (size_t i = 0; i < x.size(); ++i) x[i] += f * k[i];
        }
      }
      TDer u(sig);
      for (size_t j = 0; j < basis.size(); ++j)
        if (!x[j].is_zero()) u = u + basis[j].scaled(x[j]);
      if (!u.is_zero()) rep.F = taut_compose(taut_exp(u, NS), rep.F);
    }
  }

  rep.kvI_defect = kvI_check(rep.F, NS);
  rep.kvI_ok = rep.kvI_defect.is_zero();
  rep.kvII_residue = reduce_by_span(kvII_phi(rep.F, pb.fr, pb.N), pb.center);
  rep.kvII_ok = rep.kvII_residue.is_zero();
  bool done = rep.kvI_ok && (kvI_only || rep.kvII_ok);
  rep.status = done ? KvStatus::Solved : KvStatus::CheckedOnly;
  if (rep.status == KvStatus::Solved && !kvI_only && sig.g == 0) {
    rep.duflo = duflo_extract(rep.F, pb);
    rep.has_duflo = true;
  }
  return rep;
}

// Re-derivation of the stacked system at the reported obstruction degree,
// checking that lambda kills every column but pairs nontrivially with the
// right-hand side.
inline bool audit_obstruction(const KvReport& rep, const KvProblem& pb) {
  if (rep.status != KvStatus::Obstructed) return false;
  const Signature& sig = pb.sig;
  const int d = rep.obstruction_degree;
  const int ns = static_cast<int>(rep.obstruction_series_rows.size());
  std::map<Word, int> srow;
  for (int i = 0; i < ns; ++i) srow.emplace(rep.obstruction_series_rows[i], i);
  std::map<CyclicWord, int, CyclicWordLess> trow;
  for (size_t i = 0; i < rep.obstruction_trace_rows.size(); ++i)
    trow.emplace(rep.obstruction_trace_rows[i], ns + static_cast<int>(i));
  const std::vector<Rational>& lam = rep.obstruction_lambda;

  auto pair_s = [&](const Series& s) {
    Rational acc;
    for (const auto& [w, c] : s.terms) {
      auto it = srow.find(w);
      if (it == srow.end()) {
        if (!c.is_zero()) return std::pair<bool, Rational>{false, Rational()};
        continue;
      }
      acc += lam[it->second] * c;
    }
    return std::pair<bool, Rational>{true, acc};
  };
  auto pair_t = [&](const CyclicSeries& s) {
    Rational acc;
    for (const auto& [w, c] : s.terms) {
      auto it = trow.find(w);
      if (it == trow.end()) {
        if (!c.is_zero()) return std::pair<bool, Rational>{false, Rational()};
        continue;
      }
      acc += lam[it->second] * c;
    }
    return std::pair<bool, Rational>{true, acc};
  };

  Series om = omega(sig);
  for (const TDer& u : tder_basis(sig, d)) {
    auto [oks, vs] = pair_s(tder_apply(u, om));
    auto [okt, vt] = pair_t(jacobian_leading(u, pb.fr).graded_component(d));
    if (!oks || !okt || !(vs + vt).is_zero()) return false;
  }
  for (const auto& c : pb.center) {
    CyclicSeries cd = c.graded_component(d);
    if (cd.is_zero()) continue;
    auto [ok, v] = pair_t(cd);
    if (!ok || !v.is_zero()) return false;
  }
  Series Dd = (taut_apply(rep.F, om) - pb.xi_full).graded_component(d + 2);
  CyclicSeries phid = kvII_phi(rep.F, pb.fr, pb.N).graded_component(d);
  auto [okb, vb] = pair_s(-Dd);
  auto [okp, vp] = pair_t(phid);
  return okb && okp && !(vb + vp).is_zero();
}

}  // namespace gt
