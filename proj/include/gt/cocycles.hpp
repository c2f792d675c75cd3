#pragma once

#include "gt/framing.hpp"
#include "gt/tangent.hpp"
#include "gt/tensor.hpp"

namespace gt {

// Right-factor divergence. Every word over weight-2 letters splits off its
// final letter, so this only exists at genus 0.
inline CyclicSeries div_gr(const TDer& u) {
  if (u.sig.g != 0) throw GenusNotZero("right-factor divergence needs genus 0");
  CyclicSeries out(u.sig, u.valid);
  for (int j = 1; j <= u.sig.n; ++j) {
    Letter zj = letter_z(j);
    for (const auto& [w, c] : u.tang[j - 1].terms) {
      if (w.empty() || w.back() != zj) continue;
      out.add_term(CyclicWord(Word(1, zj) + w.substr(0, w.size() - 1)), c);
    }
  }
  return out;
}

// Double divergence on tangential derivations. The handle part reads off
// prefix/suffix pairs at each letter of the free images; the boundary part
// multiplies the split of u_j by z_j on one side at a time.
inline BiCyclicSeries tdiv(const TDer& u) {
  TensorSeries acc(u.sig, u.valid);
  for (int i = 1; i <= u.sig.g; ++i) {
    acc = acc + double_derivative(letter_x(i), u.ximg[i - 1]);
    acc = acc + double_derivative(letter_y(i), u.yimg[i - 1]);
  }
  for (int j = 1; j <= u.sig.n; ++j) {
    Letter zj = letter_z(j);
    TensorSeries dd = double_derivative(zj, u.tang[j - 1]);
    for (const auto& [k, c] : dd.terms) {
      acc.add_term(Word(1, zj) + k.first, k.second, c);
      acc.add_term(k.first, k.second + Word(1, zj), -c);
    }
  }
  return trace_both(acc);
}

inline CyclicSeries c_q(const TDer& u, const Framing& fr) {
  require_same_sig(u.sig, fr.sig(), "c_q");
  CyclicSeries out(u.sig, u.valid);
  for (int j = 1; j <= u.sig.n; ++j) {
    long qj = fr.q(j);
    if (qj == 0) continue;
    out = out + trace(u.tang[j - 1]).scaled(Rational(qj));
  }
  return out;
}

// sum_i |r(x_i) + r(y_i)| for r(s) = log((e^s - 1)/s), kept through the
// given degree
inline CyclicSeries handle_rotation_correction(const Signature& sig, int order) {
  CyclicSeries out(sig, order);
  USeries rs = boundary_rotation_series(order + 1);
  for (int i = 1; i <= sig.g; ++i)
    for (int k = 1; k <= order; ++k) {
      if (rs[k].is_zero()) continue;
      out.add_term(CyclicWord(Word(k, letter_x(i))), rs[k]);
      out.add_term(CyclicWord(Word(k, letter_y(i))), rs[k]);
    }
  return out;
}

// Framed double divergence: the double divergence, corrected by the action
// on the rotation terms and by the boundary charges.
inline BiCyclicSeries gdiv_f(const TDer& u, const Framing& fr) {
  require_same_sig(u.sig, fr.sig(), "gdiv_f");
  const Signature& sig = u.sig;
  BiCyclicSeries out = tdiv(u) - wedge(c_q(u, fr), CyclicSeries::unit(sig));
  BiCyclicSeries src = wedge(trace(fr.p()), CyclicSeries::unit(sig));
  if (sig.g > 0 && u.op_min_degree() < kInfiniteDegree) {
    if (u.valid >= kExactDegree)
      throw DegreeOverflow(
          "framed divergence needs a truncated derivation at positive genus");
    src = src + delta_tilde(handle_rotation_correction(sig, u.valid));
  }
  return out + tder_apply(u, src);
}

// one-cocycle integration: exp(u) evaluates to sum_m u^m(c(u))/(m+1)!
template <class M>
inline M integrate_cocycle(const TDer& u, const M& cu, int order) {
  M acc = cu;
  M cur = cu;
  for (int m = 1; m <= order + 2 && !cur.is_zero(); ++m) {
    cur = tder_apply(u, cur).scaled(Rational(1, m));
    acc = acc + cur.scaled(Rational(1, m + 1));
  }
  return acc;
}

inline BiCyclicSeries double_jacobian(const TAut& F, int N) {
  TDer u = taut_log(F, N);
  return integrate_cocycle(u, tdiv(u), N);
}

// scalar Jacobian: the double Jacobian splits through the reduced coproduct,
// and projecting out the first slot recovers the generating element
inline CyclicSeries jacobian(const TAut& F, int N) {
  return co_counit_first(double_jacobian(F, N));
}

inline CyclicSeries charge_cocycle(const TAut& F, const Framing& fr, int N) {
  TDer u = taut_log(F, N);
  return integrate_cocycle(u, c_q(u, fr), N);
}

inline CyclicSeries framed_jacobian(const TAut& F, const Framing& fr, int N) {
  TDer u = taut_log(F, N);
  CyclicSeries j = co_counit_first(integrate_cocycle(u, tdiv(u), N));
  return j - integrate_cocycle(u, c_q(u, fr), N);
}

// conjugated cocycle: (F* c)(u) = F^{-1} . c(Ad_F u)
template <class Cocycle>
inline auto pullback_cocycle(const TAut& F, Cocycle&& c, const TDer& u, int N)
    -> decltype(c(u)) {
  return taut_apply(taut_inverse(F), c(taut_adjoint(F, u, N)));
}

// Cobracket induced on the associated graded through the automorphism F.
inline BiCyclicSeries twisted_cobracket(const CyclicSeries& P, const Framing& fr,
                                        const TAut& F, int N) {
  TDer u = sigma_hat(P).truncated(N);
  return taut_apply(taut_inverse(F), gdiv_f(taut_adjoint(F, u, N), fr));
}

}  // namespace gt
