#pragma once

#include <vector>

#include "gt/series.hpp"

namespace gt {

// Intersection pairing of weight-1 letters: <x_i, y_i> = 1 = -<y_i, x_i>,
// zero otherwise and zero whenever a weight-2 letter is involved.
inline int intersection_pairing(Letter a, Letter b) {
  if (letter_is_z(a) || letter_is_z(b)) return 0;
  if (letter_index(a) != letter_index(b)) return 0;
  if (letter_is_x(a) && letter_is_y(b)) return 1;
  if (letter_is_y(a) && letter_is_x(b)) return -1;
  return 0;
}

// The symmetric weight-2 pairing takes value z_j on (z_j, z_j) and zero
// otherwise; only whether it fires is needed, the value being the letter.
inline bool z_pairing_fires(Letter a, Letter b) {
  return letter_is_z(a) && a == b;
}

// Rotation data of a framing: one number per boundary arc gamma_j and one
// per alpha_i / beta_i handle loop. Everything else is computed from these.
class Framing {
 public:
  Framing(const Signature& sig, std::vector<long> rot_boundary,
          std::vector<long> rot_alpha, std::vector<long> rot_beta)
      : sig_(sig),
        rot_boundary_(std::move(rot_boundary)),
        rot_alpha_(std::move(rot_alpha)),
        rot_beta_(std::move(rot_beta)) {
    if (static_cast<int>(rot_boundary_.size()) != sig.n ||
        static_cast<int>(rot_alpha_.size()) != sig.g ||
        static_cast<int>(rot_beta_.size()) != sig.g)
      throw Error("framing data does not match signature " + sig.str());
  }

  // rot(gamma_j) = -1 and rot(alpha_i) = rot(beta_i) = 0
  static Framing adapted(const Signature& sig) {
    return Framing(sig, std::vector<long>(sig.n, -1),
                   std::vector<long>(sig.g, 0), std::vector<long>(sig.g, 0));
  }

  const Signature& sig() const { return sig_; }
  long rot_gamma(int j) const { return rot_boundary_.at(j - 1); }
  long rot_alpha(int i) const { return rot_alpha_.at(i - 1); }
  long rot_beta(int i) const { return rot_beta_.at(i - 1); }

  // weight-1 letters carry no framing defect; c(z_j) = rot(gamma_j) + 1
  long c(Letter s) const {
    return letter_is_z(s) ? rot_boundary_.at(letter_index(s) - 1) + 1 : 0;
  }

  long q(int j) const { return c(letter_z(j)); }
  bool q_vanishes() const {
    for (int j = 1; j <= sig_.n; ++j)
      if (q(j) != 0) return false;
    return true;
  }

  // p pairs to rot on the handle part of degree-1 homology:
  // p = sum_i rot(beta_i) x_i - rot(alpha_i) y_i
  Series p() const {
    Series out = Series::zero(sig_, kExactDegree);
    for (int i = 1; i <= sig_.g; ++i) {
      if (rot_beta_[i - 1])
        out = out + Series::generator(sig_, letter_x(i)).scaled(Rational(rot_beta_[i - 1]));
      if (rot_alpha_[i - 1])
        out = out - Series::generator(sig_, letter_y(i)).scaled(Rational(rot_alpha_[i - 1]));
    }
    return out;
  }

  // forced by the total turning number of the surface
  long rot_outer_boundary() const {
    long s = 1 - 2 * sig_.g;
    for (int j = 1; j <= sig_.n; ++j) s -= q(j);
    return s;
  }

 private:
  Signature sig_;
  std::vector<long> rot_boundary_, rot_alpha_, rot_beta_;
};

}  // namespace gt
