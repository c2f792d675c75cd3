#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gt {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class SignatureMismatch : public Error {
 public:
  explicit SignatureMismatch(const std::string& w) : Error(w) {}
};
class DegreeOverflow : public Error {
 public:
  explicit DegreeOverflow(const std::string& w) : Error(w) {}
};
class NonUnitalLog : public Error {
 public:
  explicit NonUnitalLog(const std::string& w) : Error(w) {}
};
class NonAugmentedExp : public Error {
 public:
  explicit NonAugmentedExp(const std::string& w) : Error(w) {}
};
class GenusNotZero : public Error {
 public:
  explicit GenusNotZero(const std::string& w) : Error(w) {}
};
class NotPositiveDegree : public Error {
 public:
  explicit NotPositiveDegree(const std::string& w) : Error(w) {}
};
class NotSpecial : public Error {
 public:
  explicit NotSpecial(const std::string& w) : Error(w) {}
};
class KvIFailed : public Error {
 public:
  explicit KvIFailed(const std::string& w) : Error(w) {}
};
class ZeroElement : public Error {
 public:
  explicit ZeroElement(const std::string& w) : Error(w) {}
};
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& w) : Error(w) {}
};

// Exact rational scalar. Wraps mpq_class and keeps the value canonical,
// which gmp does not do for the two-argument constructor.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(static_cast<signed long>(n)) {}
  Rational(int n) : v_(n) {}
  Rational(long num, long den) {
    if (den == 0) throw Error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

  static Rational parse(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational literal");
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw ParseError("bad rational literal: " + s);
    if (sgn(q.get_den()) == 0) throw ParseError("zero denominator: " + s);
    q.canonicalize();
    return Rational(q);
  }

  std::string str() const { return v_.get_str(); }
  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  const mpq_class& raw() const { return v_; }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("rational division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

  Rational inv() const {
    if (is_zero()) throw Error("inverse of zero");
    return Rational(mpq_class(1) / v_);
  }

 private:
  mpq_class v_;
};

inline Rational factorial(long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(mpq_class(f));
}

// Bernoulli numbers B_0, B_1, ... with B_1 = -1/2, via the Akiyama-Tanigawa
// style recurrence on the defining identity sum_{j<=m} C(m+1,j) B_j = 0.
inline std::vector<Rational> bernoulli_numbers(int count) {
  std::vector<Rational> b;
  b.reserve(count);
  for (int m = 0; m < count; ++m) {
    if (m == 0) {
      b.push_back(Rational(1));
      continue;
    }
    Rational s(0);
    mpz_class binom;
    for (int j = 0; j < m; ++j) {
      mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(m + 1),
                   static_cast<unsigned long>(j));
      s += Rational(mpq_class(binom)) * b[j];
    }
    b.push_back(-s / Rational(m + 1));
  }
  return b;
}

// Dense univariate power series over Q, truncated at fixed order; small helper
// layer used for scalar series like log((e^s - 1)/s).
using USeries = std::vector<Rational>;

inline USeries uv_mul(const USeries& a, const USeries& b, int order) {
  USeries out(order, Rational(0));
  for (int i = 0; i < static_cast<int>(a.size()) && i < order; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < static_cast<int>(b.size()) && i + j < order; ++j)
      out[i + j] += a[i] * b[j];
  }
  return out;
}

// log of a series with constant term 1.
inline USeries uv_log(const USeries& a, int order) {
  if (a.empty() || a[0] != Rational(1)) throw NonUnitalLog("uv_log needs constant term 1");
  USeries x(a);
  x.resize(order, Rational(0));
  x[0] = Rational(0);
  USeries out(order, Rational(0));
  USeries pw(order, Rational(0));
  pw[0] = Rational(1);
  for (int m = 1; m < order; ++m) {
    pw = uv_mul(pw, x, order);
    Rational c = Rational((m % 2) ? 1 : -1) / Rational(m);
    for (int i = 0; i < order; ++i) out[i] += c * pw[i];
  }
  return out;
}

// Coefficients of log((e^s - 1)/s) up to (excluding) the given order.
inline USeries boundary_rotation_series(int order) {
  USeries a(order, Rational(0));
  for (int k = 0; k < order; ++k) a[k] = factorial(k + 1).inv();
  return uv_log(a, order);
}

// Polynomials in one central variable t, truncated at t^Cap. Used as series
// coefficients when a computation needs exact polynomial t-dependence
// (one-parameter subgroups, first-order conjugation).
template <int Cap>
class Poly {
 public:
  Poly() = default;
  Poly(const Rational& c) {
    if (!c.is_zero()) c_.push_back(c);
  }
  Poly(long n) : Poly(Rational(n)) {}

  static Poly t() {
    Poly p;
    if (Cap > 1) c_assign(p.c_, {Rational(0), Rational(1)});
    return p;
  }

  Rational coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
    return c_[k];
  }
  bool is_zero() const { return c_.empty(); }

  Poly operator-() const {
    Poly p(*this);
    for (auto& x : p.c_) x = -x;
    return p;
  }
  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) { return *this += -o; }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly out;
    if (a.c_.empty() || b.c_.empty()) return out;
    size_t len = std::min<size_t>(a.c_.size() + b.c_.size() - 1, Cap);
    out.c_.assign(len, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (size_t j = 0; j < b.c_.size() && i + j < len; ++j) out.c_[i + j] += a.c_[i] * b.c_[j];
    }
    out.trim();
    return out;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // Exact antiderivative with zero constant term; drops nothing at the cap
  // because callers keep degrees below it.
  Poly integrate() const {
    Poly out;
    if (c_.empty()) return out;
    if (c_.size() + 1 > Cap) throw DegreeOverflow("polynomial cap exceeded in integrate");
    out.c_.assign(c_.size() + 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) out.c_[i + 1] = c_[i] / Rational(static_cast<long>(i + 1));
    out.trim();
    return out;
  }

  Rational eval_at_one() const {
    Rational s(0);
    for (const auto& x : c_) s += x;
    return s;
  }

 private:
  static void c_assign(std::vector<Rational>& v, std::initializer_list<Rational> il) { v = il; }
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rational> c_;  // c_[k] multiplies t^k
};

template <class K>
inline bool coeff_is_zero(const K& k) {
  return k.is_zero();
}

}  // namespace gt
