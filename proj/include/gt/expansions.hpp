#pragma once

#include <cctype>
#include <compare>
#include <map>
#include <string>
#include <vector>

#include "gt/cocycles.hpp"
#include "gt/tangent.hpp"

namespace gt {

// Generator of the fundamental group: handle pairs a_i, b_i and boundary
// loops c_j, possibly inverted.
struct FreeLetter {
  char kind;  // 'a', 'b' or 'c'
  int index;  // 1-based
  bool inv;
  friend auto operator<=>(const FreeLetter&, const FreeLetter&) = default;
};

// Reduced word in the free generators.
class FreeGroupWord {
 public:
  FreeGroupWord() = default;
  explicit FreeGroupWord(std::vector<FreeLetter> letters) {
    for (const FreeLetter& l : letters) push(l);
  }

  void push(const FreeLetter& l) {
    if (!letters_.empty() && letters_.back().kind == l.kind &&
        letters_.back().index == l.index && letters_.back().inv != l.inv)
      letters_.pop_back();
    else
      letters_.push_back(l);
  }

  FreeGroupWord operator*(const FreeGroupWord& o) const {
    FreeGroupWord r = *this;
    for (const FreeLetter& l : o.letters_) r.push(l);
    return r;
  }

  FreeGroupWord inverse() const {
    FreeGroupWord r;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
      r.letters_.push_back({it->kind, it->index, !it->inv});
    return r;
  }

  FreeGroupWord power(int m) const {
    FreeGroupWord base = m < 0 ? inverse() : *this;
    FreeGroupWord r;
    for (int k = 0; k < (m < 0 ? -m : m); ++k) r = r * base;
    return r;
  }

  bool is_identity() const { return letters_.empty(); }
  const std::vector<FreeLetter>& letters() const { return letters_; }

  friend auto operator<=>(const FreeGroupWord&, const FreeGroupWord&) = default;

 private:
  std::vector<FreeLetter> letters_;
};

// Syntax: whitespace-separated tokens like "a1 b1 A1 B1 c2"; capitals invert.
inline FreeGroupWord parse_free_word(const std::string& text) {
  FreeGroupWord w;
  size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    char c = text[i];
    char low = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (low != 'a' && low != 'b' && low != 'c')
      throw ParseError("unknown generator in loop word");
    size_t j = i + 1, idx = 0;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
      idx = idx * 10 + static_cast<size_t>(text[j] - '0');
      ++j;
    }
    if (j == i + 1 || idx == 0) throw ParseError("generator needs a positive index");
    w.push({low, static_cast<int>(idx),
            static_cast<bool>(std::isupper(static_cast<unsigned char>(c)))});
    i = j;
  }
  return w;
}

inline std::string free_word_str(const FreeGroupWord& w) {
  std::string s;
  for (const FreeLetter& l : w.letters()) {
    if (!s.empty()) s += ' ';
    s += l.inv ? static_cast<char>(std::toupper(l.kind)) : l.kind;
    s += std::to_string(l.index);
  }
  return s;
}

// boundary relator: product of the handle commutators and the boundary loops
inline FreeGroupWord gamma0(const Signature& sig) {
  FreeGroupWord w;
  for (int i = 1; i <= sig.g; ++i) {
    w.push({'a', i, false});
    w.push({'b', i, false});
    w.push({'a', i, true});
    w.push({'b', i, true});
  }
  for (int j = 1; j <= sig.n; ++j) w.push({'c', j, false});
  return w;
}

// Finitely supported rational combination of group elements.
class GroupRingElement {
 public:
  std::map<FreeGroupWord, Rational> terms;

  GroupRingElement() = default;
  explicit GroupRingElement(const FreeGroupWord& w) { terms[w] = Rational(1); }

  void add(const FreeGroupWord& w, const Rational& c) {
    auto [it, fresh] = terms.emplace(w, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }

  bool is_zero() const { return terms.empty(); }

  Rational augmentation() const {
    Rational s;
    for (const auto& [w, c] : terms) s += c;
    return s;
  }

  GroupRingElement operator+(const GroupRingElement& o) const {
    GroupRingElement r = *this;
    for (const auto& [w, c] : o.terms) r.add(w, c);
    return r;
  }
  GroupRingElement operator-(const GroupRingElement& o) const {
    GroupRingElement r = *this;
    for (const auto& [w, c] : o.terms) r.add(w, -c);
    return r;
  }
  GroupRingElement operator*(const GroupRingElement& o) const {
    GroupRingElement r;
    for (const auto& [w, c] : terms)
      for (const auto& [v, d] : o.terms) r.add(w * v, c * d);
    return r;
  }
  GroupRingElement scaled(const Rational& k) const {
    GroupRingElement r;
    if (k.is_zero()) return r;
    for (const auto& [w, c] : terms) r.terms.emplace(w, c * k);
    return r;
  }
};

inline Letter graded_letter(const Signature& sig, const FreeLetter& l) {
  if (l.kind == 'c') {
    if (l.index > sig.n) throw Error("boundary generator out of range");
    return letter_z(l.index);
  }
  if (l.index > sig.g) throw Error("handle generator out of range");
  return l.kind == 'a' ? letter_x(l.index) : letter_y(l.index);
}

// a_i -> exp(x_i), b_i -> exp(y_i), c_j -> exp(z_j), multiplicatively
inline Series theta_exp_eval(const Signature& sig, const FreeGroupWord& w, int N) {
  Series out = Series::one(sig, N);
  for (const FreeLetter& l : w.letters()) {
    Series g = Series::generator(sig, graded_letter(sig, l), N);
    out = out * exp_series(l.inv ? -g : g);
  }
  return out;
}

inline Series theta_exp_eval(const Signature& sig, const GroupRingElement& a, int N) {
  Series out(sig, N);
  for (const auto& [w, c] : a.terms)
    out = out + theta_exp_eval(sig, w, N).scaled(c);
  return out;
}

// Valuation for the weight filtration, computed through the exponential
// expansion. A value of N+1 means the valuation exceeds the cap N.
inline int weight(const Signature& sig, const GroupRingElement& a, int N) {
  if (a.is_zero()) throw ZeroElement("weight of the zero element");
  Series s = theta_exp_eval(sig, a, N);
  return s.is_zero() ? N + 1 : s.min_degree();
}

// Tangential expansion theta = F^{-1} o theta_exp, carried by its twist.
class Expansion {
 public:
  explicit Expansion(const TAut& F) : F_(F), Finv_(taut_inverse(F)) {}

  static Expansion exponential(const Signature& sig) {
    return Expansion(TAut::identity(sig));
  }

  const Signature& sig() const { return F_.sig; }
  const TAut& twist() const { return F_; }
  const TAut& twist_inverse() const { return Finv_; }

  Series eval(const FreeGroupWord& w, int N) const {
    return taut_apply(Finv_, theta_exp_eval(F_.sig, w, N));
  }
  Series eval(const GroupRingElement& a, int N) const {
    return taut_apply(Finv_, theta_exp_eval(F_.sig, a, N));
  }

 private:
  TAut F_, Finv_;
};

// The expansion is special when the twist carries the quadratic boundary
// class to the boundary relator's logarithm.
inline bool is_special(const Expansion& E, int N) {
  Series lhs = taut_apply(E.twist(), omega(E.sig())).truncated(N);
  return lhs == xi(E.sig(), N);
}

inline CyclicSeries loop_log(const FreeGroupWord& w, const Expansion& E, int N) {
  return trace(log_series(E.eval(w, N)));
}

inline CyclicSeries loop_bracket(const FreeGroupWord& v, const FreeGroupWord& w,
                                 const Expansion& E, int N) {
  if (!is_special(E, N + 2))
    throw NotSpecial("loop bracket needs a special expansion");
  return goldman_bracket(trace(E.eval(v, N + 2)), trace(E.eval(w, N + 2)));
}

// Checked form of the twisted cobracket operator.
inline BiCyclicSeries twisted_cobracket(const CyclicSeries& P, const Framing& fr,
                                        const Expansion& E, int N) {
  if (!is_special(E, N))
    throw NotSpecial("twisted cobracket needs a special twist");
  return twisted_cobracket(P, fr, E.twist(), N);
}

inline BiCyclicSeries loop_cobracket(const FreeGroupWord& w, const Expansion& E,
                                     const Framing& fr, int N) {
  if (!is_special(E, N + 2))
    throw NotSpecial("loop cobracket needs a special expansion");
  CyclicSeries P = trace(E.eval(w, N + 2));
  return twisted_cobracket(P, fr, E.twist(), N + 2);
}

inline BiCyclicSeries loop_cobracket(const FreeGroupWord& w, const TAut& F,
                                     const Framing& fr, int N) {
  return loop_cobracket(w, Expansion(F), fr, N);
}

}  // namespace gt
