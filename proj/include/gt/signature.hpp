#pragma once

#include <string>
#include <vector>

#include "gt/rational.hpp"

namespace gt {

// Surface of genus g with n+1 boundary components. The graded model has
// weight-1 generators x1,y1,...,xg,yg and weight-2 generators z1,...,zn.
struct Signature {
  int g = 0;
  int n = 0;

  friend bool operator==(const Signature& a, const Signature& b) {
    return a.g == b.g && a.n == b.n;
  }
  friend bool operator!=(const Signature& a, const Signature& b) { return !(a == b); }
  std::string str() const { return "(" + std::to_string(g) + "," + std::to_string(n) + ")"; }
};

inline void require_same_sig(const Signature& a, const Signature& b, const char* where) {
  if (a != b) throw SignatureMismatch(std::string(where) + ": " + a.str() + " vs " + b.str());
}

// Letters are bytes: x_i -> 2(i-1), y_i -> 2(i-1)+1, z_j -> 128+(j-1).
// Byte order is the canonical generator order x1 < y1 < ... < xg < yg < z1 < ... < zn,
// and the weight is recoverable from the byte alone.
using Letter = char8_t;

inline Letter letter_x(int i) { return static_cast<Letter>(2 * (i - 1)); }
inline Letter letter_y(int i) { return static_cast<Letter>(2 * (i - 1) + 1); }
inline Letter letter_z(int j) { return static_cast<Letter>(128 + (j - 1)); }

inline bool letter_is_z(Letter l) { return l >= 128; }
inline int letter_weight(Letter l) { return letter_is_z(l) ? 2 : 1; }
// 1-based index within its family.
inline int letter_index(Letter l) {
  return letter_is_z(l) ? static_cast<int>(l) - 128 + 1 : static_cast<int>(l) / 2 + 1;
}
inline bool letter_is_x(Letter l) { return !letter_is_z(l) && (static_cast<int>(l) % 2 == 0); }
inline bool letter_is_y(Letter l) { return !letter_is_z(l) && (static_cast<int>(l) % 2 == 1); }

inline bool letter_in_signature(Letter l, const Signature& sig) {
  if (letter_is_z(l)) return letter_index(l) <= sig.n;
  return letter_index(l) <= sig.g;
}

inline std::string letter_name(Letter l) {
  const char* fam = letter_is_z(l) ? "z" : (letter_is_x(l) ? "x" : "y");
  return fam + std::to_string(letter_index(l));
}

inline Letter parse_letter(const std::string& name, const Signature& sig) {
  if (name.size() < 2) throw ParseError("bad generator name: " + name);
  char fam = name[0];
  int idx = 0;
  try {
    size_t pos = 0;
    idx = std::stoi(name.substr(1), &pos);
    if (pos + 1 != name.size()) throw ParseError("bad generator name: " + name);
  } catch (const std::exception&) {
    throw ParseError("bad generator name: " + name);
  }
  if (idx < 1) throw ParseError("bad generator index: " + name);
  Letter l;
  if (fam == 'x')
    l = letter_x(idx);
  else if (fam == 'y')
    l = letter_y(idx);
  else if (fam == 'z')
    l = letter_z(idx);
  else
    throw ParseError("bad generator family: " + name);
  if (!letter_in_signature(l, sig))
    throw ParseError("generator " + name + " not in signature " + sig.str());
  return l;
}

// All generators in canonical order.
inline std::vector<Letter> alphabet(const Signature& sig) {
  std::vector<Letter> out;
  out.reserve(2 * sig.g + sig.n);
  for (int i = 1; i <= sig.g; ++i) {
    out.push_back(letter_x(i));
    out.push_back(letter_y(i));
  }
  for (int j = 1; j <= sig.n; ++j) out.push_back(letter_z(j));
  return out;
}

}  // namespace gt
