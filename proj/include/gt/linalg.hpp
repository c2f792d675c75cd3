#pragma once

#include <optional>
#include <vector>

#include "gt/rational.hpp"

namespace gt {

// Dense row-major matrix over the rationals.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Rational& at(int i, int j) const {
    return a_[static_cast<size_t>(i) * cols_ + j];
  }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

inline std::vector<Rational> mat_vec(const QMatrix& m,
                                     const std::vector<Rational>& v) {
  std::vector<Rational> out(m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out[i] += m.at(i, j) * v[j];
  return out;
}

// In-place reduced row echelon form; returns the rank and records pivot
// columns when asked.
inline int rref(QMatrix& m, std::vector<int>* pivot_cols = nullptr) {
  int rank = 0;
  for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
    int piv = -1;
    for (int i = rank; i < m.rows(); ++i)
      if (!m.at(i, col).is_zero()) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != rank)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(rank, j));
    Rational inv = m.at(rank, col).inv();
    for (int j = col; j < m.cols(); ++j) m.at(rank, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == rank || m.at(i, col).is_zero()) continue;
      Rational f = m.at(i, col);
      for (int j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(rank, j);
    }
    if (pivot_cols) pivot_cols->push_back(col);
    ++rank;
  }
  return rank;
}

inline int matrix_rank(QMatrix m) { return rref(m); }

// Solution set of A x = b: a particular point, a kernel basis, and on
// infeasibility a row functional lambda with lambda^T A = 0 and
// lambda^T b != 0 that certifies it.
struct AffineSolution {
  bool solvable = false;
  std::vector<Rational> particular;
  std::vector<std::vector<Rational>> kernel;
  std::vector<Rational> infeasibility;
};

inline AffineSolution solve_affine(const QMatrix& A,
                                   const std::vector<Rational>& b) {
  int n = A.rows(), m = A.cols();
  // eliminate [A | b | I] so row operations stay on record
  QMatrix w(n, m + 1 + n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) w.at(i, j) = A.at(i, j);
    w.at(i, m) = b[i];
    w.at(i, m + 1 + i) = Rational(1);
  }
  // restrict pivoting to the A block, then sweep the b column separately
  int rank = 0;
  std::vector<int> pivots;
  for (int col = 0; col < m && rank < n; ++col) {
    int piv = -1;
    for (int i = rank; i < n; ++i)
      if (!w.at(i, col).is_zero()) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != rank)
      for (int j = 0; j < w.cols(); ++j) std::swap(w.at(piv, j), w.at(rank, j));
    Rational inv = w.at(rank, col).inv();
    for (int j = 0; j < w.cols(); ++j) w.at(rank, j) *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == rank || w.at(i, col).is_zero()) continue;
      Rational f = w.at(i, col);
      for (int j = 0; j < w.cols(); ++j) w.at(i, j) -= f * w.at(rank, j);
    }
    pivots.push_back(col);
    ++rank;
  }

  AffineSolution out;
  for (int i = rank; i < n; ++i) {
    if (!w.at(i, m).is_zero()) {
      out.infeasibility.resize(n);
      for (int j = 0; j < n; ++j) out.infeasibility[j] = w.at(i, m + 1 + j);
      return out;
    }
  }
  out.solvable = true;
  out.particular.assign(m, Rational(0));
  for (int r = 0; r < rank; ++r) out.particular[pivots[r]] = w.at(r, m);
  std::vector<bool> is_pivot(m, false);
  for (int c : pivots) is_pivot[c] = true;
  for (int free = 0; free < m; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> k(m);
    k[free] = Rational(1);
    for (int r = 0; r < rank; ++r) k[pivots[r]] = -w.at(r, free);
    out.kernel.push_back(std::move(k));
  }
  return out;
}

// Point of the affine solution set closest to the origin (squared-norm
// minimum over the rationals). The Gram system of an independent kernel
// basis is positive definite, so this always resolves.
inline std::vector<Rational> least_norm_point(const AffineSolution& s) {
  if (!s.solvable) throw Error("least_norm_point on infeasible system");
  if (s.kernel.empty()) return s.particular;
  int k = static_cast<int>(s.kernel.size());
  int m = static_cast<int>(s.particular.size());
  QMatrix gram(k, k);
  std::vector<Rational> rhs(k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j)
      for (int c = 0; c < m; ++c)
        gram.at(i, j) += s.kernel[i][c] * s.kernel[j][c];
    for (int c = 0; c < m; ++c) rhs[i] -= s.kernel[i][c] * s.particular[c];
  }
  auto t = solve_affine(gram, rhs);
  std::vector<Rational> out = s.particular;
  for (int i = 0; i < k; ++i)
    for (int c = 0; c < m; ++c) out[c] += t.particular[i] * s.kernel[i][c];
  return out;
}

// Coordinates of target in the span of gens, matching term by term. Works
// for any of the series containers with rational coefficients.
struct SpanSolution {
  bool member = false;
  bool unique = false;
  std::vector<Rational> coeffs;
};

template <class S>
SpanSolution solve_in_span(const std::vector<S>& gens, const S& target) {
  using Key = typename decltype(S::terms)::key_type;
  using Less = typename decltype(S::terms)::key_compare;
  std::map<Key, int, Less> row_of;
  auto note = [&](const S& s) {
    for (const auto& [k, c] : s.terms)
      if (!row_of.count(k)) {
        int r = static_cast<int>(row_of.size());
        row_of.emplace(k, r);
      }
  };
  for (const auto& g : gens) note(g);
  note(target);
  QMatrix A(static_cast<int>(row_of.size()), static_cast<int>(gens.size()));
  std::vector<Rational> b(row_of.size());
  for (size_t j = 0; j < gens.size(); ++j)
    for (const auto& [k, c] : gens[j].terms)
      A.at(row_of.at(k), static_cast<int>(j)) = c;
  for (const auto& [k, c] : target.terms) b[row_of.at(k)] = c;
  auto sol = solve_affine(A, b);
  SpanSolution out;
  out.member = sol.solvable;
  out.unique = sol.solvable && sol.kernel.empty();
  if (sol.solvable) out.coeffs = sol.particular;
  return out;
}

}  // namespace gt
