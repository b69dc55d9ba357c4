#pragma once

#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rigidity/fp.hpp"
#include "rigidity/rat.hpp"

namespace rigidity {

// Dense row-major matrix. The scalar type doubles as the field tag:
// Mat<Fp> lives in the fixed prime field, Mat<mpq_class> over the rationals.
template <class T>
struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<T> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

  T& operator()(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  const T& operator()(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

  Mat<T> transposed() const {
    Mat<T> t(cols, rows);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
    return t;
  }
};

// ---------------------------------------------------------------------------
// Prime-field elimination.
// ---------------------------------------------------------------------------

// Incremental Gaussian eliminator over F_p. Feed rows one at a time; each
// absorbed independent row bumps the rank. reduce() against the current basis
// answers "is this row in the span so far" without disturbing the basis,
// which is what batch closure queries need.
class FpEliminator {
 public:
  explicit FpEliminator(int cols) : cols_(cols) {}

  int rank() const { return static_cast<int>(basis_.size()); }

  // Reduces row in place against the basis; returns true if it vanished.
  bool reduce(std::vector<Fp>& row) const {
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      Fp f = row[pivot_[k]];
      if (f.is_zero()) continue;
      const std::vector<Fp>& b = basis_[k];
      for (int j = lead_[k]; j < cols_; ++j) row[j] = row[j] - f * b[j];
    }
    for (int j = 0; j < cols_; ++j)
      if (!row[j].is_zero()) return false;
    return true;
  }

  // Reduces and, if nonzero remains, absorbs the row into the basis.
  // Returns true if the row was independent.
  bool absorb(std::vector<Fp> row) {
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      Fp f = row[pivot_[k]];
      if (f.is_zero()) continue;
      const std::vector<Fp>& b = basis_[k];
      for (int j = lead_[k]; j < cols_; ++j) row[j] = row[j] - f * b[j];
    }
    int lead = -1;
    for (int j = 0; j < cols_; ++j)
      if (!row[j].is_zero()) {
        lead = j;
        break;
      }
    if (lead < 0) return false;
    Fp inv = row[lead].inv();
    for (int j = lead; j < cols_; ++j) row[j] = row[j] * inv;
    lead_.push_back(lead);
    pivot_.push_back(lead);
    basis_.push_back(std::move(row));
    return true;
  }

 private:
  int cols_;
  std::vector<std::vector<Fp>> basis_;  // rows normalized to leading 1
  std::vector<int> pivot_;
  std::vector<int> lead_;
};

inline int rank_fp(const Mat<Fp>& m) {
  FpEliminator e(m.cols);
  std::vector<Fp> row(m.cols);
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) row[j] = m(i, j);
    e.absorb(row);
  }
  return e.rank();
}

// ---------------------------------------------------------------------------
// Exact rational elimination.
// ---------------------------------------------------------------------------

// Fraction-free (Bareiss) rank over the integers after clearing row
// denominators; pivots are chosen by first-nonzero scan order. Row scaling
// cannot change rank, and every division in the Bareiss update is exact,
// so the result is the exact rational rank.
inline int rank_rational(const Mat<mpq_class>& m) {
  int rows = m.rows, cols = m.cols;
  std::vector<std::vector<mpz_class>> z(rows, std::vector<mpz_class>(cols));
  for (int i = 0; i < rows; ++i) {
    mpz_class l = 1;
    for (int j = 0; j < cols; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den().get_mpz_t());
    for (int j = 0; j < cols; ++j) {
      mpq_class q = m(i, j) * l;
      assert(q.get_den() == 1);
      z[i][j] = q.get_num();
    }
  }
  mpz_class prev = 1;
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int sel = -1;
    for (int i = rank; i < rows; ++i)
      if (z[i][col] != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    std::swap(z[sel], z[rank]);
    const mpz_class piv = z[rank][col];
    for (int i = rank + 1; i < rows; ++i) {
      for (int j = col + 1; j < cols; ++j) {
        mpz_class t = z[i][j] * piv - z[i][col] * z[rank][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        z[i][j] = t;
      }
      z[i][col] = 0;
    }
    prev = piv;
    ++rank;
  }
  return rank;
}

// Reduced row echelon form over Q; returns pivot columns. Exact.
inline std::vector<int> rref_rational(Mat<mpq_class>& m) {
  std::vector<int> pivots;
  int rank = 0;
  for (int col = 0; col < m.cols && rank < m.rows; ++col) {
    int sel = -1;
    for (int i = rank; i < m.rows; ++i)
      if (m(i, col) != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    for (int j = 0; j < m.cols; ++j) std::swap(m(sel, j), m(rank, j));
    mpq_class inv = m(rank, col);
    for (int j = col; j < m.cols; ++j) m(rank, j) /= inv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == rank || m(i, col) == 0) continue;
      mpq_class f = m(i, col);
      for (int j = col; j < m.cols; ++j) m(i, j) -= f * m(rank, j);
    }
    pivots.push_back(col);
    ++rank;
  }
  return pivots;
}

// Basis of the right null space { v : Mv = 0 }, exact.
inline std::vector<std::vector<mpq_class>> nullspace_right(const Mat<mpq_class>& m_in) {
  Mat<mpq_class> m = m_in;
  std::vector<int> pivots = rref_rational(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<mpq_class>> basis;
  for (int fc = 0; fc < m.cols; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<mpq_class> v(m.cols, mpq_class(0));
    v[fc] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m(static_cast<int>(i), fc);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Basis of the left null space { y : yM = 0 }, exact.
inline std::vector<std::vector<mpq_class>> nullspace_left(const Mat<mpq_class>& m) {
  return nullspace_right(m.transposed());
}

}  // namespace rigidity
