#include "quatcone/linalg.hpp"

namespace quatcone {

SmallMatrix SmallMatrix::identity(size_t n, const FieldDesc& f) {
  SmallMatrix m(n, n, f);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = FieldElement::integer(1, f);
  return m;
}

SmallMatrix SmallMatrix::mul(const SmallMatrix& o) const {
  if (cols_ != o.rows_) fail(Errc::Internal, "matrix shape mismatch");
  SmallMatrix r(rows_, o.cols_, field_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (size_t j = 0; j < o.cols_; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
    }
  return r;
}

std::vector<FieldElement> SmallMatrix::apply(const std::vector<FieldElement>& v) const {
  if (v.size() != cols_) fail(Errc::Internal, "matrix/vector shape mismatch");
  std::vector<FieldElement> r(rows_, FieldElement(field_));
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
  return r;
}

FieldElement SmallMatrix::det() const {
  if (rows_ != cols_) fail(Errc::Internal, "determinant of a non-square matrix");
  SmallMatrix w = *this;
  FieldElement d = FieldElement::integer(1, field_);
  for (size_t col = 0; col < cols_; ++col) {
    size_t pivot = col;
    while (pivot < rows_ && w.at(pivot, col).is_zero()) ++pivot;
    if (pivot == rows_) return FieldElement(field_);
    if (pivot != col) {
      for (size_t j = 0; j < cols_; ++j) std::swap(w.at(pivot, j), w.at(col, j));
      d = -d;
    }
    d *= w.at(col, col);
    FieldElement inv = w.at(col, col).inverse();
    for (size_t r = col + 1; r < rows_; ++r) {
      if (w.at(r, col).is_zero()) continue;
      FieldElement f = w.at(r, col) * inv;
      for (size_t j = col; j < cols_; ++j) w.at(r, j) -= f * w.at(col, j);
    }
  }
  return d;
}

std::vector<std::vector<FieldElement>> SmallMatrix::kernel_basis() const {
  SmallMatrix w = *this;
  std::vector<long> pivot_of_col(cols_, -1);
  size_t rank = 0;
  for (size_t col = 0; col < cols_ && rank < rows_; ++col) {
    size_t pivot = rank;
    while (pivot < rows_ && w.at(pivot, col).is_zero()) ++pivot;
    if (pivot == rows_) continue;
    for (size_t j = 0; j < cols_; ++j) std::swap(w.at(pivot, j), w.at(rank, j));
    FieldElement inv = w.at(rank, col).inverse();
    for (size_t j = 0; j < cols_; ++j) w.at(rank, j) *= inv;
    for (size_t r = 0; r < rows_; ++r) {
      if (r == rank || w.at(r, col).is_zero()) continue;
      FieldElement f = w.at(r, col);
      for (size_t j = 0; j < cols_; ++j) w.at(r, j) -= f * w.at(rank, j);
    }
    pivot_of_col[col] = static_cast<long>(rank);
    ++rank;
  }
  std::vector<std::vector<FieldElement>> basis;
  for (size_t free = 0; free < cols_; ++free) {
    if (pivot_of_col[free] >= 0) continue;
    std::vector<FieldElement> v(cols_, FieldElement(field_));
    v[free] = FieldElement::integer(1, field_);
    for (size_t col = 0; col < cols_; ++col)
      if (pivot_of_col[col] >= 0) v[col] = -w.at(static_cast<size_t>(pivot_of_col[col]), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

SmallMatrix SmallMatrix::inverse() const {
  if (rows_ != cols_) fail(Errc::Internal, "inverse of a non-square matrix");
  SmallMatrix w = *this;
  SmallMatrix r = identity(rows_, field_);
  for (size_t col = 0; col < cols_; ++col) {
    size_t pivot = col;
    while (pivot < rows_ && w.at(pivot, col).is_zero()) ++pivot;
    if (pivot == rows_) fail(Errc::Singular, "matrix is not invertible");
    if (pivot != col)
      for (size_t j = 0; j < cols_; ++j) {
        std::swap(w.at(pivot, j), w.at(col, j));
        std::swap(r.at(pivot, j), r.at(col, j));
      }
    FieldElement inv = w.at(col, col).inverse();
    for (size_t j = 0; j < cols_; ++j) {
      w.at(col, j) *= inv;
      r.at(col, j) *= inv;
    }
    for (size_t row = 0; row < rows_; ++row) {
      if (row == col || w.at(row, col).is_zero()) continue;
      FieldElement f = w.at(row, col);
      for (size_t j = 0; j < cols_; ++j) {
        w.at(row, j) -= f * w.at(col, j);
        r.at(row, j) -= f * r.at(col, j);
      }
    }
  }
  return r;
}

std::pair<int, int> sylvester_counts(SmallMatrix g, const Ordering& P) {
  const size_t n = g.rows();
  std::vector<bool> done(n, false);
  int plus = 0, minus = 0;
  const FieldDesc& f = g.field();
  for (size_t step = 0; step < n; ++step) {
    size_t piv = n;
    for (size_t i = 0; i < n; ++i)
      if (!done[i] && !g.at(i, i).is_zero()) { piv = i; break; }
    if (piv == n) {
      // No diagonal pivot left; create one from an off-diagonal entry.
      size_t bi = n, bj = n;
      for (size_t i = 0; i < n && bi == n; ++i)
        for (size_t j = i + 1; j < n && bi == n; ++j)
          if (!done[i] && !done[j] && !g.at(i, j).is_zero()) { bi = i; bj = j; }
      if (bi == n) break;  // remaining block is zero
      for (size_t c = 0; c < n; ++c) g.at(bi, c) += g.at(bj, c);
      for (size_t r = 0; r < n; ++r) g.at(r, bi) += g.at(r, bj);
      piv = bi;
    }
    FieldElement d = g.at(piv, piv);
    int s = sign_at(d, P);
    if (s > 0) ++plus; else ++minus;
    FieldElement dinv = d.inverse();
    for (size_t r = 0; r < n; ++r) {
      if (r == piv || done[r] || g.at(r, piv).is_zero()) continue;
      FieldElement fac = g.at(r, piv) * dinv;
      for (size_t c = 0; c < n; ++c) g.at(r, c) -= fac * g.at(piv, c);
      for (size_t c = 0; c < n; ++c) g.at(c, r) = g.at(r, c);
    }
    done[piv] = true;
    for (size_t c = 0; c < n; ++c)
      if (c != piv) { g.at(piv, c) = FieldElement(f); g.at(c, piv) = FieldElement(f); }
  }
  return {plus, minus};
}

}  // namespace quatcone
