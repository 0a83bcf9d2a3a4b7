#pragma once

#include <utility>
#include <vector>

#include "quatcone/field.hpp"

namespace quatcone {

// Small dense matrix over F with exact Gaussian elimination. Sizes stay at
// most 8x8 here; nothing is optimized.
class SmallMatrix {
 public:
  SmallMatrix(size_t rows, size_t cols, const FieldDesc& f)
      : rows_(rows), cols_(cols), field_(f), e_(rows * cols, FieldElement(f)) {}

  static SmallMatrix identity(size_t n, const FieldDesc& f);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  const FieldDesc& field() const { return field_; }
  FieldElement& at(size_t r, size_t c) { return e_[r * cols_ + c]; }
  const FieldElement& at(size_t r, size_t c) const { return e_[r * cols_ + c]; }

  SmallMatrix mul(const SmallMatrix& o) const;
  std::vector<FieldElement> apply(const std::vector<FieldElement>& v) const;

  FieldElement det() const;
  // Rows spanning the kernel, from the reduced row echelon form.
  std::vector<std::vector<FieldElement>> kernel_basis() const;
  SmallMatrix inverse() const;  // throws Singular if not invertible

 private:
  size_t rows_, cols_;
  FieldDesc field_;
  std::vector<FieldElement> e_;
};

// Sylvester counts (n_plus, n_minus) of a symmetric matrix at P, by exact
// congruence diagonalization.
std::pair<int, int> sylvester_counts(SmallMatrix g, const Ordering& P);

}  // namespace quatcone
