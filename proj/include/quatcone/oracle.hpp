#pragma once

#include <array>
#include <memory>

#include "quatcone/cone.hpp"
#include "quatcone/tower.hpp"

namespace quatcone {

// 2x2 matrix over the tower (with formal sqrt(-1) in the unitary cases),
// row-major.
struct SplitMatrix {
  std::array<ComplexTowerElement, 4> e;

  const ComplexTowerElement& at(size_t r, size_t c) const { return e[2 * r + c]; }
  ComplexTowerElement& at(size_t r, size_t c) { return e[2 * r + c]; }
  bool operator==(const SplitMatrix& o) const { return e == o.e; }
};

// Independent verification path: splits the algebra over an exact tower and
// recomputes signatures from the trace and determinant of a 2x2 hermitian
// matrix, cross-checking the closed-form predicates.
class SplitContext {
 public:
  explicit SplitContext(const Context& ctx);

  bool has_table() const { return shape_ != Context::OracleShape::None; }
  const QuaternionAlgebra& table_algebra() const { return ctx_->oracle_algebra(); }
  const Tower& tower() const { return *tower_; }

  // The splitting image of an element given in table-algebra coordinates.
  SplitMatrix image(const QuatElement& x) const;
  const SplitMatrix& phi() const { return phi_; }
  // The involution the table carries the canonical one to: X -> Phi conj(X)^t Phi^{-1}
  // (plain transpose in the real cases).
  SplitMatrix twisted_conjugate_transpose(const SplitMatrix& m) const;
  // The canonical involution on table-algebra coordinates.
  QuatElement table_involution(const QuatElement& x) const;

  // Signature recomputed from det/trace signs; input in the original
  // problem coordinates.
  int signature(const QuatElement& d) const;

  SplitMatrix mul(const SplitMatrix& x, const SplitMatrix& y) const;

 private:
  void build_tables();
  int case1_signature(const QuatElement& d) const;

  const Context* ctx_;
  Context::OracleShape shape_;
  std::unique_ptr<Tower> tower_;
  std::array<SplitMatrix, 4> basis_image_;  // images of 1, i, j, k
  ComplexTowerElement sqrt_delta_;          // unitary cases
  SplitMatrix phi_;
};

int signature_oracle(const Context& ctx, const QuatElement& d);

struct TableReport {
  int trials = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// Multiplicativity of the splitting map and the involution correspondence
// through Phi, on random pairs, exactly over the tower.
TableReport check_splitting_tables(const Context& ctx, uint64_t seed, int trials);

}  // namespace quatcone
