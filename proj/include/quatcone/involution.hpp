#pragma once

#include <vector>

#include "quatcone/linalg.hpp"
#include "quatcone/quaternion.hpp"

namespace quatcone {

enum class InvolutionKind { Symplectic, Orthogonal, Unitary };

const char* involution_kind_name(InvolutionKind k);

// Involution descriptor: quaternion conjugation, Int(v) composed with it for
// a pure invertible v, or the unitary involution conjugating sqrt(delta).
struct Involution {
  InvolutionKind kind = InvolutionKind::Symplectic;
  QuatElement v;  // orthogonal only

  static Involution symplectic() { return {InvolutionKind::Symplectic, {}}; }
  static Involution orthogonal(QuatElement v) { return {InvolutionKind::Orthogonal, std::move(v)}; }
  static Involution unitary() { return {InvolutionKind::Unitary, {}}; }
};

void validate(const QuaternionAlgebra& A, const Involution& inv);

QuatElement apply(const QuaternionAlgebra& A, const Involution& inv, const QuatElement& x);

bool is_symmetric(const QuaternionAlgebra& A, const Involution& inv, const QuatElement& x);

struct Classification {
  InvolutionKind kind;
  std::vector<QuatElement> sym_basis;  // F-basis of the fixed space
};
Classification classify(const QuaternionAlgebra& A, const Involution& inv);

// Quadratic form x^2 on the pure part, diag(a, b, -ab) on (i, j, k) coords.
FieldElement pure_square(const QuaternionAlgebra& A, const QuatElement& pure);

// Change of presentation carrying an orthogonal involution to the standard
// one that negates k and fixes 1, i, j. Columns of `from_std` are the images
// of (1, i', j', k') in the input coordinates.
struct StandardFrame {
  QuaternionAlgebra std_alg;
  SmallMatrix from_std;
  SmallMatrix to_std;

  QuatElement to_standard(const QuatElement& x) const { return {to_std.apply(x.c)}; }
  QuatElement from_standard(const QuatElement& x) const { return {from_std.apply(x.c)}; }
};

StandardFrame standardize_orthogonal(const QuaternionAlgebra& A, const QuatElement& v);

// Positive definiteness at P of the involution trace form (x,y) -> Trd(inv(x) y).
bool trace_form_positive(const QuaternionAlgebra& A, const Involution& inv, const Ordering& P);

}  // namespace quatcone
