#pragma once

#include <memory>
#include <optional>

#include "quatcone/involution.hpp"

namespace quatcone {

// Case dispatch: sign pattern of (a, b, delta) at P, involution kind, and
// division status of the algebra. Case2ii and Case3ii are the mixed-sign
// patterns, normalized internally to a < 0, b > 0.
enum class CaseTag {
  Case1,
  Case2i,
  Case2ii,
  Case2iii,
  Case3i,
  Case3ii,
  Case3iii,
  NilSymplectic,
  NilUnitary,
  Split,
};

const char* case_tag_name(CaseTag t);
CaseTag case_tag_from_name(const std::string& s);
bool case_tag_is_nil(CaseTag t);

// Global sign applied to every signature; flipping it negates the map.
struct Orientation {
  int s = +1;
};

CaseTag case_of(const QuaternionAlgebra& A, const Involution& inv, const Ordering& P);
bool is_nil_ordering(const QuaternionAlgebra& A, const Involution& inv, const Ordering& P);

// A fully resolved problem instance: algebra, involution, ordering and
// orientation, together with the canonical frame every later stage works in.
//
// Orthogonal involutions are standardized to "negate k" with both parameters
// positive at P (inputs whose v has reduced norm negative at P fall outside
// the supported case analysis and are rejected). Unitary mixed-sign inputs
// are normalized by the i <-> j swap.
class Context {
 public:
  Context(QuaternionAlgebra A, Involution inv, Ordering P, Orientation orient = {});

  const QuaternionAlgebra& algebra() const { return alg_; }
  const Involution& involution() const { return inv_; }
  const Ordering& ordering() const { return P_; }
  Orientation orientation() const { return orient_; }
  CaseTag tag() const { return tag_; }
  bool nil() const { return case_tag_is_nil(tag_); }

  bool is_symmetric(const QuatElement& x) const { return quatcone::is_symmetric(alg_, inv_, x); }

  // F-basis of the fixed space, computed once.
  const std::vector<QuatElement>& sym_basis() const { return sym_basis_; }

  const QuaternionAlgebra& canonical_algebra() const;
  QuatElement to_canonical(const QuatElement& x) const;
  QuatElement from_canonical(const QuatElement& x) const;

  // Signature of the rank-one form <d>: requires d symmetric, invertible,
  // and a non-nil ordering; always lands in {-2, 0, +2}.
  int signature(const QuatElement& d) const;

  // Maximal signature over invertible symmetric elements (2 in every
  // supported non-nil division case), with an element attaining it.
  int max_signature(QuatElement* witness = nullptr) const;

  // The case's designated generator, in input coordinates.
  QuatElement designated_generator() const;

  // Shape the independent splitting tables run in. Canonical Case2ii inputs
  // (v on the i- or j-axis) keep their own table; everything else orthogonal
  // goes through the standardized frame.
  enum class OracleShape { None, Shape2i, Shape2ii, Shape3i, Shape3ii, Shape3iii };
  OracleShape oracle_shape() const { return oracle_shape_; }
  const QuaternionAlgebra& oracle_algebra() const;
  QuatElement to_oracle(const QuatElement& x) const;

 private:
  void build_orthogonal_frames();
  void build_unitary_frames();

  QuaternionAlgebra alg_;
  Involution inv_;
  Ordering P_;
  Orientation orient_;
  CaseTag tag_;

  std::optional<StandardFrame> frame_;       // orthogonal, non-nil
  bool unitary_swapped_ = false;             // i <-> j normalization applied
  std::optional<QuaternionAlgebra> canon_;   // canonical algebra when != input

  OracleShape oracle_shape_ = OracleShape::None;
  std::optional<QuaternionAlgebra> oracle_alg_;  // when != canonical path
  bool oracle_swap_ = false;                     // axis swap for v on the j-axis
  std::vector<QuatElement> sym_basis_;
};

}  // namespace quatcone
