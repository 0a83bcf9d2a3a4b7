#include "quatcone/signature.hpp"

#include <map>

namespace quatcone {

const char* case_tag_name(CaseTag t) {
  switch (t) {
    case CaseTag::Case1: return "case1";
    case CaseTag::Case2i: return "case2i";
    case CaseTag::Case2ii: return "case2ii";
    case CaseTag::Case2iii: return "case2iii";
    case CaseTag::Case3i: return "case3i";
    case CaseTag::Case3ii: return "case3ii";
    case CaseTag::Case3iii: return "case3iii";
    case CaseTag::NilSymplectic: return "nil_symplectic";
    case CaseTag::NilUnitary: return "nil_unitary";
    case CaseTag::Split: return "split";
  }
  return "unknown";
}

CaseTag case_tag_from_name(const std::string& s) {
  static const std::map<std::string, CaseTag> table = {
      {"case1", CaseTag::Case1},
      {"case2i", CaseTag::Case2i},
      {"case2ii", CaseTag::Case2ii},
      {"case2iii", CaseTag::Case2iii},
      {"case3i", CaseTag::Case3i},
      {"case3ii", CaseTag::Case3ii},
      {"case3iii", CaseTag::Case3iii},
      {"nil_symplectic", CaseTag::NilSymplectic},
      {"nil_unitary", CaseTag::NilUnitary},
      {"split", CaseTag::Split},
  };
  auto it = table.find(s);
  if (it == table.end()) fail(Errc::Parse, "unknown case tag: " + s);
  return it->second;
}

bool case_tag_is_nil(CaseTag t) {
  return t == CaseTag::Case2iii || t == CaseTag::NilSymplectic || t == CaseTag::NilUnitary;
}

bool is_nil_ordering(const QuaternionAlgebra& A, const Involution& inv, const Ordering& P) {
  validate(A, inv);
  int sa = sign_at(A.a(), P), sb = sign_at(A.b(), P);
  switch (inv.kind) {
    case InvolutionKind::Symplectic:
      return sa > 0 || sb > 0;  // A tensor F_P splits
    case InvolutionKind::Orthogonal:
      return sa < 0 && sb < 0;  // A tensor F_P is the definite algebra
    case InvolutionKind::Unitary:
      return sign_at(A.delta(), P) > 0;  // centre splits over F_P
  }
  fail(Errc::Internal, "unreachable involution kind");
}

CaseTag case_of(const QuaternionAlgebra& A, const Involution& inv, const Ordering& P) {
  validate(A, inv);
  if (!A.is_division()) return CaseTag::Split;
  int sa = sign_at(A.a(), P), sb = sign_at(A.b(), P);
  switch (inv.kind) {
    case InvolutionKind::Symplectic:
      return (sa < 0 && sb < 0) ? CaseTag::Case1 : CaseTag::NilSymplectic;
    case InvolutionKind::Orthogonal:
      if (sa < 0 && sb < 0) return CaseTag::Case2iii;
      return (sa > 0 && sb > 0) ? CaseTag::Case2i : CaseTag::Case2ii;
    case InvolutionKind::Unitary: {
      if (sign_at(A.delta(), P) > 0) return CaseTag::NilUnitary;
      if (sa > 0 && sb > 0) return CaseTag::Case3i;
      if (sa < 0 && sb < 0) return CaseTag::Case3iii;
      return CaseTag::Case3ii;
    }
  }
  fail(Errc::Internal, "unreachable involution kind");
}

Context::Context(QuaternionAlgebra A, Involution inv, Ordering P, Orientation orient)
    : alg_(std::move(A)), inv_(std::move(inv)), P_(std::move(P)), orient_(orient),
      tag_(CaseTag::Split) {
  if (!(alg_.field() == P_.field)) fail(Errc::FieldMismatch, "ordering for a different field");
  tag_ = case_of(alg_, inv_, P_);
  if (tag_ == CaseTag::Case2i || tag_ == CaseTag::Case2ii) build_orthogonal_frames();
  if (tag_ == CaseTag::Case3i || tag_ == CaseTag::Case3ii || tag_ == CaseTag::Case3iii)
    build_unitary_frames();
  sym_basis_ = classify(alg_, inv_).sym_basis;
}

void Context::build_orthogonal_frames() {
  const QuatElement& v = inv_.v;
  if (sign_at(alg_.reduced_norm(v).s, P_) < 0)
    fail(Errc::Unsupported,
         "orthogonal involution with Nrd(v) negative at P: no presentation brings it to the "
         "standard form, outside the supported cases");
  frame_ = standardize_orthogonal(alg_, v);
  canon_ = frame_->std_alg;
  if (sign_at(canon_->a(), P_) <= 0 || sign_at(canon_->b(), P_) <= 0)
    fail(Errc::Internal, "standardized parameters not positive at P");

  bool on_i = v.c[2].is_zero() && v.c[3].is_zero();
  bool on_j = v.c[1].is_zero() && v.c[3].is_zero();
  bool on_k = v.c[1].is_zero() && v.c[2].is_zero();
  if (on_k) {
    oracle_shape_ = OracleShape::Shape2i;  // canonical frame is the identity
  } else if (on_i) {
    oracle_shape_ = OracleShape::Shape2ii;
    oracle_alg_ = alg_;
  } else if (on_j) {
    oracle_shape_ = OracleShape::Shape2ii;
    oracle_alg_ = QuaternionAlgebra::first_kind(alg_.b(), alg_.a(), alg_.is_division());
    oracle_swap_ = true;
  } else {
    oracle_shape_ = OracleShape::Shape2i;  // run on the standardized frame
  }
}

void Context::build_unitary_frames() {
  int sa = sign_at(alg_.a(), P_), sb = sign_at(alg_.b(), P_);
  if (sa > 0 && sb < 0) {
    unitary_swapped_ = true;
    canon_ = QuaternionAlgebra::unitary_center(alg_.b(), alg_.a(), alg_.delta(),
                                               alg_.is_division());
  }
  switch (tag_) {
    case CaseTag::Case3i: oracle_shape_ = OracleShape::Shape3i; break;
    case CaseTag::Case3ii: oracle_shape_ = OracleShape::Shape3ii; break;
    case CaseTag::Case3iii: oracle_shape_ = OracleShape::Shape3iii; break;
    default: fail(Errc::Internal, "unitary frame for a non-unitary case");
  }
}

const QuaternionAlgebra& Context::canonical_algebra() const { return canon_ ? *canon_ : alg_; }

namespace {

QuatElement swap_ij(const QuaternionAlgebra& target, const QuatElement& x) {
  // i <-> j carries (a,b) to (b,a) and k to -k, K-linearly.
  std::vector<FieldElement> c = x.c;
  std::swap(c[1], c[2]);
  c[3] = -c[3];
  if (c.size() == 8) {
    std::swap(c[5], c[6]);
    c[7] = -c[7];
  }
  return target.from_coords(std::move(c));
}

}  // namespace

QuatElement Context::to_canonical(const QuatElement& x) const {
  alg_.require_element(x);
  if (frame_) return frame_->to_standard(x);
  if (unitary_swapped_) return swap_ij(*canon_, x);
  return x;
}

QuatElement Context::from_canonical(const QuatElement& x) const {
  canonical_algebra().require_element(x);
  if (frame_) return frame_->from_standard(x);
  if (unitary_swapped_) return swap_ij(alg_, x);
  return x;
}

const QuaternionAlgebra& Context::oracle_algebra() const {
  return oracle_alg_ ? *oracle_alg_ : canonical_algebra();
}

QuatElement Context::to_oracle(const QuatElement& x) const {
  if (oracle_alg_) {
    // direct 2.ii table, possibly after the axis swap
    return oracle_swap_ ? swap_ij(*oracle_alg_, x) : x;
  }
  return to_canonical(x);
}

int Context::signature(const QuatElement& d) const {
  if (tag_ == CaseTag::Split) fail(Errc::Unsupported, "split algebra: use psd membership");
  if (nil()) fail(Errc::NilOrdering, "signature at a nil ordering");
  if (!is_symmetric(d)) fail(Errc::NotSymmetric, "element is not fixed by the involution");
  if (alg_.reduced_norm(d).is_zero()) fail(Errc::Singular, "element is not invertible");

  const QuatElement e = to_canonical(d);
  const QuaternionAlgebra& A = canonical_algebra();
  auto sq = [&](const FieldElement& x) { return x * x; };

  switch (tag_) {
    case CaseTag::Case1:
      return orient_.s * 2 * sign_at(d.c[0], P_);
    case CaseTag::Case2i:
    case CaseTag::Case2ii: {
      // negate-k standard form: +-2 iff d0^2 > a d1^2 + b d2^2
      FieldElement disc = sq(e.c[0]) - A.a() * sq(e.c[1]) - A.b() * sq(e.c[2]);
      int s = sign_at(disc, P_);
      if (s == 0) fail(Errc::Internal, "discriminant vanished for an invertible element");
      return s < 0 ? 0 : orient_.s * 2 * sign_at(e.c[0], P_);
    }
    case CaseTag::Case3i: {
      const FieldElement &a = A.a(), &b = A.b(), &dl = A.delta();
      FieldElement lhs = -(a * b * dl) * sq(e.c[7]);
      FieldElement rhs = sq(e.c[0]) - a * dl * sq(e.c[5]) - b * dl * sq(e.c[6]);
      int s = sign_at(lhs - rhs, P_);
      if (s == 0) fail(Errc::Internal, "discriminant vanished for an invertible element");
      return s < 0 ? 0 : orient_.s * 2 * sign_at(e.c[7], P_);
    }
    case CaseTag::Case3ii: {
      const FieldElement &a = A.a(), &b = A.b(), &dl = A.delta();
      FieldElement lhs = (a * dl) * sq(e.c[5]);
      FieldElement rhs = sq(e.c[0]) - b * dl * sq(e.c[6]) + a * b * dl * sq(e.c[7]);
      int s = sign_at(lhs - rhs, P_);
      if (s == 0) fail(Errc::Internal, "discriminant vanished for an invertible element");
      return s < 0 ? 0 : orient_.s * 2 * sign_at(e.c[5], P_);
    }
    case CaseTag::Case3iii: {
      const FieldElement &a = A.a(), &b = A.b(), &dl = A.delta();
      FieldElement rhs = a * dl * sq(e.c[5]) + b * dl * sq(e.c[6]) - a * b * dl * sq(e.c[7]);
      int s = sign_at(sq(e.c[0]) - rhs, P_);
      if (s == 0) fail(Errc::Internal, "discriminant vanished for an invertible element");
      return s < 0 ? 0 : orient_.s * 2 * sign_at(e.c[0], P_);
    }
    default:
      fail(Errc::Internal, "unreachable case tag");
  }
}

QuatElement Context::designated_generator() const {
  if (tag_ == CaseTag::Split) fail(Errc::Unsupported, "split algebra: use psd membership");
  if (nil()) fail(Errc::NilOrdering, "no positive cones over a nil ordering");
  switch (tag_) {
    case CaseTag::Case1:
    case CaseTag::Case2i:
    case CaseTag::Case2ii:
    case CaseTag::Case3iii:
      return alg_.one();
    case CaseTag::Case3i:
      return from_canonical(canonical_algebra().basis(7));
    case CaseTag::Case3ii:
      return from_canonical(canonical_algebra().basis(5));
    default:
      fail(Errc::Internal, "unreachable case tag");
  }
}

int Context::max_signature(QuatElement* witness) const {
  if (tag_ == CaseTag::Split) fail(Errc::Unsupported, "split algebra: use psd membership");
  if (nil()) fail(Errc::NilOrdering, "max signature at a nil ordering");
  QuatElement g = designated_generator();
  int s = signature(g);
  if (s == -2) {  // flipped orientation: the mirror attains the maximum
    g = alg_.neg(g);
    s = signature(g);
  }
  if (s != 2) fail(Errc::Internal, "designated generator does not attain the maximal signature");
  if (witness) *witness = g;
  return 2;
}

}  // namespace quatcone
