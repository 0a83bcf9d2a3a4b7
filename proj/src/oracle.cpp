#include "quatcone/oracle.hpp"

#include "quatcone/linalg.hpp"
#include "quatcone/sampling.hpp"

namespace quatcone {

namespace {

SplitMatrix scale_matrix(const SplitMatrix& m, const ComplexTowerElement& s) {
  SplitMatrix r = m;
  for (auto& x : r.e) x = x * s;
  return r;
}

SplitMatrix add_matrix(const SplitMatrix& x, const SplitMatrix& y) {
  SplitMatrix r = x;
  for (size_t i = 0; i < 4; ++i) r.e[i] = r.e[i] + y.e[i];
  return r;
}

}  // namespace

SplitContext::SplitContext(const Context& ctx) : ctx_(&ctx), shape_(ctx.oracle_shape()) {
  if (shape_ != Context::OracleShape::None) build_tables();
}

void SplitContext::build_tables() {
  const QuaternionAlgebra& A = ctx_->oracle_algebra();
  const Ordering& P = ctx_->ordering();
  const FieldElement &a = A.a(), &b = A.b();
  tower_ = std::make_unique<Tower>(P);
  Tower& tw = *tower_;

  auto real_mat = [&](TowerElement m00, TowerElement m01, TowerElement m10, TowerElement m11) {
    SplitMatrix m;
    m.at(0, 0) = ComplexTowerElement::real(std::move(m00), tw);
    m.at(0, 1) = ComplexTowerElement::real(std::move(m01), tw);
    m.at(1, 0) = ComplexTowerElement::real(std::move(m10), tw);
    m.at(1, 1) = ComplexTowerElement::real(std::move(m11), tw);
    return m;
  };
  auto imag = [&](TowerElement x) { return ComplexTowerElement::imaginary(std::move(x), tw); };

  using Shape = Context::OracleShape;
  switch (shape_) {
    case Shape::Shape2i: {
      TowerElement ra = tw.sqrt_of(tw.add_radicand(a));
      TowerElement rb = tw.sqrt_of(tw.add_radicand(b));
      TowerElement rab = ra * rb;
      basis_image_[0] = real_mat(tw.one(), tw.zero(), tw.zero(), tw.one());
      basis_image_[1] = real_mat(ra, tw.zero(), tw.zero(), -ra);
      basis_image_[2] = real_mat(tw.zero(), rb, rb, tw.zero());
      basis_image_[3] = real_mat(tw.zero(), rab, -rab, tw.zero());
      phi_ = real_mat(tw.one(), tw.zero(), tw.zero(), tw.one());
      break;
    }
    case Shape::Shape2ii: {
      TowerElement rna = tw.sqrt_of(tw.add_radicand(-a));
      TowerElement rb = tw.sqrt_of(tw.add_radicand(b));
      TowerElement rnab = rna * rb;
      basis_image_[0] = real_mat(tw.one(), tw.zero(), tw.zero(), tw.one());
      basis_image_[1] = real_mat(tw.zero(), rna, -rna, tw.zero());
      basis_image_[2] = real_mat(tw.zero(), rb, rb, tw.zero());
      basis_image_[3] = real_mat(rnab, tw.zero(), tw.zero(), -rnab);
      phi_ = real_mat(tw.one(), tw.zero(), tw.zero(), tw.one());
      break;
    }
    case Shape::Shape3i: {
      const FieldElement& dl = A.delta();
      TowerElement ra = tw.sqrt_of(tw.add_radicand(a));
      TowerElement rb = tw.sqrt_of(tw.add_radicand(b));
      TowerElement rnd = tw.sqrt_of(tw.add_radicand(-dl));
      basis_image_[0] = real_mat(tw.one(), tw.zero(), tw.zero(), tw.one());
      basis_image_[1] = real_mat(ra, tw.zero(), tw.zero(), -ra);
      basis_image_[2].at(0, 0) = imag(tw.zero());
      basis_image_[2].at(0, 1) = imag(rb);
      basis_image_[2].at(1, 0) = imag(-rb);
      basis_image_[2].at(1, 1) = imag(tw.zero());
      basis_image_[3].at(0, 0) = imag(tw.zero());
      basis_image_[3].at(0, 1) = imag(ra * rb);
      basis_image_[3].at(1, 0) = imag(ra * rb);
      basis_image_[3].at(1, 1) = imag(tw.zero());
      sqrt_delta_ = imag(-rnd);
      phi_ = real_mat(tw.zero(), tw.one(), tw.one(), tw.zero());
      break;
    }
    case Shape::Shape3ii: {
      const FieldElement& dl = A.delta();
      TowerElement rna = tw.sqrt_of(tw.add_radicand(-a));
      TowerElement rb = tw.sqrt_of(tw.add_radicand(b));
      TowerElement rnd = tw.sqrt_of(tw.add_radicand(-dl));
      basis_image_[0] = real_mat(tw.one(), tw.zero(), tw.zero(), tw.one());
      basis_image_[1].at(0, 0) = imag(tw.zero());
      basis_image_[1].at(0, 1) = imag(rna);
      basis_image_[1].at(1, 0) = imag(rna);
      basis_image_[1].at(1, 1) = imag(tw.zero());
      basis_image_[2] = real_mat(rb, tw.zero(), tw.zero(), -rb);
      basis_image_[3].at(0, 0) = imag(tw.zero());
      basis_image_[3].at(0, 1) = imag(-(rna * rb));
      basis_image_[3].at(1, 0) = imag(rna * rb);
      basis_image_[3].at(1, 1) = imag(tw.zero());
      sqrt_delta_ = imag(-rnd);
      phi_ = real_mat(tw.zero(), tw.one(), tw.one(), tw.zero());
      break;
    }
    case Shape::Shape3iii: {
      const FieldElement& dl = A.delta();
      TowerElement rna = tw.sqrt_of(tw.add_radicand(-a));
      TowerElement rnb = tw.sqrt_of(tw.add_radicand(-b));
      TowerElement rnd = tw.sqrt_of(tw.add_radicand(-dl));
      basis_image_[0] = real_mat(tw.one(), tw.zero(), tw.zero(), tw.one());
      basis_image_[1].at(0, 0) = imag(rna);
      basis_image_[1].at(0, 1) = imag(tw.zero());
      basis_image_[1].at(1, 0) = imag(tw.zero());
      basis_image_[1].at(1, 1) = imag(-rna);
      basis_image_[2].at(0, 0) = imag(tw.zero());
      basis_image_[2].at(0, 1) = imag(rnb);
      basis_image_[2].at(1, 0) = imag(rnb);
      basis_image_[2].at(1, 1) = imag(tw.zero());
      basis_image_[3] = real_mat(tw.zero(), -(rna * rnb), rna * rnb, tw.zero());
      sqrt_delta_ = imag(-rnd);
      phi_ = real_mat(tw.one(), tw.zero(), tw.zero(), tw.one());
      break;
    }
    case Shape::None:
      break;
  }
}

SplitMatrix SplitContext::image(const QuatElement& x) const {
  const QuaternionAlgebra& A = ctx_->oracle_algebra();
  A.require_element(x);
  const Tower& tw = *tower_;
  SplitMatrix acc;
  for (auto& e : acc.e) e = ComplexTowerElement::real(tw.zero(), tw);
  for (size_t s = 0; s < 4; ++s) {
    if (x.c[s].is_zero()) continue;
    acc = add_matrix(acc, scale_matrix(basis_image_[s],
                                       ComplexTowerElement::real(tw.embed(x.c[s]), tw)));
  }
  if (A.dim() == 8) {
    for (size_t s = 0; s < 4; ++s) {
      if (x.c[4 + s].is_zero()) continue;
      ComplexTowerElement coeff =
          sqrt_delta_ * ComplexTowerElement::real(tw.embed(x.c[4 + s]), tw);
      acc = add_matrix(acc, scale_matrix(basis_image_[s], coeff));
    }
  }
  return acc;
}

SplitMatrix SplitContext::mul(const SplitMatrix& x, const SplitMatrix& y) const {
  SplitMatrix r;
  for (size_t i = 0; i < 2; ++i)
    for (size_t j = 0; j < 2; ++j)
      r.at(i, j) = x.at(i, 0) * y.at(0, j) + x.at(i, 1) * y.at(1, j);
  return r;
}

SplitMatrix SplitContext::twisted_conjugate_transpose(const SplitMatrix& m) const {
  SplitMatrix t;
  t.at(0, 0) = m.at(0, 0).conjugated();
  t.at(0, 1) = m.at(1, 0).conjugated();
  t.at(1, 0) = m.at(0, 1).conjugated();
  t.at(1, 1) = m.at(1, 1).conjugated();
  return mul(mul(phi_, t), phi_);  // both our Phi are self-inverse
}

QuatElement SplitContext::table_involution(const QuatElement& x) const {
  const QuaternionAlgebra& A = ctx_->oracle_algebra();
  A.require_element(x);
  QuatElement r = x;
  using Shape = Context::OracleShape;
  switch (shape_) {
    case Shape::Shape2i:
      r.c[3] = -r.c[3];
      return r;
    case Shape::Shape2ii:
      r.c[1] = -r.c[1];
      return r;
    case Shape::Shape3i:
    case Shape::Shape3ii:
    case Shape::Shape3iii:
      for (size_t s : {1, 2, 3, 4}) r.c[s] = -r.c[s];
      return r;
    case Shape::None:
      break;
  }
  fail(Errc::Internal, "no table involution");
}

int SplitContext::case1_signature(const QuatElement& d) const {
  const QuaternionAlgebra& A = ctx_->algebra();
  // Gram of (x, y) -> Trd(conj(x) d y) on the standard basis; the Sylvester
  // count recovers four times the rank-one signature.
  SmallMatrix g(4, 4, A.field());
  for (size_t s = 0; s < 4; ++s) {
    QuatElement left = A.mul(A.conjugate(A.basis(s)), d);
    for (size_t t = 0; t < 4; ++t) g.at(s, t) = A.mul(left, A.basis(t)).c[0];
  }
  auto [plus, minus] = sylvester_counts(g, ctx_->ordering());
  if ((plus - minus) % 2 != 0) fail(Errc::Internal, "odd Sylvester difference");
  return ctx_->orientation().s * (plus - minus) / 2;
}

int SplitContext::signature(const QuatElement& d) const {
  const Context& ctx = *ctx_;
  if (ctx.tag() == CaseTag::Split) fail(Errc::Unsupported, "split algebra: use psd membership");
  if (ctx.nil()) fail(Errc::NilOrdering, "signature at a nil ordering");
  if (!ctx.is_symmetric(d)) fail(Errc::NotSymmetric, "element is not fixed by the involution");
  if (shape_ == Context::OracleShape::None) {
    if (ctx.algebra().reduced_norm(d).is_zero())
      fail(Errc::Singular, "element is not invertible");
    return case1_signature(d);
  }
  const Tower& tw = *tower_;
  SplitMatrix m = mul(phi_, image(ctx.to_oracle(d)));
  SplitMatrix ct;  // plain conjugate transpose
  ct.at(0, 0) = m.at(0, 0).conjugated();
  ct.at(0, 1) = m.at(1, 0).conjugated();
  ct.at(1, 0) = m.at(0, 1).conjugated();
  ct.at(1, 1) = m.at(1, 1).conjugated();
  if (!(m == ct)) fail(Errc::Internal, "split image of a symmetric element is not hermitian");
  ComplexTowerElement trace = m.at(0, 0) + m.at(1, 1);
  ComplexTowerElement det = m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
  if (!trace.is_real() || !det.is_real())
    fail(Errc::Internal, "trace or determinant has a nonzero imaginary part");
  int sdet = tw.sign(det.re);
  if (sdet == 0) fail(Errc::Singular, "split image is singular");
  if (sdet < 0) return 0;
  int st = tw.sign(trace.re);
  if (st == 0) fail(Errc::Internal, "definite matrix with zero trace");
  return ctx.orientation().s * 2 * st;
}

int signature_oracle(const Context& ctx, const QuatElement& d) {
  SplitContext sc(ctx);
  return sc.signature(d);
}

TableReport check_splitting_tables(const Context& ctx, uint64_t seed, int trials) {
  SplitContext sc(ctx);
  if (!sc.has_table()) fail(Errc::Unsupported, "no splitting table for this case");
  TableReport rep;
  rep.trials = trials;
  Sampler smp(seed);
  const QuaternionAlgebra& A = sc.table_algebra();

  SplitMatrix one = sc.image(A.one());
  const Tower& tw = sc.tower();
  bool id_ok = one.at(0, 0) == ComplexTowerElement::real(tw.one(), tw) &&
               one.at(1, 1) == ComplexTowerElement::real(tw.one(), tw) &&
               one.at(0, 1).is_zero() && one.at(1, 0).is_zero();
  if (!id_ok) rep.failures.push_back("image of 1 is not the identity matrix");

  for (int t = 0; t < trials; ++t) {
    QuatElement x = smp.element(A);
    QuatElement y = smp.element(A);
    if (!(sc.image(A.mul(x, y)) == sc.mul(sc.image(x), sc.image(y))))
      rep.failures.push_back("multiplicativity failed at trial " + std::to_string(t));
    if (!(sc.image(sc.table_involution(x)) == sc.twisted_conjugate_transpose(sc.image(x))))
      rep.failures.push_back("involution correspondence failed at trial " + std::to_string(t));
  }
  return rep;
}

}  // namespace quatcone
