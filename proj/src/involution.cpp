#include "quatcone/involution.hpp"

namespace quatcone {

const char* involution_kind_name(InvolutionKind k) {
  switch (k) {
    case InvolutionKind::Symplectic: return "symplectic";
    case InvolutionKind::Orthogonal: return "orthogonal";
    case InvolutionKind::Unitary: return "unitary";
  }
  return "unknown";
}

void validate(const QuaternionAlgebra& A, const Involution& inv) {
  switch (inv.kind) {
    case InvolutionKind::Symplectic:
      if (A.center() != CenterKind::BaseField)
        fail(Errc::Parse, "symplectic involution needs centre F");
      return;
    case InvolutionKind::Orthogonal: {
      if (A.center() != CenterKind::BaseField)
        fail(Errc::Parse, "orthogonal involution needs centre F");
      A.require_element(inv.v);
      if (!inv.v.c[0].is_zero()) fail(Errc::Parse, "orthogonal v must be a pure quaternion");
      if (inv.v.is_zero() || A.reduced_norm(inv.v).is_zero())
        fail(Errc::Parse, "orthogonal v must be invertible");
      return;
    }
    case InvolutionKind::Unitary:
      if (A.center() != CenterKind::QuadraticExtension)
        fail(Errc::Parse, "unitary involution needs centre F(sqrt(delta))");
      return;
  }
}

QuatElement apply(const QuaternionAlgebra& A, const Involution& inv, const QuatElement& x) {
  A.require_element(x);
  switch (inv.kind) {
    case InvolutionKind::Symplectic:
      return A.conjugate(x);
    case InvolutionKind::Orthogonal:
      return A.mul(A.mul(inv.v, A.conjugate(x)), A.inverse(inv.v));
    case InvolutionKind::Unitary: {
      // gamma_0 tensor iota: fixes 1x1 and the pure sqrt(delta) slots,
      // negates the pure 1-slots and 1 x sqrt(delta).
      QuatElement r = x;
      for (size_t s : {1, 2, 3, 4}) r.c[s] = -r.c[s];
      return r;
    }
  }
  fail(Errc::Internal, "unreachable involution kind");
}

bool is_symmetric(const QuaternionAlgebra& A, const Involution& inv, const QuatElement& x) {
  return apply(A, inv, x) == x;
}

Classification classify(const QuaternionAlgebra& A, const Involution& inv) {
  validate(A, inv);
  const size_t n = A.dim();
  SmallMatrix m(n, n, A.field());
  for (size_t t = 0; t < n; ++t) {
    QuatElement img = apply(A, inv, A.basis(t));
    for (size_t s = 0; s < n; ++s) {
      m.at(s, t) = img.c[s];
      if (s == t) m.at(s, t) -= FieldElement::integer(1, A.field());
    }
  }
  Classification out{inv.kind, {}};
  for (auto& v : m.kernel_basis()) out.sym_basis.push_back({std::move(v)});
  return out;
}

FieldElement pure_square(const QuaternionAlgebra& A, const QuatElement& x) {
  A.require_element(x);
  if (!x.c[0].is_zero()) fail(Errc::Internal, "pure_square on a non-pure element");
  const FieldElement &a = A.a(), &b = A.b();
  return a * x.c[1] * x.c[1] + b * x.c[2] * x.c[2] - a * b * x.c[3] * x.c[3];
}

namespace {

// Scale a pure coordinate vector to primitive integers with a positive
// leading coordinate, so the choice is reproducible.
void normalize_primitive(std::vector<FieldElement>* coords) {
  mpz_class l = 1, g = 0;
  for (const auto& x : *coords) {
    l = lcm(l, x.p().get_den());
    l = lcm(l, x.q().get_den());
  }
  for (const auto& x : *coords) {
    g = gcd(g, mpz_class(x.p().get_num() * (l / x.p().get_den())));
    g = gcd(g, mpz_class(x.q().get_num() * (l / x.q().get_den())));
  }
  if (g == 0) return;
  mpq_class scale(l, g);
  scale.canonicalize();
  FieldDesc f = (*coords)[0].field();
  for (auto& x : *coords) x = x * FieldElement(f, scale);
  for (auto& x : *coords) {
    if (x.is_zero()) continue;
    bool negative = sgn(x.p()) < 0 || (sgn(x.p()) == 0 && sgn(x.q()) < 0);
    if (negative)
      for (auto& y : *coords) y = -y;
    break;
  }
}

}  // namespace

StandardFrame standardize_orthogonal(const QuaternionAlgebra& A, const QuatElement& v) {
  validate(A, Involution::orthogonal(v));
  const FieldDesc& f = A.field();

  // Already standard when v lies on the k-axis.
  if (v.c[1].is_zero() && v.c[2].is_zero()) {
    SmallMatrix id = SmallMatrix::identity(4, f);
    return {A, id, id};
  }

  // Pure complement: the kernel of w -> B(v, w) for the form diag(a, b, -ab).
  SmallMatrix bil(1, 3, f);
  bil.at(0, 0) = A.a() * v.c[1];
  bil.at(0, 1) = A.b() * v.c[2];
  bil.at(0, 2) = -(A.a() * A.b()) * v.c[3];
  auto kernel = bil.kernel_basis();
  if (kernel.size() != 2) fail(Errc::Internal, "pure complement of v is not 2-dimensional");
  for (auto& k : kernel) normalize_primitive(&k);

  auto as_pure = [&](const std::vector<FieldElement>& p3) {
    QuatElement x = A.zero();
    x.c[1] = p3[0];
    x.c[2] = p3[1];
    x.c[3] = p3[2];
    return x;
  };
  QuatElement w1 = as_pure(kernel[0]), w2 = as_pure(kernel[1]);
  QuatElement w = w1;
  if (pure_square(A, w).is_zero()) {
    w = w2;
    if (pure_square(A, w).is_zero()) w = A.add(w1, w2);
  }
  if (pure_square(A, w).is_zero())
    fail(Errc::Internal, "restricted norm form vanished on the complement of v");

  QuatElement ip = w;
  QuatElement jp = A.mul(v, w);
  QuatElement kp = A.mul(ip, jp);
  FieldElement ap = A.mul(ip, ip).c[0];
  FieldElement bp = A.mul(jp, jp).c[0];

  SmallMatrix from(4, 4, f);
  const QuatElement cols[4] = {A.one(), ip, jp, kp};
  for (size_t c = 0; c < 4; ++c)
    for (size_t r = 0; r < 4; ++r) from.at(r, c) = cols[c].c[r];
  SmallMatrix to = from.inverse();
  QuaternionAlgebra std_alg = QuaternionAlgebra::first_kind(ap, bp, A.is_division());
  return {std_alg, from, to};
}

bool trace_form_positive(const QuaternionAlgebra& A, const Involution& inv, const Ordering& P) {
  validate(A, inv);
  const size_t n = A.dim();
  // Reduced trace down to F is proportional to the 1-coordinate; the
  // positive constant factor does not affect definiteness.
  SmallMatrix g(n, n, A.field());
  for (size_t s = 0; s < n; ++s) {
    QuatElement sig = apply(A, inv, A.basis(s));
    for (size_t t = 0; t < n; ++t) g.at(s, t) = A.mul(sig, A.basis(t)).c[0];
  }
  // Leading principal minors all positive.
  for (size_t k = 1; k <= n; ++k) {
    SmallMatrix lead(k, k, A.field());
    for (size_t r = 0; r < k; ++r)
      for (size_t c = 0; c < k; ++c) lead.at(r, c) = g.at(r, c);
    if (sign_at(lead.det(), P) <= 0) return false;
  }
  return true;
}

}  // namespace quatcone
