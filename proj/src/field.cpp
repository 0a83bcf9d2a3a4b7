#include "quatcone/field.hpp"

namespace quatcone {

namespace {

void require_same_field(const FieldDesc& a, const FieldDesc& b) {
  if (!(a == b)) fail(Errc::FieldMismatch, "operands belong to different fields");
}

// Is L <= B*sqrt(m) for integers L, B (m > 1 square-free)?  Equality is
// impossible unless both sides vanish, since sqrt(m) is irrational.
bool int_le_root(const mpz_class& L, const mpz_class& B, const mpz_class& m) {
  if (sgn(B) >= 0) {
    if (sgn(L) <= 0) return true;
    return L * L <= B * B * m;
  }
  if (sgn(L) > 0) return false;
  return L * L >= B * B * m;
}

}  // namespace

long square_free_part(long n) {
  if (n <= 0) fail(Errc::Parse, "square-free part requires a positive integer");
  mpz_class rem(n);
  mpz_class s = 1;
  auto strip = [&](unsigned long d) {
    int e = 0;
    while (mpz_divisible_ui_p(rem.get_mpz_t(), d)) {
      mpz_divexact_ui(rem.get_mpz_t(), rem.get_mpz_t(), d);
      ++e;
    }
    if (e & 1) s *= static_cast<long>(d);
  };
  strip(2);
  // Bound chosen so a 63-bit cofactor with no factor below it is 1, prime,
  // a prime square, or a product of two distinct primes.
  constexpr unsigned long kBound = 3'000'000;
  for (unsigned long d = 3; d <= kBound; d += 2) {
    if (mpz_class(d) * d > rem) break;
    strip(d);
  }
  if (rem > 1) {
    if (!mpz_perfect_square_p(rem.get_mpz_t())) s *= rem;
  }
  return static_cast<long>(s.get_si());
}

FieldDesc FieldDesc::quadratic(long m) {
  if (m <= 1) fail(Errc::Parse, "quadratic radicand must exceed 1");
  long s = square_free_part(m);
  if (s <= 1) fail(Errc::Parse, "quadratic radicand is a perfect square");
  return {FieldKind::Quadratic, s};
}

std::string FieldDesc::str() const {
  if (kind == FieldKind::Rational) return "Q";
  return "Q(sqrt(" + std::to_string(m) + "))";
}

Ordering Ordering::of(const FieldDesc& f, Embedding e) {
  if (f.kind == FieldKind::Rational) {
    if (e != Embedding::Unique) fail(Errc::Parse, "the rationals have a unique ordering");
    return {f, Embedding::Unique};
  }
  if (e == Embedding::Unique) fail(Errc::Parse, "quadratic field ordering needs a root choice");
  return {f, e};
}

Ordering Ordering::conjugate() const {
  if (field.kind == FieldKind::Rational) return *this;
  return {field, embedding == Embedding::PositiveRoot ? Embedding::NegativeRoot
                                                      : Embedding::PositiveRoot};
}

FieldElement::FieldElement(const FieldDesc& f, mpq_class p, mpq_class q)
    : field_(f), p_(std::move(p)), q_(std::move(q)) {
  p_.canonicalize();
  q_.canonicalize();
  if (field_.kind == FieldKind::Rational && sgn(q_) != 0)
    fail(Errc::FieldMismatch, "rational element with nonzero irrational part");
}

FieldElement FieldElement::sqrt_generator(const FieldDesc& f) {
  if (f.kind != FieldKind::Quadratic) fail(Errc::FieldMismatch, "sqrt generator needs a quadratic field");
  return FieldElement(f, 0, 1);
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  require_same_field(field_, o.field_);
  return FieldElement(field_, p_ + o.p_, q_ + o.q_);
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  require_same_field(field_, o.field_);
  return FieldElement(field_, p_ - o.p_, q_ - o.q_);
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  require_same_field(field_, o.field_);
  if (field_.kind == FieldKind::Rational) return FieldElement(field_, p_ * o.p_);
  mpq_class m(field_.m);
  return FieldElement(field_, p_ * o.p_ + q_ * o.q_ * m, p_ * o.q_ + q_ * o.p_);
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) fail(Errc::DivisionByZero, "inverse of zero field element");
  if (field_.kind == FieldKind::Rational) return FieldElement(field_, 1 / p_);
  mpq_class norm = p_ * p_ - q_ * q_ * mpq_class(field_.m);
  // norm = 0 would force sqrt(m) rational; m is square-free > 1.
  return FieldElement(field_, p_ / norm, -q_ / norm);
}

std::string FieldElement::str() const {
  if (field_.kind == FieldKind::Rational) return p_.get_str();
  return p_.get_str() + (sgn(q_) < 0 ? "" : "+") + q_.get_str() + "*sqrt(" +
         std::to_string(field_.m) + ")";
}

int sign_at(const FieldElement& x, const Ordering& P) {
  require_same_field(x.field(), P.field);
  int sp = sgn(x.p());
  if (x.field().kind == FieldKind::Rational) return sp;
  mpq_class qe = P.embedding == Embedding::NegativeRoot ? mpq_class(-x.q()) : x.q();
  int sq = sgn(qe);
  if (sq == 0) return sp;
  if (sp == 0) return sq;
  if (sp == sq) return sp;
  // Opposite signs: decided by p^2 vs q^2 m; equality would make sqrt(m) rational.
  mpq_class lhs = x.p() * x.p();
  mpq_class rhs = qe * qe * mpq_class(x.field().m);
  int c = cmp(lhs, rhs);
  if (c == 0) fail(Errc::Internal, "p^2 = q^2 m with square-free m");
  return c > 0 ? sp : sq;
}

Cmp cmp_at(const FieldElement& x, const FieldElement& y, const Ordering& P) {
  int s = sign_at(y - x, P);
  return s > 0 ? Cmp::LT : (s == 0 ? Cmp::EQ : Cmp::GT);
}

mpz_class exact_floor_scaled(const FieldElement& x, const Ordering& P, long k) {
  require_same_field(x.field(), P.field);
  if (x.field().kind == FieldKind::Rational) {
    mpz_class scaled;
    mpz_mul_2exp(scaled.get_mpz_t(), x.p().get_num().get_mpz_t(), static_cast<unsigned long>(k));
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), scaled.get_mpz_t(), x.p().get_den().get_mpz_t());
    return r;
  }
  // value * 2^k = (A + B*sqrt(m)) / D with integers A, B and D > 0
  mpq_class qe = P.embedding == Embedding::NegativeRoot ? mpq_class(-x.q()) : x.q();
  mpz_class D = x.p().get_den() * qe.get_den();
  mpz_class A = x.p().get_num() * qe.get_den();
  mpz_class B = qe.get_num() * x.p().get_den();
  mpz_mul_2exp(A.get_mpz_t(), A.get_mpz_t(), static_cast<unsigned long>(k));
  mpz_mul_2exp(B.get_mpz_t(), B.get_mpz_t(), static_cast<unsigned long>(k));
  mpz_class m(x.field().m);

  // Integer estimate of A + B*sqrt(m), then local correction with exact tests.
  mpz_class s;
  mpz_sqrt(s.get_mpz_t(), mpz_class(B * B * m).get_mpz_t());
  mpz_class est = sgn(B) >= 0 ? mpz_class(A + s) : mpz_class(A - s - 1);
  mpz_class n;
  mpz_fdiv_q(n.get_mpz_t(), est.get_mpz_t(), D.get_mpz_t());
  n -= 1;
  // n is now a strict lower estimate; bump while (n+1)*D <= A + B*sqrt(m).
  while (int_le_root((n + 1) * D - A, B, m)) n += 1;
  return n;
}

DyadicInterval approx(const FieldElement& x, const Ordering& P, long bits) {
  if (bits < 1) fail(Errc::Parse, "approx needs at least one bit");
  mpz_class n = exact_floor_scaled(x, P, bits);
  // Exactness test: x == n * 2^-bits?
  mpq_class grid(n);
  grid /= mpq_class(mpz_class(1) << static_cast<unsigned long>(bits));
  FieldElement g(x.field(), grid, 0);
  if (x == g) return DyadicInterval::point(n, -bits);
  return {n, n + 1, -bits};
}

namespace {

std::optional<mpq_class> rational_sqrt(const mpq_class& r) {
  if (sgn(r) < 0) return std::nullopt;
  if (!mpz_perfect_square_p(r.get_num().get_mpz_t())) return std::nullopt;
  if (!mpz_perfect_square_p(r.get_den().get_mpz_t())) return std::nullopt;
  mpz_class a, b;
  mpz_sqrt(a.get_mpz_t(), r.get_num().get_mpz_t());
  mpz_sqrt(b.get_mpz_t(), r.get_den().get_mpz_t());
  return mpq_class(a) / mpq_class(b);
}

}  // namespace

std::optional<FieldElement> exact_sqrt(const FieldElement& x) {
  const FieldDesc& f = x.field();
  if (f.kind == FieldKind::Rational) {
    auto r = rational_sqrt(x.p());
    if (!r) return std::nullopt;
    return FieldElement(f, *r);
  }
  mpq_class m(f.m);
  if (sgn(x.q()) == 0) {
    if (auto r = rational_sqrt(x.p())) return FieldElement(f, *r, 0);
    if (auto r = rational_sqrt(x.p() / m)) return FieldElement(f, 0, *r);
    return std::nullopt;
  }
  // (c + d sqrt m)^2 = x needs p^2 - q^2 m to be a rational square e^2,
  // and then c^2 = (p +- e)/2 rational square, d = q / (2c).
  mpq_class norm = x.p() * x.p() - x.q() * x.q() * m;
  auto e = rational_sqrt(norm);
  if (!e) return std::nullopt;
  for (const mpq_class& cand : {mpq_class((x.p() + *e) / 2), mpq_class((x.p() - *e) / 2)}) {
    if (auto c = rational_sqrt(cand)) {
      if (sgn(*c) == 0) continue;
      mpq_class d = x.q() / (2 * *c);
      return FieldElement(f, *c, d);
    }
  }
  return std::nullopt;
}

bool is_square(const FieldElement& x) { return exact_sqrt(x).has_value(); }

}  // namespace quatcone
