#include "quatcone/quaternion.hpp"

#include <algorithm>

namespace quatcone {

QuaternionAlgebra QuaternionAlgebra::first_kind(FieldElement a, FieldElement b,
                                                std::optional<bool> declared_division) {
  if (a.is_zero() || b.is_zero()) fail(Errc::Parse, "quaternion parameters must be nonzero");
  if (!(a.field() == b.field())) fail(Errc::FieldMismatch, "a and b from different fields");
  QuaternionAlgebra A;
  A.field_ = a.field();
  A.a_ = std::move(a);
  A.b_ = std::move(b);
  A.center_ = CenterKind::BaseField;
  A.delta_ = FieldElement(A.field_);
  A.declared_division_ = declared_division;
  return A;
}

QuaternionAlgebra QuaternionAlgebra::unitary_center(FieldElement a, FieldElement b,
                                                    FieldElement delta,
                                                    std::optional<bool> declared_division) {
  QuaternionAlgebra A = first_kind(std::move(a), std::move(b), declared_division);
  if (!(delta.field() == A.field_)) fail(Errc::FieldMismatch, "delta from a different field");
  if (delta.is_zero() || is_square(delta))
    fail(Errc::Parse, "delta must be a nonzero non-square of F");
  A.center_ = CenterKind::QuadraticExtension;
  A.delta_ = std::move(delta);
  return A;
}

QuatElement QuaternionAlgebra::zero() const {
  return {std::vector<FieldElement>(dim(), FieldElement(field_))};
}

QuatElement QuaternionAlgebra::one() const { return basis(0); }

QuatElement QuaternionAlgebra::basis(size_t index) const {
  QuatElement x = zero();
  x.c.at(index) = FieldElement::integer(1, field_);
  return x;
}

QuatElement QuaternionAlgebra::from_coords(std::vector<FieldElement> coords) const {
  if (coords.size() != dim()) fail(Errc::AlgebraMismatch, "coordinate count mismatch");
  for (const auto& x : coords)
    if (!(x.field() == field_)) fail(Errc::FieldMismatch, "coordinate from a different field");
  return {std::move(coords)};
}

QuatElement QuaternionAlgebra::scalar(const FieldElement& x) const {
  QuatElement r = zero();
  r.c[0] = x;
  return r;
}

void QuaternionAlgebra::require_element(const QuatElement& x) const {
  if (x.c.size() != dim()) fail(Errc::AlgebraMismatch, "element does not belong to this algebra");
}

QuatElement QuaternionAlgebra::add(const QuatElement& x, const QuatElement& y) const {
  require_element(x);
  require_element(y);
  QuatElement r = x;
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] += y.c[i];
  return r;
}

QuatElement QuaternionAlgebra::sub(const QuatElement& x, const QuatElement& y) const {
  return add(x, neg(y));
}

QuatElement QuaternionAlgebra::neg(const QuatElement& x) const {
  require_element(x);
  QuatElement r = x;
  for (auto& v : r.c) v = -v;
  return r;
}

QuatElement QuaternionAlgebra::scale(const FieldElement& s, const QuatElement& x) const {
  require_element(x);
  QuatElement r = x;
  for (auto& v : r.c) v *= s;
  return r;
}

namespace {

// Product in (a,b) over F on the basis (1, i, j, k).
std::vector<FieldElement> mul4(const FieldElement& a, const FieldElement& b,
                               const std::vector<FieldElement>& x,
                               const std::vector<FieldElement>& y) {
  const FieldElement ab = a * b;
  std::vector<FieldElement> z(4, FieldElement(a.field()));
  z[0] = x[0] * y[0] + a * x[1] * y[1] + b * x[2] * y[2] - ab * x[3] * y[3];
  z[1] = x[0] * y[1] + x[1] * y[0] - b * x[2] * y[3] + b * x[3] * y[2];
  z[2] = x[0] * y[2] + x[2] * y[0] + a * x[1] * y[3] - a * x[3] * y[1];
  z[3] = x[0] * y[3] + x[3] * y[0] + x[1] * y[2] - x[2] * y[1];
  return z;
}

}  // namespace

QuatElement QuaternionAlgebra::mul(const QuatElement& x, const QuatElement& y) const {
  require_element(x);
  require_element(y);
  if (center_ == CenterKind::BaseField) return {mul4(a_, b_, x.c, y.c)};
  // (u + v s)(u' + v' s) = (uu' + delta vv') + (uv' + vu') s, s = sqrt(delta)
  std::vector<FieldElement> u(x.c.begin(), x.c.begin() + 4), v(x.c.begin() + 4, x.c.end());
  std::vector<FieldElement> up(y.c.begin(), y.c.begin() + 4), vp(y.c.begin() + 4, y.c.end());
  auto uu = mul4(a_, b_, u, up);
  auto vv = mul4(a_, b_, v, vp);
  auto uv = mul4(a_, b_, u, vp);
  auto vu = mul4(a_, b_, v, up);
  std::vector<FieldElement> z(8, FieldElement(field_));
  for (size_t i = 0; i < 4; ++i) {
    z[i] = uu[i] + delta_ * vv[i];
    z[4 + i] = uv[i] + vu[i];
  }
  return {std::move(z)};
}

QuatElement QuaternionAlgebra::conjugate(const QuatElement& x) const {
  require_element(x);
  QuatElement r = x;
  r.c[1] = -r.c[1];
  r.c[2] = -r.c[2];
  r.c[3] = -r.c[3];
  if (center_ == CenterKind::QuadraticExtension)
    for (size_t i = 5; i < 8; ++i) r.c[i] = -r.c[i];
  return r;
}

CenterValue QuaternionAlgebra::reduced_norm(const QuatElement& x) const {
  require_element(x);
  const FieldElement ab = a_ * b_;
  if (center_ == CenterKind::BaseField) {
    FieldElement n =
        x.c[0] * x.c[0] - a_ * x.c[1] * x.c[1] - b_ * x.c[2] * x.c[2] + ab * x.c[3] * x.c[3];
    return {n, FieldElement(field_)};
  }
  // K-coordinates c_i = u_i + v_i sqrt(delta); norm over K.
  FieldElement s(field_), t(field_);
  auto acc = [&](size_t i, const FieldElement& w) {
    // w * c_i^2 with c_i = (u, v): contributes w(u^2 + delta v^2) + 2w u v sqrt(delta)
    const FieldElement& u = x.c[i];
    const FieldElement& v = x.c[4 + i];
    s += w * (u * u + delta_ * v * v);
    t += w * FieldElement::integer(2, field_) * u * v;
  };
  acc(0, FieldElement::integer(1, field_));
  acc(1, -a_);
  acc(2, -b_);
  acc(3, ab);
  return {s, t};
}

QuatElement QuaternionAlgebra::inverse(const QuatElement& x) const {
  CenterValue n = reduced_norm(x);
  if (n.is_zero()) fail(Errc::Singular, "inverse of a non-invertible element");
  QuatElement g = conjugate(x);
  if (center_ == CenterKind::BaseField) return scale(n.s.inverse(), g);
  // 1/(s + t sqrt(delta)) = (s - t sqrt(delta)) / (s^2 - t^2 delta)
  FieldElement den = n.s * n.s - delta_ * n.t * n.t;
  if (den.is_zero()) fail(Errc::Internal, "norm of reduced norm vanished for invertible input");
  FieldElement rs = n.s / den, rt = -(n.t / den);
  // multiply g by rs + rt*sqrt(delta)
  std::vector<FieldElement> z(8, FieldElement(field_));
  for (size_t i = 0; i < 4; ++i) {
    z[i] = g.c[i] * rs + delta_ * g.c[4 + i] * rt;
    z[4 + i] = g.c[i] * rt + g.c[4 + i] * rs;
  }
  return {std::move(z)};
}

bool QuaternionAlgebra::is_division() const {
  if (declared_division_) return *declared_division_;
  if (field_.kind != FieldKind::Rational || center_ != CenterKind::BaseField)
    return true;  // declared input; default to the division case
  return is_division_over_rationals(a_.p(), b_.p());
}

namespace {

long valuation(const mpq_class& x, const mpz_class& p) {
  mpz_class tmp;
  long vn = static_cast<long>(mpz_remove(tmp.get_mpz_t(), x.get_num().get_mpz_t(), p.get_mpz_t()));
  long vd = static_cast<long>(mpz_remove(tmp.get_mpz_t(), x.get_den().get_mpz_t(), p.get_mpz_t()));
  return vn - vd;
}

// Unit part of x at p (numerator and denominator with all p's removed), as a
// pair of integers.
std::pair<mpz_class, mpz_class> unit_part(const mpq_class& x, const mpz_class& p) {
  mpz_class n, d;
  mpz_remove(n.get_mpz_t(), x.get_num().get_mpz_t(), p.get_mpz_t());
  mpz_remove(d.get_mpz_t(), x.get_den().get_mpz_t(), p.get_mpz_t());
  return {n, d};
}

int legendre_unit(const std::pair<mpz_class, mpz_class>& u, const mpz_class& p) {
  int ln = mpz_legendre(u.first.get_mpz_t(), p.get_mpz_t());
  int ld = mpz_legendre(u.second.get_mpz_t(), p.get_mpz_t());
  return ln * ld;
}

// Class of an odd rational unit mod 8.
long mod8(const std::pair<mpz_class, mpz_class>& u) {
  mpz_class n = u.first % 8, d = u.second % 8;
  if (n < 0) n += 8;
  if (d < 0) d += 8;
  mpz_class c = (n * d) % 8;
  return c.get_si();
}

}  // namespace

int hilbert_symbol(const mpq_class& a, const mpq_class& b, const Place& v) {
  if (sgn(a) == 0 || sgn(b) == 0) fail(Errc::Parse, "Hilbert symbol needs nonzero arguments");
  if (v.infinite) return (sgn(a) < 0 && sgn(b) < 0) ? -1 : 1;
  const mpz_class& p = v.p;
  if (p == 2) {
    long alpha = valuation(a, p), beta = valuation(b, p);
    long uc = mod8(unit_part(a, p)), wc = mod8(unit_part(b, p));
    auto eps = [](long c) { return (c % 4 == 1) ? 0 : 1; };
    auto omega = [](long c) { return (c == 1 || c == 7) ? 0 : 1; };
    long e = eps(uc) * eps(wc) + alpha * omega(wc) + beta * omega(uc);
    return (e % 2 == 0) ? 1 : -1;
  }
  long alpha = valuation(a, p), beta = valuation(b, p);
  auto ua = unit_part(a, p), ub = unit_part(b, p);
  int r = 1;
  if ((alpha & 1) && (beta & 1)) {
    // (-1|p)
    mpz_class m1(-1);
    r *= mpz_legendre(m1.get_mpz_t(), p.get_mpz_t());
  }
  if (beta & 1) r *= legendre_unit(ua, p);
  if (alpha & 1) r *= legendre_unit(ub, p);
  return r;
}

namespace {

void collect_odd_primes(mpz_class n, std::vector<mpz_class>* out) {
  n = abs(n);
  mpz_class tmp;
  mpz_remove(n.get_mpz_t(), n.get_mpz_t(), mpz_class(2).get_mpz_t());
  for (unsigned long d = 3; d <= 1'000'000; d += 2) {
    if (mpz_class(d) * d > n) break;
    if (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
      out->push_back(mpz_class(d));
      mpz_remove(tmp.get_mpz_t(), n.get_mpz_t(), mpz_class(d).get_mpz_t());
      n = tmp;
    }
  }
  if (n > 1) {
    if (mpz_probab_prime_p(n.get_mpz_t(), 40) == 0)
      fail(Errc::Unsupported, "coefficient too large to factor for local symbols");
    out->push_back(n);
  }
}

}  // namespace

std::vector<Place> ramified_candidate_places(const mpq_class& a, const mpq_class& b) {
  std::vector<mpz_class> primes;
  collect_odd_primes(a.get_num(), &primes);
  collect_odd_primes(a.get_den(), &primes);
  collect_odd_primes(b.get_num(), &primes);
  collect_odd_primes(b.get_den(), &primes);
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  std::vector<Place> out;
  out.push_back(Place::infinity());
  out.push_back(Place::prime(2));
  for (auto& p : primes) out.push_back(Place::prime(p));
  return out;
}

bool is_division_over_rationals(const mpq_class& a, const mpq_class& b) {
  for (const Place& v : ramified_candidate_places(a, b))
    if (hilbert_symbol(a, b, v) == -1) return true;
  return false;
}

}  // namespace quatcone
