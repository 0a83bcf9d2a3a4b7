#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "quatcone/dyadic.hpp"
#include "quatcone/errors.hpp"

namespace quatcone {

enum class FieldKind { Rational, Quadratic };

// Returns s where n = s * f^2 with s square-free (requires n > 0).
long square_free_part(long n);

// The base field F: the rationals, or a real quadratic field Q(sqrt(m)).
struct FieldDesc {
  FieldKind kind = FieldKind::Rational;
  long m = 0;  // square-free radicand > 1; unused for the rationals

  static FieldDesc rationals() { return {}; }
  static FieldDesc quadratic(long m);  // reduces m to its square-free part

  bool operator==(const FieldDesc&) const = default;
  std::string str() const;
};

enum class Embedding { Unique, PositiveRoot, NegativeRoot };

// An ordering of F, realized as the choice of real embedding.
struct Ordering {
  FieldDesc field;
  Embedding embedding = Embedding::Unique;

  static Ordering rationals() { return {FieldDesc::rationals(), Embedding::Unique}; }
  static Ordering of(const FieldDesc& f, Embedding e);
  // The other ordering of a quadratic field.
  Ordering conjugate() const;

  bool operator==(const Ordering&) const = default;
};

// Exact element p + q*sqrt(m) of F, with q identically zero over the
// rationals. Canonical GMP rationals make equality a coordinate test.
class FieldElement {
 public:
  FieldElement() = default;  // 0 in Q
  explicit FieldElement(const FieldDesc& f) : field_(f) {}
  FieldElement(const FieldDesc& f, mpq_class p) : field_(f), p_(std::move(p)) {
    p_.canonicalize();
  }
  FieldElement(const FieldDesc& f, mpq_class p, mpq_class q);

  static FieldElement integer(long n, const FieldDesc& f = FieldDesc::rationals()) {
    return FieldElement(f, mpq_class(n));
  }
  static FieldElement fraction(long num, long den, const FieldDesc& f = FieldDesc::rationals()) {
    if (den == 0) fail(Errc::DivisionByZero, "fraction with zero denominator");
    return FieldElement(f, mpq_class(num, den));
  }
  static FieldElement sqrt_generator(const FieldDesc& f);  // 0 + 1*sqrt(m)

  const FieldDesc& field() const { return field_; }
  const mpq_class& p() const { return p_; }
  const mpq_class& q() const { return q_; }
  bool is_zero() const { return sgn(p_) == 0 && sgn(q_) == 0; }
  bool is_rational() const { return sgn(q_) == 0; }

  FieldElement operator-() const { return FieldElement(field_, -p_, -q_); }
  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const { return *this * o.inverse(); }
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

  FieldElement inverse() const;
  // Galois conjugate p - q*sqrt(m) (identity over the rationals).
  FieldElement conjugate() const { return FieldElement(field_, p_, -q_); }

  bool operator==(const FieldElement& o) const {
    return field_ == o.field_ && p_ == o.p_ && q_ == o.q_;
  }
  std::string str() const;

 private:
  FieldDesc field_;
  mpq_class p_ = 0;
  mpq_class q_ = 0;
};

// Sign of x in the real embedding selected by P. Exact case analysis; no
// floating point anywhere.
int sign_at(const FieldElement& x, const Ordering& P);

enum class Cmp { LT, EQ, GT };
Cmp cmp_at(const FieldElement& x, const FieldElement& y, const Ordering& P);

// floor(x * 2^k) under the embedding P, as an exact integer.
mpz_class exact_floor_scaled(const FieldElement& x, const Ordering& P, long k);

// Dyadic enclosure of width <= 2^-bits; nested for increasing bits and
// degenerate exactly when x is a dyadic rational at that scale.
DyadicInterval approx(const FieldElement& x, const Ordering& P, long bits);

// A square root of x in F, if one exists (either root may be returned).
std::optional<FieldElement> exact_sqrt(const FieldElement& x);
bool is_square(const FieldElement& x);

}  // namespace quatcone
