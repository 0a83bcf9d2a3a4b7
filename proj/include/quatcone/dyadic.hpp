#pragma once

#include <gmpxx.h>

#include <string>

namespace quatcone {

// Closed interval [lo * 2^exp, hi * 2^exp] with integer mantissas.
// All operations are outward-rounded, so the interval always contains the
// exact value it encloses.
struct DyadicInterval {
  mpz_class lo;
  mpz_class hi;
  long exp = 0;

  static DyadicInterval point(const mpz_class& mant, long exp2) {
    return {mant, mant, exp2};
  }
  // Exact enclosure of a rational at scale 2^-bits (width <= 2^-bits).
  static DyadicInterval of_rational(const mpq_class& x, long bits);

  bool is_point() const { return lo == hi; }
  bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
  // Sign if the interval excludes zero, otherwise 0 for the undecided case
  // (a genuine zero is the point interval [0,0], also reported as 0).
  int sign() const {
    if (sgn(lo) > 0) return 1;
    if (sgn(hi) < 0) return -1;
    return 0;
  }
  bool width_at_most(long bits) const;  // hi - lo scaled <= 2^-bits
  std::string str() const;

  DyadicInterval operator-() const { return {-hi, -lo, exp}; }
  DyadicInterval operator+(const DyadicInterval& o) const;
  DyadicInterval operator-(const DyadicInterval& o) const { return *this + (-o); }
  DyadicInterval operator*(const DyadicInterval& o) const;

  // Enclosure of sqrt at scale 2^-bits; requires lo >= 0.
  DyadicInterval sqrt_enclose(long bits) const;
};

// floor(m * 2^k) for integer mantissa m at exponent e: shift with floor rounding.
mpz_class shift_floor(const mpz_class& m, long k);
mpz_class shift_ceil(const mpz_class& m, long k);

}  // namespace quatcone
