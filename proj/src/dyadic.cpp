#include "quatcone/dyadic.hpp"

#include "quatcone/errors.hpp"

namespace quatcone {

mpz_class shift_floor(const mpz_class& m, long k) {
  mpz_class r;
  if (k >= 0) {
    mpz_mul_2exp(r.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(k));
  } else {
    mpz_fdiv_q_2exp(r.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(-k));
  }
  return r;
}

mpz_class shift_ceil(const mpz_class& m, long k) {
  mpz_class r;
  if (k >= 0) {
    mpz_mul_2exp(r.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(k));
  } else {
    mpz_cdiv_q_2exp(r.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(-k));
  }
  return r;
}

DyadicInterval DyadicInterval::of_rational(const mpq_class& x, long bits) {
  // floor/ceil of x * 2^bits
  mpz_class num = x.get_num();
  mpz_class scaled;
  mpz_mul_2exp(scaled.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(bits));
  mpz_class lo, hi;
  mpz_fdiv_q(lo.get_mpz_t(), scaled.get_mpz_t(), x.get_den().get_mpz_t());
  mpz_cdiv_q(hi.get_mpz_t(), scaled.get_mpz_t(), x.get_den().get_mpz_t());
  return {lo, hi, -bits};
}

bool DyadicInterval::width_at_most(long bits) const {
  // (hi - lo) * 2^exp <= 2^-bits  <=>  hi - lo <= 2^(-bits-exp)
  mpz_class w = hi - lo;
  long k = -bits - exp;
  if (k < 0) return w <= 0;
  mpz_class bound = 1;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<unsigned long>(k));
  return w <= bound;
}

std::string DyadicInterval::str() const {
  return "[" + lo.get_str() + ", " + hi.get_str() + "]*2^" + std::to_string(exp);
}

DyadicInterval DyadicInterval::operator+(const DyadicInterval& o) const {
  long e = std::min(exp, o.exp);
  return {shift_floor(lo, exp - e) + shift_floor(o.lo, o.exp - e),
          shift_ceil(hi, exp - e) + shift_ceil(o.hi, o.exp - e), e};
}

DyadicInterval DyadicInterval::operator*(const DyadicInterval& o) const {
  mpz_class a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
  mpz_class mn = a, mx = a;
  for (const mpz_class* v : {&b, &c, &d}) {
    if (*v < mn) mn = *v;
    if (*v > mx) mx = *v;
  }
  return {mn, mx, exp + o.exp};
}

DyadicInterval DyadicInterval::sqrt_enclose(long bits) const {
  if (sgn(lo) < 0) fail(Errc::Internal, "sqrt of interval with negative lower bound");
  // sqrt([lo,hi]*2^exp) at scale 2^-bits: isqrt of mantissas shifted to
  // exponent -2*bits, floor below and ceil above.
  mpz_class l = shift_floor(lo, exp + 2 * bits);
  mpz_class h = shift_ceil(hi, exp + 2 * bits);
  mpz_class rl, rh;
  mpz_sqrt(rl.get_mpz_t(), l.get_mpz_t());
  mpz_sqrt(rh.get_mpz_t(), h.get_mpz_t());
  if (rh * rh < h) rh += 1;
  return {rl, rh, -bits};
}

}  // namespace quatcone
