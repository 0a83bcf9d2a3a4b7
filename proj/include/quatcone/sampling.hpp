#pragma once

#include <cstdint>
#include <random>

#include "quatcone/signature.hpp"

namespace quatcone {

// Deterministic sample source for property checks and the self test.
class Sampler {
 public:
  explicit Sampler(uint64_t seed) : rng_(seed) {}

  long uniform(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng_);
  }
  mpq_class rational(long max_num = 12, long max_den = 5) {
    return mpq_class(uniform(-max_num, max_num), uniform(1, max_den));
  }
  FieldElement field_element(const FieldDesc& f, long max_num = 12) {
    if (f.kind == FieldKind::Rational) return FieldElement(f, rational(max_num));
    return FieldElement(f, rational(max_num), rational(max_num));
  }
  FieldElement nonzero_field_element(const FieldDesc& f, long max_num = 12) {
    for (;;) {
      FieldElement x = field_element(f, max_num);
      if (!x.is_zero()) return x;
    }
  }
  FieldElement positive_field_element(const Ordering& P, long max_num = 12) {
    for (;;) {
      FieldElement x = field_element(P.field, max_num);
      if (sign_at(x, P) > 0) return x;
    }
  }
  QuatElement element(const QuaternionAlgebra& A, long max_num = 8) {
    QuatElement x = A.zero();
    for (auto& c : x.c) c = field_element(A.field(), max_num);
    return x;
  }
  QuatElement symmetric_element(const Context& ctx, long max_num = 8) {
    const QuaternionAlgebra& A = ctx.algebra();
    QuatElement x = A.zero();
    for (const auto& e : ctx.sym_basis())
      x = A.add(x, A.scale(field_element(A.field(), max_num), e));
    return x;
  }
  QuatElement invertible_symmetric(const Context& ctx, long max_num = 8) {
    for (;;) {
      QuatElement x = symmetric_element(ctx, max_num);
      if (ctx.algebra().is_invertible(x)) return x;
    }
  }
  // An invertible symmetric element with signature +2.
  QuatElement cone_element(const Context& ctx, long max_num = 8) {
    for (;;) {
      QuatElement x = invertible_symmetric(ctx, max_num);
      int s = ctx.signature(x);
      if (s == 2) return x;
      if (s == -2) return ctx.algebra().neg(x);
    }
  }
  std::mt19937_64& raw() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace quatcone
