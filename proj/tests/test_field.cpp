#include <doctest.h>

#include <random>

#include "quatcone/field.hpp"

using namespace quatcone;

namespace {

FieldElement fe(long num, long den = 1) {
  return FieldElement::fraction(num, den);
}

FieldElement qe(const FieldDesc& f, long pn, long pd, long qn, long qd) {
  return FieldElement(f, mpq_class(pn, pd), mpq_class(qn, qd));
}

FieldElement random_element(std::mt19937_64& rng, const FieldDesc& f) {
  std::uniform_int_distribution<long> num(-30, 30), den(1, 7);
  if (f.kind == FieldKind::Rational) return FieldElement(f, mpq_class(num(rng), den(rng)));
  return FieldElement(f, mpq_class(num(rng), den(rng)), mpq_class(num(rng), den(rng)));
}

}  // namespace

TEST_CASE("square-free reduction of the radicand") {
  CHECK(square_free_part(8) == 2);
  CHECK(square_free_part(12) == 3);
  CHECK(square_free_part(2) == 2);
  CHECK(square_free_part(49) == 1);
  CHECK(FieldDesc::quadratic(8).m == 2);
  CHECK_THROWS_AS(FieldDesc::quadratic(1), Error);
  CHECK_THROWS_AS(FieldDesc::quadratic(4), Error);
  CHECK_THROWS_AS(FieldDesc::quadratic(-3), Error);
}

TEST_CASE("sign determination") {
  Ordering Q = Ordering::rationals();
  CHECK(sign_at(fe(3, 4), Q) == 1);
  CHECK(sign_at(fe(0), Q) == 0);
  CHECK(sign_at(fe(-7, 2), Q) == -1);

  FieldDesc f2 = FieldDesc::quadratic(2);
  Ordering pos = Ordering::of(f2, Embedding::PositiveRoot);
  Ordering neg = Ordering::of(f2, Embedding::NegativeRoot);
  FieldElement one_minus_root = qe(f2, 1, 1, -1, 1);  // 1 - sqrt(2)
  CHECK(sign_at(one_minus_root, pos) == -1);
  CHECK(sign_at(one_minus_root, neg) == 1);
  // cross-check by approximation: enclosure below zero at 10 bits
  DyadicInterval iv = approx(one_minus_root, pos, 10);
  CHECK(iv.sign() == -1);
  CHECK(iv.width_at_most(10));
}

TEST_CASE("comparisons") {
  Ordering Q = Ordering::rationals();
  CHECK(cmp_at(fe(1, 2), fe(1, 3), Q) == Cmp::GT);
  CHECK(cmp_at(fe(1, 3), fe(1, 3), Q) == Cmp::EQ);
  FieldDesc f2 = FieldDesc::quadratic(2);
  Ordering pos = Ordering::of(f2, Embedding::PositiveRoot);
  CHECK(cmp_at(FieldElement::sqrt_generator(f2), qe(f2, 3, 2, 0, 1), pos) == Cmp::LT);
  CHECK_THROWS_AS(cmp_at(fe(1), FieldElement(f2, 1, 1), Q), Error);
}

TEST_CASE("dyadic enclosures are tight, nested and sign-faithful") {
  Ordering Q = Ordering::rationals();
  DyadicInterval third = approx(fe(1, 3), Q, 4);
  CHECK(third.width_at_most(4));
  CHECK(third.lo == 5);  // floor(16/3)
  CHECK(third.hi == 6);

  FieldDesc f2 = FieldDesc::quadratic(2);
  Ordering pos = Ordering::of(f2, Embedding::PositiveRoot);
  DyadicInterval root = approx(FieldElement::sqrt_generator(f2), pos, 10);
  // sqrt(2) to 10 bits: inside [1.4130, 1.4151]
  mpq_class lo(root.lo), hi(root.hi);
  mpq_class scale = mpq_class(1) / mpq_class(mpz_class(1) << 10);
  CHECK(cmp(lo * scale, mpq_class(14130, 10000)) >= 0);
  CHECK(cmp(hi * scale, mpq_class(14151, 10000)) <= 0);

  DyadicInterval zero = approx(FieldElement(f2), pos, 20);
  CHECK(zero.is_point());
  CHECK(zero.lo == 0);

  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    FieldElement x = random_element(rng, f2);
    DyadicInterval coarse = approx(x, pos, 8);
    DyadicInterval fine = approx(x, pos, 23);
    CHECK(fine.width_at_most(23));
    // nesting: fine inside coarse
    mpq_class cl(coarse.lo), ch(coarse.hi), fl(fine.lo), fh(fine.hi);
    cl /= mpz_class(1) << 8;
    ch /= mpz_class(1) << 8;
    fl /= mpz_class(1) << 23;
    fh /= mpz_class(1) << 23;
    CHECK(cmp(cl, fl) <= 0);
    CHECK(cmp(fh, ch) <= 0);
    int s = sign_at(x, pos);
    if (fine.sign() != 0) CHECK(fine.sign() == s);
  }
}

TEST_CASE("field axioms on random samples") {
  std::mt19937_64 rng(11);
  for (const FieldDesc& f : {FieldDesc::rationals(), FieldDesc::quadratic(5)}) {
    for (int t = 0; t < 300; ++t) {
      FieldElement x = random_element(rng, f), y = random_element(rng, f),
                   z = random_element(rng, f);
      CHECK((x + y) + z == x + (y + z));
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
      CHECK(x + (-x) == FieldElement(f));
      if (!x.is_zero()) CHECK(x * x.inverse() == FieldElement::integer(1, f));
    }
  }
}

TEST_CASE("sign is multiplicative and conjugation swaps orderings") {
  FieldDesc f3 = FieldDesc::quadratic(3);
  Ordering pos = Ordering::of(f3, Embedding::PositiveRoot);
  Ordering neg = pos.conjugate();
  std::mt19937_64 rng(13);
  for (int t = 0; t < 300; ++t) {
    FieldElement x = random_element(rng, f3), y = random_element(rng, f3);
    CHECK(sign_at(x * y, pos) == sign_at(x, pos) * sign_at(y, pos));
    CHECK(sign_at(x, neg) == sign_at(x.conjugate(), pos));
    if (x.is_rational()) CHECK(sign_at(x, pos) == sign_at(x, neg));
  }
}

TEST_CASE("exact square roots in F") {
  CHECK(exact_sqrt(fe(9, 4)).has_value());
  CHECK_FALSE(exact_sqrt(fe(2)).has_value());
  CHECK_FALSE(exact_sqrt(fe(-1)).has_value());

  FieldDesc f2 = FieldDesc::quadratic(2);
  // (1 + sqrt(2))^2 = 3 + 2 sqrt(2)
  FieldElement sq = qe(f2, 3, 1, 2, 1);
  auto r = exact_sqrt(sq);
  REQUIRE(r.has_value());
  CHECK(*r * *r == sq);
  // 2 is a square in Q(sqrt(2)): 2 = (sqrt 2)^2
  auto r2 = exact_sqrt(FieldElement::integer(2, f2));
  REQUIRE(r2.has_value());
  CHECK(*r2 * *r2 == FieldElement::integer(2, f2));
  CHECK_FALSE(exact_sqrt(FieldElement::integer(3, f2)).has_value());
  CHECK_FALSE(exact_sqrt(qe(f2, 1, 1, 1, 1)).has_value());
}
