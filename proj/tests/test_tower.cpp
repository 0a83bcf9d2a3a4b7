#include <doctest.h>

#include <random>

#include "quatcone/tower.hpp"

using namespace quatcone;

namespace {

TowerElement random_elem(std::mt19937_64& rng, const Tower& tw) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 4);
  std::vector<FieldElement> c;
  for (size_t i = 0; i < tw.dim(); ++i)
    c.push_back(FieldElement(tw.field(), mpq_class(num(rng), den(rng))));
  return tw.from_coords(std::move(c));
}

}  // namespace

TEST_CASE("generator squares and product slots") {
  Tower tw(Ordering::rationals());
  size_t h2 = tw.add_radicand(FieldElement::integer(2));
  size_t h6 = tw.add_radicand(FieldElement::integer(6));
  TowerElement r2 = tw.sqrt_of(h2), r6 = tw.sqrt_of(h6);
  CHECK(r2 * r2 == tw.embed(FieldElement::integer(2)));
  // sqrt(2) * sqrt(6) sits on the product basis slot (numerically 2 sqrt 3)
  TowerElement prod = r2 * r6;
  CHECK(prod.coord(3) == FieldElement::integer(1));
  CHECK(prod.coord(0).is_zero());
  CHECK(tw.sign(prod) == 1);
}

TEST_CASE("dependent radicands are aliased, not duplicated") {
  Tower tw(Ordering::rationals());
  size_t h2 = tw.add_radicand(FieldElement::integer(2));
  size_t h8 = tw.add_radicand(FieldElement::integer(8));
  CHECK(tw.generator_count() == 1);
  // sqrt(8) = 2 sqrt(2)
  CHECK(tw.sqrt_of(h8) == tw.sqrt_of(h2).scaled(FieldElement::integer(2)));
  // sqrt(9) = 3 lands in the base slot
  size_t h9 = tw.add_radicand(FieldElement::integer(9));
  CHECK(tw.sqrt_of(h9) == tw.embed(FieldElement::integer(3)));
  // sqrt(2)*sqrt(3) - sqrt(6) = 0 exactly
  Tower tw2(Ordering::rationals());
  TowerElement a = tw2.sqrt_of(tw2.add_radicand(FieldElement::integer(2)));
  TowerElement b = tw2.sqrt_of(tw2.add_radicand(FieldElement::integer(3)));
  TowerElement c = tw2.sqrt_of(tw2.add_radicand(FieldElement::integer(6)));
  CHECK((a * b - c).is_zero());
  CHECK(tw2.generator_count() == 2);
}

TEST_CASE("inverse by conjugation-norm descent") {
  Tower tw(Ordering::rationals());
  size_t h2 = tw.add_radicand(FieldElement::integer(2));
  TowerElement x = tw.one() + tw.sqrt_of(h2);  // 1 + sqrt(2)
  TowerElement inv = x.inverse();
  CHECK(inv == -tw.one() + tw.sqrt_of(h2));  // (1+sqrt2)(-1+sqrt2) = 1
  CHECK(x * inv == tw.one());
  CHECK_THROWS_AS(tw.zero().inverse(), Error);

  std::mt19937_64 rng(3);
  tw.add_radicand(FieldElement::integer(3));
  for (int t = 0; t < 40; ++t) {
    TowerElement y = random_elem(rng, tw);
    if (y.is_zero()) continue;
    CHECK(y * y.inverse() == tw.one());
  }
}

TEST_CASE("signs in the tower") {
  Tower tw(Ordering::rationals());
  TowerElement r2 = tw.sqrt_of(tw.add_radicand(FieldElement::integer(2)));
  TowerElement r3 = tw.sqrt_of(tw.add_radicand(FieldElement::integer(3)));
  // sqrt(2) + sqrt(3) - 3 > 0
  TowerElement x = r2 + r3 - tw.embed(FieldElement::integer(3));
  CHECK(tw.sign(x) == 1);
  CHECK(tw.sign(-x) == -1);
  CHECK(tw.sign(tw.zero()) == 0);
  CHECK(tw.sign(-r2) == -1);
  // mixed signs force interval refinement: sqrt(2) - 3/2 + sqrt(3) - 3/2 < 0 ... not quite;
  // use 10 sqrt(2) - 14 - sqrt(3) + 3 = 10 sqrt(2) - 11 - sqrt(3): 14.142 - 11 - 1.732 > 0
  TowerElement y = r2.scaled(FieldElement::integer(10)) - tw.embed(FieldElement::integer(11)) - r3;
  CHECK(tw.sign(y) == 1);

  // base-field agreement
  FieldElement half = FieldElement::fraction(-1, 2);
  CHECK(tw.sign(tw.embed(half)) == sign_at(half, tw.ordering()));
}

TEST_CASE("conjugation maps are ring homomorphisms") {
  Tower tw(Ordering::rationals());
  tw.add_radicand(FieldElement::integer(2));
  tw.add_radicand(FieldElement::integer(5));
  std::mt19937_64 rng(17);
  for (int t = 0; t < 60; ++t) {
    TowerElement x = random_elem(rng, tw), y = random_elem(rng, tw);
    for (size_t g = 0; g < tw.generator_count(); ++g) {
      CHECK((x + y).conjugated(g) == x.conjugated(g) + y.conjugated(g));
      CHECK((x * y).conjugated(g) == x.conjugated(g) * y.conjugated(g));
    }
  }
}

TEST_CASE("quadratic base field towers") {
  FieldDesc f2 = FieldDesc::quadratic(2);
  Ordering pos = Ordering::of(f2, Embedding::PositiveRoot);
  Tower tw(pos);
  // adjoin sqrt(1 + sqrt(2)), positive at the chosen embedding
  FieldElement s(f2, 1, 1);
  size_t h = tw.add_radicand(s);
  TowerElement r = tw.sqrt_of(h);
  CHECK(r * r == tw.embed(s));
  CHECK(tw.sign(r) == 1);
  // 2 is a square in Q(sqrt 2): sqrt(2) aliases to the base slot
  size_t h2 = tw.add_radicand(FieldElement::integer(2, f2));
  CHECK(tw.generator_count() == 1);
  TowerElement rt2 = tw.sqrt_of(h2);
  CHECK(rt2 * rt2 == tw.embed(FieldElement::integer(2, f2)));
  CHECK(tw.sign(rt2) == 1);
  // negative radicands are rejected
  CHECK_THROWS_AS(tw.add_radicand(FieldElement::integer(-3, f2)), Error);
}

TEST_CASE("complex pairs keep the imaginary slot out of sign queries") {
  Tower tw(Ordering::rationals());
  TowerElement r2 = tw.sqrt_of(tw.add_radicand(FieldElement::integer(2)));
  ComplexTowerElement i = ComplexTowerElement::imaginary(tw.one(), tw);
  CHECK((i * i) == ComplexTowerElement::real(-tw.one(), tw));
  ComplexTowerElement z = ComplexTowerElement::real(r2, tw) + i;
  CHECK(z.conjugated() * z == ComplexTowerElement::real(tw.embed(FieldElement::integer(3)), tw));
  CHECK_FALSE(z.is_real());
}
