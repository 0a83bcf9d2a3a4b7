#include <doctest.h>

#include <random>

#include "quatcone/quaternion.hpp"

using namespace quatcone;

namespace {

QuaternionAlgebra alg23() {
  return QuaternionAlgebra::first_kind(FieldElement::integer(2), FieldElement::integer(3));
}

QuatElement random_elem(std::mt19937_64& rng, const QuaternionAlgebra& A) {
  std::uniform_int_distribution<long> num(-8, 8), den(1, 3);
  QuatElement x = A.zero();
  for (auto& c : x.c) c = FieldElement(A.field(), mpq_class(num(rng), den(rng)));
  return x;
}

}  // namespace

TEST_CASE("defining relations") {
  QuaternionAlgebra A = alg23();
  QuatElement i = A.basis(1), j = A.basis(2), k = A.basis(3);
  CHECK(A.mul(i, j) == k);
  CHECK(A.mul(j, i) == A.neg(k));
  CHECK(A.mul(i, i) == A.scalar(FieldElement::integer(2)));
  CHECK(A.mul(j, j) == A.scalar(FieldElement::integer(3)));
  CHECK(A.mul(k, k) == A.scalar(FieldElement::integer(-6)));
  std::mt19937_64 rng(1);
  QuatElement x = random_elem(rng, A);
  CHECK(A.mul(x, A.one()) == x);
}

TEST_CASE("the certificate kernel square") {
  // (1 + i/2 + j/2)^2 = 9/4 + i + j in (2,3)
  QuaternionAlgebra A = alg23();
  QuatElement c = A.from_coords({FieldElement::integer(1), FieldElement::fraction(1, 2),
                                 FieldElement::fraction(1, 2), FieldElement::integer(0)});
  QuatElement sq = A.mul(c, c);
  CHECK(sq == A.from_coords({FieldElement::fraction(9, 4), FieldElement::integer(1),
                             FieldElement::integer(1), FieldElement::integer(0)}));
}

TEST_CASE("conjugation and reduced norm") {
  QuaternionAlgebra A = alg23();
  QuatElement one_plus_i =
      A.add(A.one(), A.basis(1));
  CHECK(A.conjugate(one_plus_i) == A.sub(A.one(), A.basis(1)));
  CHECK(A.reduced_norm(A.one()).s == FieldElement::integer(1));
  CHECK(A.reduced_norm(A.basis(1)).s == FieldElement::integer(-2));
  QuatElement d = A.from_coords({FieldElement::integer(4), FieldElement::integer(1),
                                 FieldElement::integer(1), FieldElement::integer(0)});
  CHECK(A.reduced_norm(d).s == FieldElement::integer(11));

  std::mt19937_64 rng(5);
  for (int t = 0; t < 150; ++t) {
    QuatElement x = random_elem(rng, A), y = random_elem(rng, A), z = random_elem(rng, A);
    CHECK(A.mul(A.mul(x, y), z) == A.mul(x, A.mul(y, z)));
    CHECK(A.mul(x, A.add(y, z)) == A.add(A.mul(x, y), A.mul(x, z)));
    CHECK(A.conjugate(A.mul(x, y)) == A.mul(A.conjugate(y), A.conjugate(x)));
    CHECK(A.conjugate(A.conjugate(x)) == x);
    CenterValue nx = A.reduced_norm(x), ny = A.reduced_norm(y), nxy = A.reduced_norm(A.mul(x, y));
    CHECK(nxy.s == nx.s * ny.s);
    if (!nx.is_zero()) CHECK(A.mul(x, A.inverse(x)) == A.one());
  }
}

TEST_CASE("unitary centre arithmetic") {
  QuaternionAlgebra A = QuaternionAlgebra::unitary_center(
      FieldElement::integer(2), FieldElement::integer(3), FieldElement::integer(-1));
  CHECK(A.dim() == 8);
  // sqrt(delta) is central with square delta
  QuatElement s = A.basis(4);
  CHECK(A.mul(s, s) == A.scalar(FieldElement::integer(-1)));
  QuatElement i = A.basis(1);
  CHECK(A.mul(s, i) == A.mul(i, s));
  CHECK(A.mul(s, i) == A.basis(5));
  // conjugation negates k tensor sqrt(delta)
  CHECK(A.conjugate(A.basis(7)) == A.neg(A.basis(7)));

  std::mt19937_64 rng(9);
  for (int t = 0; t < 100; ++t) {
    QuatElement x = random_elem(rng, A), y = random_elem(rng, A);
    CHECK(A.mul(A.mul(x, y), A.one()) == A.mul(x, y));
    CHECK(A.conjugate(A.mul(x, y)) == A.mul(A.conjugate(y), A.conjugate(x)));
    CenterValue nx = A.reduced_norm(x);
    if (!nx.is_zero()) CHECK(A.mul(A.inverse(x), x) == A.one());
  }
  // delta must be a non-square
  CHECK_THROWS_AS(QuaternionAlgebra::unitary_center(FieldElement::integer(2),
                                                    FieldElement::integer(3),
                                                    FieldElement::integer(4)),
                  Error);
}

TEST_CASE("local Hilbert symbols") {
  auto sym = [](long a, long b, const Place& v) {
    return hilbert_symbol(mpq_class(a), mpq_class(b), v);
  };
  CHECK(sym(2, 3, Place::prime(3)) == -1);
  CHECK(sym(1, 7, Place::prime(2)) == 1);
  CHECK(sym(1, -5, Place::infinity()) == 1);
  CHECK(sym(-1, -1, Place::infinity()) == -1);
  CHECK(sym(-1, -1, Place::prime(2)) == -1);
  CHECK(sym(2, 2, Place::prime(2)) == 1);
}

TEST_CASE("division classification over the rationals") {
  CHECK_FALSE(is_division_over_rationals(1, 1));
  CHECK(is_division_over_rationals(2, 3));
  CHECK(is_division_over_rationals(-1, -1));
  CHECK_FALSE(is_division_over_rationals(-2, 3));  // isotropic: 1 + 2 = 3
  CHECK(is_division_over_rationals(3, 3));
  CHECK(is_division_over_rationals(-1, 3));
}

TEST_CASE("Hilbert reciprocity on random pairs") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> num(-60, 60), den(1, 30);
  for (int t = 0; t < 300; ++t) {
    mpq_class a(num(rng), den(rng)), b(num(rng), den(rng));
    if (sgn(a) == 0 || sgn(b) == 0) continue;
    a.canonicalize();
    b.canonicalize();
    int prod = 1;
    for (const Place& v : ramified_candidate_places(a, b)) prod *= hilbert_symbol(a, b, v);
    CHECK(prod == 1);
  }
}
