#include <doctest.h>

#include <random>

#include "quatcone/involution.hpp"

using namespace quatcone;

namespace {

FieldElement fe(long n, long d = 1) { return FieldElement::fraction(n, d); }

QuaternionAlgebra alg23() { return QuaternionAlgebra::first_kind(fe(2), fe(3)); }

QuatElement pure(const QuaternionAlgebra& A, long x1, long x2, long x3) {
  return A.from_coords({fe(0), fe(x1), fe(x2), fe(x3)});
}

QuatElement random_elem(std::mt19937_64& rng, const QuaternionAlgebra& A) {
  std::uniform_int_distribution<long> num(-6, 6), den(1, 3);
  QuatElement x = A.zero();
  for (auto& c : x.c) c = FieldElement(A.field(), mpq_class(num(rng), den(rng)));
  return x;
}

}  // namespace

TEST_CASE("apply on the three kinds") {
  QuaternionAlgebra A = alg23();
  Involution gamma = Involution::symplectic();
  CHECK(apply(A, gamma, A.basis(2)) == A.neg(A.basis(2)));

  Involution sk = Involution::orthogonal(A.basis(3));  // negates k
  CHECK(apply(A, sk, A.basis(1)) == A.basis(1));
  CHECK(apply(A, sk, A.basis(2)) == A.basis(2));
  CHECK(apply(A, sk, A.basis(3)) == A.neg(A.basis(3)));

  QuaternionAlgebra U = QuaternionAlgebra::unitary_center(fe(2), fe(3), fe(-1));
  Involution uni = Involution::unitary();
  CHECK(apply(U, uni, U.basis(7)) == U.basis(7));   // gamma_0 and iota cancel
  CHECK(apply(U, uni, U.basis(4)) == U.neg(U.basis(4)));
  CHECK(apply(U, uni, U.basis(1)) == U.neg(U.basis(1)));

  std::mt19937_64 rng(2);
  for (int t = 0; t < 80; ++t) {
    QuatElement x = random_elem(rng, A), y = random_elem(rng, A);
    for (const Involution& s : {gamma, sk, Involution::orthogonal(pure(A, 1, 1, 0))}) {
      CHECK(apply(A, s, apply(A, s, x)) == x);
      CHECK(apply(A, s, A.mul(x, y)) == A.mul(apply(A, s, y), apply(A, s, x)));
    }
    QuatElement u = random_elem(rng, U), w = random_elem(rng, U);
    CHECK(apply(U, uni, apply(U, uni, u)) == u);
    CHECK(apply(U, uni, U.mul(u, w)) == U.mul(apply(U, uni, w), apply(U, uni, u)));
  }
}

TEST_CASE("classification and fixed spaces") {
  QuaternionAlgebra A = alg23();
  Classification c1 = classify(A, Involution::symplectic());
  REQUIRE(c1.sym_basis.size() == 1);
  CHECK(c1.sym_basis[0] == A.one());

  Classification c2 = classify(A, Involution::orthogonal(A.basis(3)));
  REQUIRE(c2.sym_basis.size() == 3);
  CHECK(c2.sym_basis[0] == A.one());
  CHECK(c2.sym_basis[1] == A.basis(1));
  CHECK(c2.sym_basis[2] == A.basis(2));

  QuaternionAlgebra U = QuaternionAlgebra::unitary_center(fe(2), fe(3), fe(-1));
  Classification c3 = classify(U, Involution::unitary());
  REQUIRE(c3.sym_basis.size() == 4);
  CHECK(c3.sym_basis[0] == U.one());
  CHECK(c3.sym_basis[1] == U.basis(5));
  CHECK(c3.sym_basis[2] == U.basis(6));
  CHECK(c3.sym_basis[3] == U.basis(7));

  // every basis vector is fixed
  for (const auto& e : c2.sym_basis)
    CHECK(apply(A, Involution::orthogonal(A.basis(3)), e) == e);

  Classification c4 = classify(A, Involution::orthogonal(pure(A, 1, 2, 0)));
  CHECK(c4.sym_basis.size() == 3);
  for (const auto& e : c4.sym_basis)
    CHECK(apply(A, Involution::orthogonal(pure(A, 1, 2, 0)), e) == e);
}

TEST_CASE("standardization: axis inputs") {
  QuaternionAlgebra A = alg23();

  StandardFrame id = standardize_orthogonal(A, A.basis(3));
  CHECK(id.std_alg == A);
  CHECK(id.to_standard(A.basis(1)) == A.basis(1));

  // v = i: presentation (3, -6) with i' = j, j' = k
  StandardFrame f = standardize_orthogonal(A, A.basis(1));
  CHECK(f.std_alg.a() == fe(3));
  CHECK(f.std_alg.b() == fe(-6));
  CHECK(f.from_standard(f.std_alg.basis(1)) == A.basis(2));
  CHECK(f.from_standard(f.std_alg.basis(2)) == A.basis(3));
}

TEST_CASE("standardization: generic v") {
  QuaternionAlgebra A = alg23();
  QuatElement v = pure(A, 1, 1, 0);  // i + j
  StandardFrame f = standardize_orthogonal(A, v);
  // complement w = 3i - 2j, so the new first parameter is Q(w) = 30
  CHECK(f.from_standard(f.std_alg.basis(1)) == pure(A, 3, -2, 0));
  CHECK(f.std_alg.a() == fe(30));

  // the map is an algebra isomorphism intertwining the involutions
  Involution sigma = Involution::orthogonal(v);
  Involution std_sigma = Involution::orthogonal(f.std_alg.basis(3));
  std::mt19937_64 rng(4);
  for (int t = 0; t < 60; ++t) {
    QuatElement x = random_elem(rng, f.std_alg), y = random_elem(rng, f.std_alg);
    CHECK(f.from_standard(f.std_alg.mul(x, y)) == A.mul(f.from_standard(x), f.from_standard(y)));
    CHECK(f.from_standard(apply(f.std_alg, std_sigma, x)) == apply(A, sigma, f.from_standard(x)));
    CHECK(f.to_standard(f.from_standard(x)) == x);
  }

  // k' direction is proportional to v
  QuatElement kp = f.from_standard(f.std_alg.basis(3));
  CHECK(kp.c[1] * v.c[2] == kp.c[2] * v.c[1]);
  CHECK(kp.c[3].is_zero());
}

TEST_CASE("trace form positivity") {
  QuaternionAlgebra A = alg23();
  Ordering Q = Ordering::rationals();
  CHECK(trace_form_positive(A, Involution::orthogonal(A.basis(3)), Q));
  CHECK_FALSE(trace_form_positive(A, Involution::orthogonal(A.basis(1)), Q));
  CHECK_FALSE(trace_form_positive(A, Involution::symplectic(), Q));  // needs a, b < 0
  QuaternionAlgebra H = QuaternionAlgebra::first_kind(fe(-1), fe(-1));
  CHECK(trace_form_positive(H, Involution::symplectic(), Q));
  QuaternionAlgebra U = QuaternionAlgebra::unitary_center(fe(-1), fe(-1), fe(-1));
  CHECK(trace_form_positive(U, Involution::unitary(), Q));
}

TEST_CASE("validation rejects malformed descriptors") {
  QuaternionAlgebra A = alg23();
  CHECK_THROWS_AS(validate(A, Involution::orthogonal(A.one())), Error);   // not pure
  CHECK_THROWS_AS(validate(A, Involution::orthogonal(A.zero())), Error);  // not invertible
  CHECK_THROWS_AS(validate(A, Involution::unitary()), Error);             // wrong centre
  QuaternionAlgebra U = QuaternionAlgebra::unitary_center(fe(2), fe(3), fe(-1));
  CHECK_THROWS_AS(validate(U, Involution::symplectic()), Error);
}
