#include <doctest.h>

#include "quatcone/json_io.hpp"
#include "quatcone/sampling.hpp"

using namespace quatcone;

namespace {

FieldElement fe(long n, long d = 1) { return FieldElement::fraction(n, d); }

}  // namespace

TEST_CASE("scalar round trips are exact") {
  FieldDesc q = FieldDesc::rationals();
  for (const char* s : {"0", "-7", "3/4", "-22/7", "123456789123456789/2"}) {
    FieldElement x = scalar_from_json(json(s), q);
    CHECK(scalar_to_json(x) == json(s));
  }
  // canonicalization on input
  CHECK(scalar_to_json(scalar_from_json(json("4/6"), q)) == json("2/3"));
  CHECK_THROWS_AS(scalar_from_json(json("1/0"), q), Error);
  CHECK_THROWS_AS(scalar_from_json(json("a"), q), Error);
  CHECK_THROWS_AS(scalar_from_json(json("1.5"), q), Error);
  CHECK_THROWS_AS(scalar_from_json(json("2/-3"), q), Error);

  FieldDesc f2 = FieldDesc::quadratic(2);
  json obj{{"p", "1/2"}, {"q", "-3"}};
  FieldElement y = scalar_from_json(obj, f2);
  CHECK(y.p() == mpq_class(1, 2));
  CHECK(y.q() == mpq_class(-3));
  CHECK(scalar_from_json(scalar_to_json(y), f2) == y);
  CHECK_THROWS_AS(scalar_from_json(json{{"p", "1"}}, f2), Error);
  CHECK_THROWS_AS(scalar_from_json(json{{"p", "1"}, {"q", "0"}, {"r", "2"}}, f2), Error);
}

TEST_CASE("problem documents parse strictly") {
  json doc{
      {"field", {{"kind", "rational"}}},
      {"algebra", {{"a", "2"}, {"b", "3"}}},
      {"involution", {{"kind", "orthogonal"}, {"v", {"0", "0", "0", "1"}}}},
      {"element", {"4", "1", "1", "0"}},
  };
  ProblemDoc p = problem_from_json(doc);
  CHECK(p.algebra.a() == fe(2));
  CHECK(p.involution.kind == InvolutionKind::Orthogonal);
  REQUIRE(p.element.has_value());
  CHECK(p.element->c[0] == fe(4));

  json bad = doc;
  bad["unexpected"] = 1;
  CHECK_THROWS_AS(problem_from_json(bad), Error);
  json bad2 = doc;
  bad2["element"] = {"1", "2"};
  CHECK_THROWS_AS(problem_from_json(bad2), Error);
  json bad3 = doc;
  bad3["involution"] = {{"kind", "orthogonal"}};
  CHECK_THROWS_AS(problem_from_json(bad3), Error);

  json quad{
      {"field", {{"kind", "quadratic"}, {"m", 8}, {"embedding", "negative_root"}}},
      {"algebra",
       {{"a", {{"p", "3"}, {"q", "0"}}}, {"b", "5"}, {"division", true}}},
      {"involution", {{"kind", "symplectic"}}},
  };
  ProblemDoc pq = problem_from_json(quad);
  CHECK(pq.ordering.field.m == 2);  // square-free reduction
  CHECK(pq.ordering.embedding == Embedding::NegativeRoot);
  CHECK(pq.algebra.is_division());
}

TEST_CASE("certificate documents round trip bit-exactly") {
  QuaternionAlgebra A = QuaternionAlgebra::first_kind(fe(2), fe(3));
  Context ctx(A, Involution::orthogonal(A.basis(3)), Ordering::rationals());
  Sampler smp(123);
  for (int t = 0; t < 25; ++t) {
    QuatElement d = smp.cone_element(ctx);
    Certificate cert = certify_from_generator(ctx, d);
    json j = certificate_to_json(cert);
    Certificate back = certificate_from_json(j, A);
    CHECK(certificate_to_json(back) == j);
    CHECK(back.target == cert.target);
    CHECK(back.comb.generator == cert.comb.generator);
    REQUIRE(back.comb.terms.size() == cert.comb.terms.size());
    for (size_t i = 0; i < back.comb.terms.size(); ++i) {
      CHECK(back.comb.terms[i].first == cert.comb.terms[i].first);
      CHECK(back.comb.terms[i].second == cert.comb.terms[i].second);
    }
    CHECK(verify_certificate(A, ctx.involution(), ctx.ordering(), back));
  }
}

TEST_CASE("unitary elements serialize with eight coordinates") {
  QuaternionAlgebra U = QuaternionAlgebra::unitary_center(fe(2), fe(3), fe(-1));
  json j = element_to_json(U.basis(7));
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 8);
  CHECK(element_from_json(j, U) == U.basis(7));
  json alg = algebra_to_json(U);
  CHECK(alg.contains("delta"));
  QuaternionAlgebra back = algebra_from_json(alg, FieldDesc::rationals());
  CHECK(back == U);
}
