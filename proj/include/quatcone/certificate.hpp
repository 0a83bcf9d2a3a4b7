#pragma once

#include <optional>
#include <string>

#include "quatcone/cone.hpp"

namespace quatcone {

// Exactly verifiable witness that `target` lies in the closure of
// {generator}: target = sum_i u_i inv(x_i) generator x_i with every u_i
// nonnegative at P.
struct Certificate {
  CaseTag tag = CaseTag::Case1;
  QuatElement target;
  Combination comb;  // generator and terms
  std::optional<FieldElement> beta;
  std::string notes;
};

// u x^2 + v / x^2, the objective the beta search minimizes.
FieldElement beta_objective(const FieldElement& u, const FieldElement& v, const FieldElement& x);

// A nonzero dyadic beta with f(beta) strictly between the minimum 2*sqrt(uv)
// and t. Requires u, v > 0 at P and t > 0, t^2 > 4uv (checked exactly).
FieldElement find_beta(const FieldElement& u, const FieldElement& v, const FieldElement& t,
                       const Ordering& P);

// target = inv(c) g c + (top - f(beta)) inv(1) g 1 against the case's
// designated generator g.
Certificate certify_from_generator(const Context& ctx, const QuatElement& d);

// The designated generator as an explicit combination over a given cone
// element u (the absorption identities).
Certificate express_generator(const Context& ctx, const QuatElement& u);

// Composition of the two: d as a combination over an arbitrary cone element
// u, flattened through inv(x) inv(y) u y x = inv(yx) u (yx).
Certificate certify_relative(const Context& ctx, const QuatElement& d, const QuatElement& u);

// Exact replay: all coefficients nonnegative at P and the combination
// re-evaluates to the target, coordinatewise.
bool verify_certificate(const QuaternionAlgebra& A, const Involution& inv, const Ordering& P,
                        const Certificate& cert, std::string* reason = nullptr);

}  // namespace quatcone
