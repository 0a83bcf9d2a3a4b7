#pragma once

#include <functional>
#include <string>
#include <vector>

#include "quatcone/signature.hpp"

namespace quatcone {

enum class ConeVerdict { PlusCone, MinusCone, Neither, Zero };

const char* cone_verdict_name(ConeVerdict v);

// Membership in the positive cone of maximal-signature elements (division
// algebras; the split case goes through psd_member).
ConeVerdict member(const Context& ctx, const QuatElement& d);

// A closure combination sum_i u_i inv(x_i) g x_i against a generator g.
struct Combination {
  QuatElement generator;
  std::vector<std::pair<FieldElement, QuatElement>> terms;  // (u_i, x_i)
};

QuatElement eval_combination(const QuaternionAlgebra& A, const Involution& inv,
                             const Combination& comb);

// Hermitian matrix over (F, id) or (F(sqrt(delta)), conjugation) with
// delta < 0 at P; entries in row-major order.
struct HermitianMatrix {
  FieldDesc field;
  std::optional<FieldElement> delta;
  size_t n = 0;
  std::vector<CenterValue> e;

  const CenterValue& at(size_t r, size_t c) const { return e[r * n + c]; }
  CenterValue& at(size_t r, size_t c) { return e[r * n + c]; }
  static HermitianMatrix zero(const FieldDesc& f, std::optional<FieldElement> delta, size_t n);
};

// Positive-semidefinite membership: every principal minor (all index
// subsets, not only leading) nonnegative at P.
ConeVerdict psd_member(const HermitianMatrix& M, const Ordering& P);

using MemberFn = std::function<ConeVerdict(const QuatElement&)>;

struct AxiomReport {
  int trials = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

// Sampled check of the prepositive-cone axioms against a membership
// predicate (the real one, or a corrupted one in harness self tests).
AxiomReport check_cone_axioms(const Context& ctx, const MemberFn& verdict, uint64_t seed,
                              int trials);

inline AxiomReport check_cone_axioms(const Context& ctx, uint64_t seed, int trials) {
  return check_cone_axioms(ctx, [&ctx](const QuatElement& d) { return member(ctx, d); }, seed,
                           trials);
}

}  // namespace quatcone
