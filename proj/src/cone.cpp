#include "quatcone/cone.hpp"

#include "quatcone/sampling.hpp"

namespace quatcone {

const char* cone_verdict_name(ConeVerdict v) {
  switch (v) {
    case ConeVerdict::PlusCone: return "PlusCone";
    case ConeVerdict::MinusCone: return "MinusCone";
    case ConeVerdict::Neither: return "Neither";
    case ConeVerdict::Zero: return "Zero";
  }
  return "unknown";
}

ConeVerdict member(const Context& ctx, const QuatElement& d) {
  const QuaternionAlgebra& A = ctx.algebra();
  A.require_element(d);
  if (ctx.tag() == CaseTag::Split)
    fail(Errc::Unsupported, "split algebra: use psd membership");
  if (ctx.nil()) fail(Errc::NilOrdering, "no positive cones over a nil ordering");
  if (d.is_zero()) return ConeVerdict::Zero;
  if (!ctx.is_symmetric(d)) fail(Errc::NotSymmetric, "membership needs a symmetric element");
  if (!A.is_invertible(d)) return ConeVerdict::Neither;
  int s = ctx.signature(d);
  if (s == 2) return ConeVerdict::PlusCone;
  if (s == -2) return ConeVerdict::MinusCone;
  return ConeVerdict::Neither;
}

QuatElement eval_combination(const QuaternionAlgebra& A, const Involution& inv,
                             const Combination& comb) {
  A.require_element(comb.generator);
  QuatElement acc = A.zero();
  for (const auto& [u, x] : comb.terms) {
    QuatElement t = A.mul(apply(A, inv, x), A.mul(comb.generator, x));
    acc = A.add(acc, A.scale(u, t));
  }
  return acc;
}

HermitianMatrix HermitianMatrix::zero(const FieldDesc& f, std::optional<FieldElement> delta,
                                      size_t n) {
  HermitianMatrix m;
  m.field = f;
  m.delta = std::move(delta);
  m.n = n;
  m.e.assign(n * n, CenterValue{FieldElement(f), FieldElement(f)});
  return m;
}

namespace {

CenterValue cv_sub(const CenterValue& x, const CenterValue& y) { return {x.s - y.s, x.t - y.t}; }

CenterValue cv_mul(const CenterValue& x, const CenterValue& y, const FieldElement& delta) {
  return {x.s * y.s + delta * x.t * y.t, x.s * y.t + x.t * y.s};
}

CenterValue cv_div(const CenterValue& x, const CenterValue& y, const FieldElement& delta) {
  FieldElement norm = y.s * y.s - delta * y.t * y.t;
  if (norm.is_zero()) fail(Errc::DivisionByZero, "division by zero centre value");
  CenterValue conj{y.s / norm, -(y.t / norm)};
  return cv_mul(x, conj, delta);
}

// Determinant of the principal submatrix on `idx`, by Gaussian elimination
// over the (commutative) centre.
CenterValue principal_minor(const HermitianMatrix& M, const std::vector<size_t>& idx,
                            const FieldElement& delta) {
  const size_t k = idx.size();
  std::vector<CenterValue> w;
  w.reserve(k * k);
  for (size_t r = 0; r < k; ++r)
    for (size_t c = 0; c < k; ++c) w.push_back(M.at(idx[r], idx[c]));
  auto at = [&](size_t r, size_t c) -> CenterValue& { return w[r * k + c]; };
  CenterValue det{FieldElement::integer(1, M.field), FieldElement(M.field)};
  for (size_t col = 0; col < k; ++col) {
    size_t piv = col;
    while (piv < k && at(piv, col).is_zero()) ++piv;
    if (piv == k) return {FieldElement(M.field), FieldElement(M.field)};
    if (piv != col) {
      for (size_t j = 0; j < k; ++j) std::swap(at(piv, j), at(col, j));
      det = cv_mul(det, {FieldElement::integer(-1, M.field), FieldElement(M.field)}, delta);
    }
    det = cv_mul(det, at(col, col), delta);
    for (size_t r = col + 1; r < k; ++r) {
      if (at(r, col).is_zero()) continue;
      CenterValue f = cv_div(at(r, col), at(col, col), delta);
      for (size_t j = col; j < k; ++j) at(r, j) = cv_sub(at(r, j), cv_mul(f, at(col, j), delta));
    }
  }
  return det;
}

bool is_psd(const HermitianMatrix& M, const Ordering& P, const FieldElement& delta) {
  std::vector<size_t> idx;
  const size_t n = M.n;
  for (size_t mask = 1; mask < (size_t{1} << n); ++mask) {
    idx.clear();
    for (size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1) idx.push_back(i);
    CenterValue d = principal_minor(M, idx, delta);
    if (!d.t.is_zero())
      fail(Errc::Internal, "principal minor of a hermitian matrix is not real");
    if (sign_at(d.s, P) < 0) return false;
  }
  return true;
}

}  // namespace

ConeVerdict psd_member(const HermitianMatrix& M, const Ordering& P) {
  if (!(M.field == P.field)) fail(Errc::FieldMismatch, "matrix over a different field");
  if (M.n == 0 || M.e.size() != M.n * M.n) fail(Errc::Parse, "malformed matrix");
  if (M.n > 16) fail(Errc::Unsupported, "principal-minor scan limited to n <= 16");
  FieldElement delta = M.delta ? *M.delta : FieldElement(M.field);
  if (M.delta) {
    if (M.delta->is_zero() || is_square(*M.delta))
      fail(Errc::Parse, "delta must be a nonzero non-square");
    if (sign_at(*M.delta, P) >= 0)
      fail(Errc::Unsupported, "hermitian case needs delta negative at P");
  }
  // Hermitian check: M equals its conjugate transpose.
  bool all_zero = true;
  for (size_t r = 0; r < M.n; ++r)
    for (size_t c = 0; c < M.n; ++c) {
      const CenterValue &x = M.at(r, c), &y = M.at(c, r);
      if (!(x.s == y.s) || !(x.t == -y.t))
        fail(Errc::NotSymmetric, "matrix is not hermitian");
      if (!M.delta && !x.t.is_zero())
        fail(Errc::Parse, "matrix over F has entries outside F");
      if (!x.is_zero()) all_zero = false;
    }
  if (all_zero) return ConeVerdict::Zero;
  if (is_psd(M, P, delta)) return ConeVerdict::PlusCone;
  HermitianMatrix neg = M;
  for (auto& x : neg.e) x = CenterValue{-x.s, -x.t};
  if (is_psd(neg, P, delta)) return ConeVerdict::MinusCone;
  return ConeVerdict::Neither;
}

AxiomReport check_cone_axioms(const Context& ctx, const MemberFn& verdict, uint64_t seed,
                              int trials) {
  if (trials < 1) fail(Errc::Parse, "at least one trial required");
  AxiomReport rep;
  rep.trials = trials;
  Sampler smp(seed);
  const QuaternionAlgebra& A = ctx.algebra();
  auto note = [&](const std::string& what, const QuatElement& x) {
    std::string s = what + " on coords(";
    for (const auto& c : x.c) s += c.str() + ",";
    s += ")";
    rep.failures.push_back(s);
  };

  // (P1) the designated generator is a member.
  QuatElement gen = ctx.designated_generator();
  if (verdict(gen) != ConeVerdict::PlusCone) note("P1: designated generator not in the cone", gen);

  std::vector<QuatElement> plus_pool{gen};
  for (int t = 0; t < trials; ++t) {
    QuatElement d = smp.symmetric_element(ctx);
    ConeVerdict vd = verdict(d);
    if (vd == ConeVerdict::PlusCone) plus_pool.push_back(d);

    // (P5) as a biconditional through negation.
    ConeVerdict vn = verdict(A.neg(d));
    bool plus = vd == ConeVerdict::PlusCone, neg_minus = vn == ConeVerdict::MinusCone;
    if (plus != neg_minus) note("P5: negation verdict mismatch", d);

    const QuatElement& p1 = plus_pool[static_cast<size_t>(
        smp.uniform(0, static_cast<long>(plus_pool.size()) - 1))];
    const QuatElement& p2 = plus_pool[static_cast<size_t>(
        smp.uniform(0, static_cast<long>(plus_pool.size()) - 1))];
    // (P2) closure under addition.
    if (verdict(A.add(p1, p2)) != ConeVerdict::PlusCone) note("P2: sum left the cone", A.add(p1, p2));

    // (P3) closure under congruence by arbitrary x.
    QuatElement x = smp.element(A);
    QuatElement cong = A.mul(apply(A, ctx.involution(), x), A.mul(p1, x));
    ConeVerdict vc = verdict(cong);
    if (x.is_zero()) {
      if (vc != ConeVerdict::Zero) note("P3: zero congruence not zero", x);
    } else if (A.is_invertible(x)) {
      if (vc != ConeVerdict::PlusCone) note("P3: invertible congruence left the cone", x);
    } else if (vc == ConeVerdict::MinusCone) {
      note("P3: singular congruence reached the negative cone", x);
    }

    // (P4) closure under positive scalars.
    FieldElement u = smp.positive_field_element(ctx.ordering());
    if (verdict(A.scale(u, p1)) != ConeVerdict::PlusCone) note("P4: positive scaling left the cone", p1);
  }
  return rep;
}

}  // namespace quatcone
