#include "quatcone/certificate.hpp"

namespace quatcone {

FieldElement beta_objective(const FieldElement& u, const FieldElement& v, const FieldElement& x) {
  if (x.is_zero()) fail(Errc::DivisionByZero, "objective undefined at zero");
  FieldElement x2 = x * x;
  return u * x2 + v / x2;
}

namespace {

// floor(2^g * (v/u)^(1/4)) exactly: integer fourth root of floor((v/u) 4^g).
mpz_class floor_fourth_root_scaled(const FieldElement& ratio, const Ordering& P, long g) {
  mpz_class scaled = exact_floor_scaled(ratio, P, 4 * g);
  if (sgn(scaled) < 0) fail(Errc::Internal, "negative radicand in the beta search");
  mpz_class r;
  mpz_root(r.get_mpz_t(), scaled.get_mpz_t(), 4);
  return r;
}

FieldElement dyadic(const FieldDesc& f, const mpz_class& n, long g) {
  mpq_class q(n);
  q /= mpq_class(mpz_class(1) << static_cast<unsigned long>(g));
  return FieldElement(f, q);
}

}  // namespace

FieldElement find_beta(const FieldElement& u, const FieldElement& v, const FieldElement& t,
                       const Ordering& P) {
  if (sign_at(u, P) <= 0 || sign_at(v, P) <= 0)
    fail(Errc::Parse, "beta search needs u, v positive at P");
  FieldElement four = FieldElement::integer(4, u.field());
  if (sign_at(t, P) <= 0 || sign_at(t * t - four * u * v, P) <= 0)
    fail(Errc::EmptyInterval, "target does not exceed the minimum of the objective");

  const FieldElement ratio = v / u;  // beta* = ratio^(1/4)
  for (long g = 3; g <= 4096; ++g) {
    mpz_class n = floor_fourth_root_scaled(ratio, P, g);
    // The two grid neighbours of the minimizer, tried closest-in-f first;
    // an exact hit of the minimum (u beta^4 = v) is skipped.
    FieldElement best(u.field());
    bool have = false;
    FieldElement best_f(u.field());
    for (const mpz_class& m : {n, mpz_class(n + 1)}) {
      if (sgn(m) <= 0) continue;
      FieldElement cand = dyadic(u.field(), m, g);
      FieldElement c4 = cand * cand * cand * cand;
      if (u * c4 == v) continue;  // exact minimum: one dyadic step away instead
      FieldElement fc = beta_objective(u, v, cand);
      if (!have || sign_at(best_f - fc, P) > 0) {
        best = cand;
        best_f = fc;
        have = true;
      }
    }
    if (have && sign_at(t - best_f, P) > 0) return best;
  }
  fail(Errc::Internal, "beta search exhausted the precision cap");
}

namespace {

struct CanonicalPlan {
  FieldElement u_lemma;
  FieldElement v_lemma;
  FieldElement top;            // the coordinate compared against f(beta)
  QuatElement generator;       // canonical coordinates
  QuatElement c;               // filled in once beta is known
};

// Shortcut test: d proportional to the generator direction (the lemma's v
// would vanish, which its positivity hypothesis excludes).
bool is_generator_direction(CaseTag tag, const QuatElement& e) {
  switch (tag) {
    case CaseTag::Case1: return true;
    case CaseTag::Case2i:
    case CaseTag::Case2ii: return e.c[1].is_zero() && e.c[2].is_zero();
    case CaseTag::Case3i: return e.c[0].is_zero() && e.c[5].is_zero() && e.c[6].is_zero();
    case CaseTag::Case3ii: return e.c[0].is_zero() && e.c[6].is_zero() && e.c[7].is_zero();
    case CaseTag::Case3iii: return e.c[5].is_zero() && e.c[6].is_zero() && e.c[7].is_zero();
    default: fail(Errc::Internal, "no certificate construction for this case");
  }
}

size_t top_slot(CaseTag tag) {
  switch (tag) {
    case CaseTag::Case1: return 0;
    case CaseTag::Case2i:
    case CaseTag::Case2ii: return 0;
    case CaseTag::Case3i: return 7;
    case CaseTag::Case3ii: return 5;
    case CaseTag::Case3iii: return 0;
    default: fail(Errc::Internal, "no certificate construction for this case");
  }
}

}  // namespace

Certificate certify_from_generator(const Context& ctx, const QuatElement& d) {
  if (member(ctx, d) != ConeVerdict::PlusCone)
    fail(Errc::NotInCone, "certificates exist only for positive-cone members");

  const QuaternionAlgebra& A = ctx.canonical_algebra();
  const FieldDesc& f = A.field();
  const QuatElement e = ctx.to_canonical(d);
  const CaseTag tag = ctx.tag();
  const FieldElement one = FieldElement::integer(1, f);
  const FieldElement two = FieldElement::integer(2, f);
  const FieldElement four = FieldElement::integer(4, f);

  Certificate cert;
  cert.tag = tag;
  cert.target = d;
  cert.notes = "from-generator";

  QuatElement gen_canon = A.zero();
  switch (tag) {
    case CaseTag::Case1:
    case CaseTag::Case2i:
    case CaseTag::Case2ii:
    case CaseTag::Case3iii: gen_canon = A.one(); break;
    case CaseTag::Case3i: gen_canon = A.basis(7); break;
    case CaseTag::Case3ii: gen_canon = A.basis(5); break;
    default: fail(Errc::Internal, "no certificate construction for this case");
  }

  const size_t top = top_slot(tag);
  if (is_generator_direction(tag, e)) {
    cert.comb.generator = ctx.from_canonical(gen_canon);
    cert.comb.terms.emplace_back(e.c[top], ctx.algebra().one());
  } else {
    const FieldElement &a = A.a(), &b = A.b();
    FieldElement u_lem = one, v_lem(f);
    QuatElement c = A.zero();
    switch (tag) {
      case CaseTag::Case2i:
      case CaseTag::Case2ii: {
        v_lem = (a * e.c[1] * e.c[1] + b * e.c[2] * e.c[2]) / four;
        FieldElement beta = find_beta(u_lem, v_lem, e.c[0], ctx.ordering());
        c.c[0] = beta;
        c.c[1] = e.c[1] / (two * beta);
        c.c[2] = e.c[2] / (two * beta);
        cert.beta = beta;
        break;
      }
      case CaseTag::Case3i: {
        const FieldElement& dl = A.delta();
        u_lem = -(a * b * dl);
        FieldElement den = four * a * a * b * b * dl * dl;
        v_lem = (e.c[0] * e.c[0] - a * dl * e.c[5] * e.c[5] - b * dl * e.c[6] * e.c[6]) / den;
        FieldElement beta = find_beta(u_lem, v_lem, e.c[7], ctx.ordering());
        FieldElement den2 = two * a * b * dl * beta;
        c.c[0] = -(e.c[0] / den2);
        c.c[5] = -(e.c[5] / den2);
        c.c[6] = -(e.c[6] / den2);
        c.c[7] = beta;
        cert.beta = beta;
        break;
      }
      case CaseTag::Case3ii: {
        const FieldElement& dl = A.delta();
        u_lem = a * dl;
        FieldElement den = four * a * a * dl * dl;
        v_lem = (e.c[0] * e.c[0] - b * dl * e.c[6] * e.c[6] + a * b * dl * e.c[7] * e.c[7]) / den;
        FieldElement beta = find_beta(u_lem, v_lem, e.c[5], ctx.ordering());
        FieldElement den2 = two * a * dl * beta;
        c.c[0] = e.c[0] / den2;
        c.c[5] = beta;
        c.c[6] = e.c[6] / den2;
        c.c[7] = e.c[7] / den2;
        cert.beta = beta;
        break;
      }
      case CaseTag::Case3iii: {
        const FieldElement& dl = A.delta();
        v_lem = (a * dl * e.c[5] * e.c[5] + b * dl * e.c[6] * e.c[6] -
                 a * b * dl * e.c[7] * e.c[7]) / four;
        FieldElement beta = find_beta(u_lem, v_lem, e.c[0], ctx.ordering());
        c.c[0] = beta;
        c.c[5] = e.c[5] / (two * beta);
        c.c[6] = e.c[6] / (two * beta);
        c.c[7] = e.c[7] / (two * beta);
        cert.beta = beta;
        break;
      }
      default: fail(Errc::Internal, "no certificate construction for this case");
    }
    FieldElement remainder = e.c[top] - beta_objective(u_lem, v_lem, *cert.beta);
    cert.comb.generator = ctx.from_canonical(gen_canon);
    cert.comb.terms.emplace_back(one, ctx.from_canonical(c));
    cert.comb.terms.emplace_back(remainder, ctx.algebra().one());
  }

  std::string why;
  if (!verify_certificate(ctx.algebra(), ctx.involution(), ctx.ordering(), cert, &why))
    fail(Errc::Internal, "constructed certificate failed verification: " + why);
  return cert;
}

Certificate express_generator(const Context& ctx, const QuatElement& u) {
  if (u.is_zero() || member(ctx, u) != ConeVerdict::PlusCone)
    fail(Errc::NotInCone, "generator expression needs a nonzero cone member");

  const QuaternionAlgebra& A = ctx.canonical_algebra();
  const FieldDesc& f = A.field();
  const QuatElement e = ctx.to_canonical(u);
  const CaseTag tag = ctx.tag();
  const FieldElement one = FieldElement::integer(1, f);
  const FieldElement two = FieldElement::integer(2, f);
  const FieldElement four = FieldElement::integer(4, f);

  Certificate cert;
  cert.tag = tag;
  cert.comb.generator = u;
  cert.target = ctx.designated_generator();
  cert.notes = "generator-absorption";

  if (u == cert.target) {
    cert.comb.terms.emplace_back(one, ctx.algebra().one());
  } else {
    switch (tag) {
      case CaseTag::Case1:
        cert.comb.terms.emplace_back(one / e.c[0], ctx.algebra().one());
        break;
      case CaseTag::Case2i:
      case CaseTag::Case2ii: {
        // 1 = 1/(2a u0) inv(i) u i + 1/(2b u0) inv(j) u j in the standard frame
        const FieldElement &a = A.a(), &b = A.b();
        cert.comb.terms.emplace_back(one / (two * a * e.c[0]), ctx.from_canonical(A.basis(1)));
        cert.comb.terms.emplace_back(one / (two * b * e.c[0]), ctx.from_canonical(A.basis(2)));
        break;
      }
      case CaseTag::Case3i: {
        const FieldElement &a = A.a(), &b = A.b(), &dl = A.delta();
        FieldElement u7 = e.c[7];
        cert.comb.terms.emplace_back(one / (four * u7), ctx.algebra().one());
        cert.comb.terms.emplace_back(-(one / (four * a * dl * u7)), ctx.from_canonical(A.basis(5)));
        cert.comb.terms.emplace_back(-(one / (four * b * dl * u7)), ctx.from_canonical(A.basis(6)));
        cert.comb.terms.emplace_back(-(one / (four * a * b * dl * u7)),
                                     ctx.from_canonical(A.basis(7)));
        break;
      }
      case CaseTag::Case3ii: {
        const FieldElement &a = A.a(), &b = A.b(), &dl = A.delta();
        FieldElement u5 = e.c[5];
        cert.comb.terms.emplace_back(one / (four * u5), ctx.algebra().one());
        cert.comb.terms.emplace_back(one / (four * a * dl * u5), ctx.from_canonical(A.basis(5)));
        cert.comb.terms.emplace_back(-(one / (four * b * dl * u5)), ctx.from_canonical(A.basis(6)));
        cert.comb.terms.emplace_back(one / (four * a * b * dl * u5),
                                     ctx.from_canonical(A.basis(7)));
        break;
      }
      case CaseTag::Case3iii: {
        const FieldElement &a = A.a(), &b = A.b(), &dl = A.delta();
        FieldElement u0 = e.c[0];
        cert.comb.terms.emplace_back(one / (four * u0), ctx.algebra().one());
        cert.comb.terms.emplace_back(one / (four * a * dl * u0), ctx.from_canonical(A.basis(5)));
        cert.comb.terms.emplace_back(one / (four * b * dl * u0), ctx.from_canonical(A.basis(6)));
        cert.comb.terms.emplace_back(-(one / (four * a * b * dl * u0)),
                                     ctx.from_canonical(A.basis(7)));
        break;
      }
      default: fail(Errc::Internal, "no absorption identity for this case");
    }
  }

  std::string why;
  if (!verify_certificate(ctx.algebra(), ctx.involution(), ctx.ordering(), cert, &why))
    fail(Errc::Internal, "constructed absorption identity failed verification: " + why);
  return cert;
}

Certificate certify_relative(const Context& ctx, const QuatElement& d, const QuatElement& u) {
  Certificate stage = certify_from_generator(ctx, d);
  Certificate absorb = express_generator(ctx, u);
  const QuaternionAlgebra& A = ctx.algebra();

  Certificate cert;
  cert.tag = ctx.tag();
  cert.target = d;
  cert.comb.generator = u;
  cert.beta = stage.beta;
  cert.notes = "relative";
  // inv(y)(inv(x) u x)y = inv(xy) u (xy): flatten the two layers.
  for (const auto& [w, y] : stage.comb.terms)
    for (const auto& [vv, x] : absorb.comb.terms)
      cert.comb.terms.emplace_back(w * vv, A.mul(x, y));

  std::string why;
  if (!verify_certificate(A, ctx.involution(), ctx.ordering(), cert, &why))
    fail(Errc::Internal, "composed certificate failed verification: " + why);
  return cert;
}

bool verify_certificate(const QuaternionAlgebra& A, const Involution& inv, const Ordering& P,
                        const Certificate& cert, std::string* reason) {
  auto bad = [&](const std::string& why) {
    if (reason) *reason = why;
    return false;
  };
  try {
    for (const auto& [u, x] : cert.comb.terms) {
      A.require_element(x);
      if (sign_at(u, P) < 0) return bad("negative coefficient " + u.str());
    }
    QuatElement value = eval_combination(A, inv, cert.comb);
    if (!(value == cert.target)) return bad("evaluation does not match the target");
  } catch (const Error& e) {
    return bad(std::string("evaluation error: ") + e.what());
  }
  if (reason) reason->clear();
  return true;
}

}  // namespace quatcone
