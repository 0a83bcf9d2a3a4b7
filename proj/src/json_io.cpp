#include "quatcone/json_io.hpp"

#include <algorithm>

namespace quatcone {

namespace {

mpq_class parse_rational(const std::string& s) {
  if (s.empty()) fail(Errc::Parse, "empty scalar");
  const std::string digits = "0123456789";
  auto valid = [&](const std::string& part) {
    if (part.empty()) return false;
    size_t start = part[0] == '-' ? 1 : 0;
    if (start == part.size()) return false;
    return part.find_first_not_of(digits, start) == std::string::npos;
  };
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!valid(s)) fail(Errc::Parse, "malformed rational: " + s);
  } else {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!valid(num) || !valid(den) || den[0] == '-')
      fail(Errc::Parse, "malformed rational: " + s);
  }
  mpq_class q;
  if (q.set_str(s, 10) != 0) fail(Errc::Parse, "malformed rational: " + s);
  if (sgn(q.get_den()) == 0) fail(Errc::Parse, "zero denominator: " + s);
  q.canonicalize();
  return q;
}

}  // namespace

void reject_unknown_keys(const json& j, std::initializer_list<const char*> allowed,
                         const std::string& where) {
  if (!j.is_object()) fail(Errc::Parse, where + ": expected an object");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (std::find_if(allowed.begin(), allowed.end(),
                     [&](const char* k) { return key == k; }) == allowed.end())
      fail(Errc::Parse, where + ": unknown key \"" + key + "\"");
  }
}

json scalar_to_json(const FieldElement& x) {
  if (x.field().kind == FieldKind::Rational) return x.p().get_str();
  return json{{"p", x.p().get_str()}, {"q", x.q().get_str()}};
}

FieldElement scalar_from_json(const json& j, const FieldDesc& f) {
  if (j.is_string()) {
    // a bare rational is accepted in any field
    return FieldElement(f, parse_rational(j.get<std::string>()));
  }
  if (j.is_object()) {
    if (f.kind != FieldKind::Quadratic)
      fail(Errc::Parse, "quadratic scalar in a rational-field document");
    reject_unknown_keys(j, {"p", "q"}, "scalar");
    if (!j.contains("p") || !j.contains("q")) fail(Errc::Parse, "scalar needs both p and q");
    return FieldElement(f, parse_rational(j.at("p").get<std::string>()),
                        parse_rational(j.at("q").get<std::string>()));
  }
  fail(Errc::Parse, "scalar must be a string or a {p, q} object");
}

json element_to_json(const QuatElement& x) {
  json arr = json::array();
  for (const auto& c : x.c) arr.push_back(scalar_to_json(c));
  return arr;
}

QuatElement element_from_json(const json& j, const QuaternionAlgebra& A) {
  if (!j.is_array()) fail(Errc::Parse, "element must be an array of scalars");
  if (j.size() != A.dim())
    fail(Errc::Parse, "element needs " + std::to_string(A.dim()) + " coordinates");
  std::vector<FieldElement> c;
  c.reserve(j.size());
  for (const auto& s : j) c.push_back(scalar_from_json(s, A.field()));
  return A.from_coords(std::move(c));
}

json field_to_json(const Ordering& P) {
  if (P.field.kind == FieldKind::Rational) return json{{"kind", "rational"}};
  return json{{"kind", "quadratic"},
              {"m", P.field.m},
              {"embedding",
               P.embedding == Embedding::PositiveRoot ? "positive_root" : "negative_root"}};
}

Ordering field_from_json(const json& j) {
  reject_unknown_keys(j, {"kind", "m", "embedding"}, "field");
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "rational") {
    if (j.contains("m") || j.contains("embedding"))
      fail(Errc::Parse, "rational field takes no m or embedding");
    return Ordering::rationals();
  }
  if (kind != "quadratic") fail(Errc::Parse, "field kind must be rational or quadratic");
  if (!j.contains("m") || !j.contains("embedding"))
    fail(Errc::Parse, "quadratic field needs m and embedding");
  if (!j.at("m").is_number_integer()) fail(Errc::Parse, "m must be an integer");
  FieldDesc f = FieldDesc::quadratic(j.at("m").get<long>());
  std::string emb = j.at("embedding").get<std::string>();
  if (emb == "positive_root") return Ordering::of(f, Embedding::PositiveRoot);
  if (emb == "negative_root") return Ordering::of(f, Embedding::NegativeRoot);
  fail(Errc::Parse, "embedding must be positive_root or negative_root");
}

json algebra_to_json(const QuaternionAlgebra& A) {
  json j{{"a", scalar_to_json(A.a())}, {"b", scalar_to_json(A.b())}};
  if (A.center() == CenterKind::QuadraticExtension) j["delta"] = scalar_to_json(A.delta());
  return j;
}

QuaternionAlgebra algebra_from_json(const json& j, const FieldDesc& f) {
  reject_unknown_keys(j, {"a", "b", "delta", "division"}, "algebra");
  if (!j.contains("a") || !j.contains("b")) fail(Errc::Parse, "algebra needs a and b");
  FieldElement a = scalar_from_json(j.at("a"), f);
  FieldElement b = scalar_from_json(j.at("b"), f);
  std::optional<bool> division;
  if (j.contains("division")) {
    if (!j.at("division").is_boolean()) fail(Errc::Parse, "division must be a boolean");
    division = j.at("division").get<bool>();
  }
  if (j.contains("delta"))
    return QuaternionAlgebra::unitary_center(a, b, scalar_from_json(j.at("delta"), f), division);
  return QuaternionAlgebra::first_kind(a, b, division);
}

json involution_to_json(const Involution& inv) {
  switch (inv.kind) {
    case InvolutionKind::Symplectic: return json{{"kind", "symplectic"}};
    case InvolutionKind::Orthogonal: return json{{"kind", "orthogonal"}, {"v", element_to_json(inv.v)}};
    case InvolutionKind::Unitary: return json{{"kind", "unitary"}};
  }
  fail(Errc::Internal, "unreachable involution kind");
}

Involution involution_from_json(const json& j, const QuaternionAlgebra& A) {
  reject_unknown_keys(j, {"kind", "v"}, "involution");
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "symplectic") {
    if (j.contains("v")) fail(Errc::Parse, "symplectic involution takes no v");
    return Involution::symplectic();
  }
  if (kind == "unitary") {
    if (j.contains("v")) fail(Errc::Parse, "unitary involution takes no v");
    return Involution::unitary();
  }
  if (kind != "orthogonal") fail(Errc::Parse, "unknown involution kind: " + kind);
  if (!j.contains("v")) fail(Errc::Parse, "orthogonal involution needs v");
  // v always has 4 coordinates: it lives in the first-kind part
  if (!j.at("v").is_array() || j.at("v").size() != 4)
    fail(Errc::Parse, "orthogonal v needs 4 coordinates");
  std::vector<FieldElement> c;
  for (const auto& s : j.at("v")) c.push_back(scalar_from_json(s, A.field()));
  QuatElement v{std::move(c)};
  if (A.dim() != 4) fail(Errc::Parse, "orthogonal involution needs centre F");
  return Involution::orthogonal(std::move(v));
}

json certificate_to_json(const Certificate& c) {
  json terms = json::array();
  for (const auto& [u, x] : c.comb.terms)
    terms.push_back(json{{"u", scalar_to_json(u)}, {"x", element_to_json(x)}});
  json j{{"case", case_tag_name(c.tag)},
         {"target", element_to_json(c.target)},
         {"generator", element_to_json(c.comb.generator)},
         {"terms", terms},
         {"beta", c.beta ? scalar_to_json(*c.beta) : json(nullptr)}};
  if (!c.notes.empty()) j["notes"] = c.notes;
  return j;
}

Certificate certificate_from_json(const json& j, const QuaternionAlgebra& A) {
  reject_unknown_keys(j, {"case", "target", "generator", "terms", "beta", "notes"}, "certificate");
  Certificate c;
  c.tag = case_tag_from_name(j.at("case").get<std::string>());
  c.target = element_from_json(j.at("target"), A);
  c.comb.generator = element_from_json(j.at("generator"), A);
  if (!j.at("terms").is_array()) fail(Errc::Parse, "terms must be an array");
  for (const auto& t : j.at("terms")) {
    reject_unknown_keys(t, {"u", "x"}, "term");
    c.comb.terms.emplace_back(scalar_from_json(t.at("u"), A.field()),
                              element_from_json(t.at("x"), A));
  }
  if (j.contains("beta") && !j.at("beta").is_null())
    c.beta = scalar_from_json(j.at("beta"), A.field());
  if (j.contains("notes")) c.notes = j.at("notes").get<std::string>();
  return c;
}

ProblemDoc problem_from_json(const json& j) {
  reject_unknown_keys(j, {"field", "algebra", "involution", "element", "orientation"}, "problem");
  if (!j.contains("field") || !j.contains("algebra") || !j.contains("involution"))
    fail(Errc::Parse, "problem needs field, algebra and involution");
  ProblemDoc doc;
  doc.ordering = field_from_json(j.at("field"));
  doc.algebra = algebra_from_json(j.at("algebra"), doc.ordering.field);
  doc.involution = involution_from_json(j.at("involution"), doc.algebra);
  validate(doc.algebra, doc.involution);
  if (j.contains("element")) doc.element = element_from_json(j.at("element"), doc.algebra);
  if (j.contains("orientation")) {
    std::string o = j.at("orientation").get<std::string>();
    if (o == "+") doc.orientation.s = 1;
    else if (o == "-") doc.orientation.s = -1;
    else fail(Errc::Parse, "orientation must be + or -");
  }
  return doc;
}

}  // namespace quatcone
