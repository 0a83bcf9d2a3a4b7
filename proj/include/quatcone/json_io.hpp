#pragma once

#include <json.hpp>

#include "quatcone/certificate.hpp"

namespace quatcone {

using nlohmann::json;

// Scalars travel as exact strings: "p/q" (or "p") over the rationals, and
// {"p": ..., "q": ...} over a quadratic field. No floats anywhere.
json scalar_to_json(const FieldElement& x);
FieldElement scalar_from_json(const json& j, const FieldDesc& f);

json element_to_json(const QuatElement& x);
QuatElement element_from_json(const json& j, const QuaternionAlgebra& A);

json field_to_json(const Ordering& P);
Ordering field_from_json(const json& j);

json algebra_to_json(const QuaternionAlgebra& A);
QuaternionAlgebra algebra_from_json(const json& j, const FieldDesc& f);

json involution_to_json(const Involution& inv);
Involution involution_from_json(const json& j, const QuaternionAlgebra& A);

json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const json& j, const QuaternionAlgebra& A);

// A full problem document: field + ordering, algebra, involution, optional
// element and orientation. Unknown keys are rejected.
struct ProblemDoc {
  Ordering ordering = Ordering::rationals();
  QuaternionAlgebra algebra;
  Involution involution;
  std::optional<QuatElement> element;
  Orientation orientation;

  ProblemDoc() : algebra(QuaternionAlgebra::first_kind(FieldElement::integer(1),
                                                       FieldElement::integer(1))) {}
};

ProblemDoc problem_from_json(const json& j);

void reject_unknown_keys(const json& j, std::initializer_list<const char*> allowed,
                         const std::string& where);

}  // namespace quatcone
