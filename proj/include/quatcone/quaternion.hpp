#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quatcone/field.hpp"

namespace quatcone {

// Element of the centre K: s + t*sqrt(delta); t is identically zero when the
// centre is F itself.
struct CenterValue {
  FieldElement s;
  FieldElement t;

  bool is_zero() const { return s.is_zero() && t.is_zero(); }
  bool operator==(const CenterValue&) const = default;
};

// Coefficient vector over F: length 4 on the basis (1, i, j, k), or length 8
// on the basis (1x1, ix1, jx1, kx1, 1xs, ixs, jxs, kxs) with s = sqrt(delta).
struct QuatElement {
  std::vector<FieldElement> c;

  bool is_zero() const {
    for (const auto& x : c)
      if (!x.is_zero()) return false;
    return true;
  }
  bool operator==(const QuatElement&) const = default;
};

enum class CenterKind { BaseField, QuadraticExtension };

// The quaternion algebra (a,b) over K, where K = F or K = F(sqrt(delta)).
// Presented by i^2 = a, j^2 = b, ij = k = -ji, with sqrt(delta) central.
class QuaternionAlgebra {
 public:
  static QuaternionAlgebra first_kind(FieldElement a, FieldElement b,
                                      std::optional<bool> declared_division = std::nullopt);
  static QuaternionAlgebra unitary_center(FieldElement a, FieldElement b, FieldElement delta,
                                          std::optional<bool> declared_division = std::nullopt);

  const FieldDesc& field() const { return field_; }
  const FieldElement& a() const { return a_; }
  const FieldElement& b() const { return b_; }
  CenterKind center() const { return center_; }
  const FieldElement& delta() const { return delta_; }
  size_t dim() const { return center_ == CenterKind::BaseField ? 4 : 8; }
  bool operator==(const QuaternionAlgebra& o) const {
    return field_ == o.field_ && a_ == o.a_ && b_ == o.b_ && center_ == o.center_ &&
           delta_ == o.delta_;
  }

  QuatElement zero() const;
  QuatElement one() const;
  QuatElement basis(size_t index) const;
  QuatElement from_coords(std::vector<FieldElement> coords) const;
  QuatElement scalar(const FieldElement& x) const;

  QuatElement add(const QuatElement& x, const QuatElement& y) const;
  QuatElement sub(const QuatElement& x, const QuatElement& y) const;
  QuatElement neg(const QuatElement& x) const;
  QuatElement scale(const FieldElement& s, const QuatElement& x) const;
  QuatElement mul(const QuatElement& x, const QuatElement& y) const;

  // Quaternion conjugation (the canonical symplectic involution), K-linear.
  QuatElement conjugate(const QuatElement& x) const;
  // x * conjugate(x) collapsed to K; x is invertible iff this is nonzero.
  CenterValue reduced_norm(const QuatElement& x) const;
  QuatElement inverse(const QuatElement& x) const;
  bool is_invertible(const QuatElement& x) const { return !reduced_norm(x).is_zero(); }

  // Division test: computed over Q for first-kind algebras, declared
  // otherwise (defaults to division).
  bool is_division() const;

  void require_element(const QuatElement& x) const;

 private:
  QuaternionAlgebra() = default;
  FieldDesc field_;
  FieldElement a_, b_;
  CenterKind center_ = CenterKind::BaseField;
  FieldElement delta_;
  std::optional<bool> declared_division_;
};

// A place of Q: the real place or a finite prime.
struct Place {
  bool infinite = false;
  mpz_class p = 0;

  static Place infinity() { return {true, 0}; }
  static Place prime(mpz_class q) { return {false, std::move(q)}; }
};

// Classical local Hilbert symbol (a,b)_v over Q, for nonzero a, b.
int hilbert_symbol(const mpq_class& a, const mpq_class& b, const Place& v);

// The real place plus every prime dividing 2 or the numerators/denominators
// of a and b: outside these the symbol is +1.
std::vector<Place> ramified_candidate_places(const mpq_class& a, const mpq_class& b);

bool is_division_over_rationals(const mpq_class& a, const mpq_class& b);

}  // namespace quatcone
