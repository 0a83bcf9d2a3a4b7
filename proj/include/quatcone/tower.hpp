#pragma once

#include <cstddef>
#include <vector>

#include "quatcone/field.hpp"

namespace quatcone {

class Tower;

// Element of a multi-quadratic extension F(sqrt(s_1), ..., sqrt(s_t)):
// coefficient vector over F indexed by subsets of the generators, where
// slot S carries the basis product prod_{i in S} sqrt(s_i).
class TowerElement {
 public:
  TowerElement() = default;
  TowerElement(const Tower* tw, std::vector<FieldElement> coords)
      : tower_(tw), c_(std::move(coords)) {}

  const Tower* tower() const { return tower_; }
  const std::vector<FieldElement>& coords() const { return c_; }
  const FieldElement& coord(size_t mask) const { return c_[mask]; }
  bool is_zero() const;
  // True when the element lies in F (only the empty-subset slot is used).
  bool in_base_field() const;

  TowerElement operator-() const;
  TowerElement operator+(const TowerElement& o) const;
  TowerElement operator-(const TowerElement& o) const;
  TowerElement operator*(const TowerElement& o) const;
  TowerElement inverse() const;
  TowerElement scaled(const FieldElement& s) const;
  // Ring automorphism flipping the sign of generator i.
  TowerElement conjugated(size_t gen_index) const;

  bool operator==(const TowerElement& o) const;

 private:
  const Tower* tower_ = nullptr;
  std::vector<FieldElement> c_;
};

// The real multi-quadratic tower over (F, P). Requested radicands that are
// dependent on earlier ones (their product with some subset of generators is
// a square in F) are stored as aliases so the basis stays linearly
// independent and the zero test stays coordinatewise.
class Tower {
 public:
  explicit Tower(Ordering P) : P_(std::move(P)) {}

  const Ordering& ordering() const { return P_; }
  const FieldDesc& field() const { return P_.field; }
  size_t generator_count() const { return gens_.size(); }
  size_t dim() const { return size_t{1} << gens_.size(); }
  const FieldElement& generator(size_t i) const { return gens_[i]; }

  // Adjoins sqrt(s) for s positive at P; returns a handle usable with
  // sqrt_of. Dependent radicands are deduplicated, not duplicated.
  size_t add_radicand(const FieldElement& s);
  TowerElement sqrt_of(size_t radicand_handle) const;

  TowerElement zero() const { return embed(FieldElement(field())); }
  TowerElement one() const { return embed(FieldElement::integer(1, field())); }
  TowerElement embed(const FieldElement& x) const;
  TowerElement from_coords(std::vector<FieldElement> coords) const;

  // Exact sign of x at P: coordinatewise zero test first, then interval
  // refinement on a doubling precision schedule (32, 64, ...).
  int sign(const TowerElement& x) const;
  DyadicInterval enclose(const TowerElement& x, long bits) const;

 private:
  Ordering P_;
  std::vector<FieldElement> gens_;
  struct Alias {
    size_t mask;
    FieldElement coeff;  // sqrt(s) = coeff * basis[mask]
  };
  std::vector<Alias> aliases_;
};

// Element of tower(...)(sqrt(-1)), stored as a complex pair. The formal
// imaginary unit never participates in sign queries; callers take signs of
// the real part only after checking the imaginary part vanishes.
struct ComplexTowerElement {
  TowerElement re;
  TowerElement im;

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_real() const { return im.is_zero(); }

  ComplexTowerElement operator-() const { return {-re, -im}; }
  ComplexTowerElement operator+(const ComplexTowerElement& o) const {
    return {re + o.re, im + o.im};
  }
  ComplexTowerElement operator-(const ComplexTowerElement& o) const {
    return {re - o.re, im - o.im};
  }
  ComplexTowerElement operator*(const ComplexTowerElement& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  ComplexTowerElement conjugated() const { return {re, -im}; }
  bool operator==(const ComplexTowerElement& o) const { return re == o.re && im == o.im; }

  static ComplexTowerElement real(TowerElement x, const Tower& tw) {
    return {std::move(x), tw.zero()};
  }
  static ComplexTowerElement imaginary(TowerElement x, const Tower& tw) {
    return {tw.zero(), std::move(x)};
  }
};

}  // namespace quatcone
