#include "quatcone/tower.hpp"

namespace quatcone {

namespace {

void require_same_tower(const TowerElement& a, const TowerElement& b) {
  if (a.tower() != b.tower()) fail(Errc::TowerMismatch, "elements of different towers");
}

// Elements created before the tower grew keep their meaning: new generators
// append high bits, so padding with zeros is the identity embedding.
std::vector<FieldElement> padded(const TowerElement& x) {
  std::vector<FieldElement> c = x.coords();
  c.resize(x.tower()->dim(), FieldElement(x.tower()->field()));
  return c;
}

}  // namespace

bool TowerElement::is_zero() const {
  for (const auto& x : c_)
    if (!x.is_zero()) return false;
  return true;
}

bool TowerElement::in_base_field() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return false;
  return true;
}

TowerElement TowerElement::operator-() const {
  std::vector<FieldElement> r = c_;
  for (auto& x : r) x = -x;
  return {tower_, std::move(r)};
}

TowerElement TowerElement::operator+(const TowerElement& o) const {
  require_same_tower(*this, o);
  std::vector<FieldElement> r = padded(*this);
  std::vector<FieldElement> s = padded(o);
  for (size_t i = 0; i < r.size(); ++i) r[i] += s[i];
  return {tower_, std::move(r)};
}

TowerElement TowerElement::operator-(const TowerElement& o) const { return *this + (-o); }

TowerElement TowerElement::operator*(const TowerElement& o) const {
  require_same_tower(*this, o);
  std::vector<FieldElement> xc = padded(*this);
  std::vector<FieldElement> yc = padded(o);
  const size_t d = xc.size();
  std::vector<FieldElement> r(d, FieldElement(tower_->field()));
  for (size_t s = 0; s < d; ++s) {
    if (xc[s].is_zero()) continue;
    for (size_t t = 0; t < d; ++t) {
      if (yc[t].is_zero()) continue;
      // basis_s * basis_t = (prod of shared radicands) * basis_{s xor t}
      FieldElement coeff = xc[s] * yc[t];
      size_t shared = s & t;
      for (size_t i = 0; shared >> i; ++i)
        if ((shared >> i) & 1) coeff *= tower_->generator(i);
      r[s ^ t] += coeff;
    }
  }
  return {tower_, std::move(r)};
}

TowerElement TowerElement::scaled(const FieldElement& s) const {
  std::vector<FieldElement> r = c_;
  for (auto& x : r) x *= s;
  return {tower_, std::move(r)};
}

TowerElement TowerElement::conjugated(size_t gen_index) const {
  std::vector<FieldElement> r = padded(*this);
  for (size_t s = 0; s < r.size(); ++s)
    if ((s >> gen_index) & 1) r[s] = -r[s];
  return {tower_, std::move(r)};
}

namespace {

// Inverse by conjugation-norm descent on the top generator: with
// x = a + b*sqrt(g_k), x * (a - b*sqrt(g_k)) = a^2 - g_k b^2 lives one level
// down; recurse to the base field.
std::vector<FieldElement> inverse_rec(const Tower& tw, std::vector<FieldElement> v, size_t levels) {
  if (levels == 0) return {v[0].inverse()};
  size_t half = size_t{1} << (levels - 1);
  std::vector<FieldElement> a(v.begin(), v.begin() + half);
  std::vector<FieldElement> b(v.begin() + half, v.end());
  const FieldElement& g = tw.generator(levels - 1);
  // norm = a^2 - g b^2 over the sub-tower
  std::vector<FieldElement> norm(half, FieldElement(tw.field()));
  auto submul = [&](const std::vector<FieldElement>& x, const std::vector<FieldElement>& y,
                    const FieldElement& scale, std::vector<FieldElement>* acc) {
    for (size_t s = 0; s < half; ++s) {
      if (x[s].is_zero()) continue;
      for (size_t t = 0; t < half; ++t) {
        if (y[t].is_zero()) continue;
        FieldElement coeff = x[s] * y[t] * scale;
        size_t shared = s & t;
        for (size_t i = 0; shared >> i; ++i)
          if ((shared >> i) & 1) coeff *= tw.generator(i);
        (*acc)[s ^ t] += coeff;
      }
    }
  };
  submul(a, a, FieldElement::integer(1, tw.field()), &norm);
  submul(b, b, -g, &norm);
  std::vector<FieldElement> ninv = inverse_rec(tw, norm, levels - 1);
  // result = (a - b sqrt(g)) * ninv
  std::vector<FieldElement> ra(half, FieldElement(tw.field()));
  std::vector<FieldElement> rb(half, FieldElement(tw.field()));
  submul(a, ninv, FieldElement::integer(1, tw.field()), &ra);
  submul(b, ninv, FieldElement::integer(-1, tw.field()), &rb);
  ra.insert(ra.end(), rb.begin(), rb.end());
  return ra;
}

}  // namespace

TowerElement TowerElement::inverse() const {
  if (is_zero()) fail(Errc::DivisionByZero, "inverse of zero tower element");
  return {tower_, inverse_rec(*tower_, padded(*this), tower_->generator_count())};
}

bool TowerElement::operator==(const TowerElement& o) const {
  require_same_tower(*this, o);
  return padded(*this) == padded(o);
}

size_t Tower::add_radicand(const FieldElement& s) {
  if (sign_at(s, P_) <= 0) fail(Errc::Unsupported, "tower radicand must be positive at P");
  // Look for a dependency: s * prod_{i in mask} g_i a square in F.
  for (size_t mask = 0; mask < dim(); ++mask) {
    FieldElement prod = s;
    FieldElement denom = FieldElement::integer(1, field());
    for (size_t i = 0; mask >> i; ++i)
      if ((mask >> i) & 1) {
        prod *= gens_[i];
        denom *= gens_[i];
      }
    if (auto r = exact_sqrt(prod)) {
      FieldElement root = *r;
      if (sign_at(root, P_) < 0) root = -root;
      aliases_.push_back({mask, root / denom});
      return aliases_.size() - 1;
    }
  }
  gens_.push_back(s);
  aliases_.push_back({dim() >> 1, FieldElement::integer(1, field())});
  return aliases_.size() - 1;
}

TowerElement Tower::sqrt_of(size_t handle) const {
  const Alias& al = aliases_.at(handle);
  std::vector<FieldElement> c(dim(), FieldElement(field()));
  c[al.mask] = al.coeff;
  return {this, std::move(c)};
}

TowerElement Tower::embed(const FieldElement& x) const {
  if (!(x.field() == field())) fail(Errc::FieldMismatch, "embedding from a different field");
  std::vector<FieldElement> c(dim(), FieldElement(field()));
  c[0] = x;
  return {this, std::move(c)};
}

TowerElement Tower::from_coords(std::vector<FieldElement> coords) const {
  if (coords.size() != dim()) fail(Errc::TowerMismatch, "coordinate count mismatch");
  return {this, std::move(coords)};
}

DyadicInterval Tower::enclose(const TowerElement& x, long bits) const {
  std::vector<DyadicInterval> gen_roots;
  gen_roots.reserve(gens_.size());
  for (const auto& g : gens_) gen_roots.push_back(approx(g, P_, bits).sqrt_enclose(bits));
  DyadicInterval total = DyadicInterval::point(0, 0);
  for (size_t s = 0; s < x.coords().size(); ++s) {
    if (x.coord(s).is_zero()) continue;
    DyadicInterval term = approx(x.coord(s), P_, bits);
    for (size_t i = 0; s >> i; ++i)
      if ((s >> i) & 1) term = term * gen_roots[i];
    total = total + term;
  }
  return total;
}

int Tower::sign(const TowerElement& x) const {
  if (x.tower() != this) fail(Errc::TowerMismatch, "sign query against a different tower");
  if (x.is_zero()) return 0;
  if (x.in_base_field()) return sign_at(x.coord(0), P_);
  // All nonzero slots of one sign settle it: basis values are positive at P.
  int common = 0;
  bool uniform = true;
  for (const auto& coeff : x.coords()) {
    if (coeff.is_zero()) continue;
    int s = sign_at(coeff, P_);
    if (common == 0) common = s;
    else if (common != s) { uniform = false; break; }
  }
  if (uniform) return common;
  // Zero was excluded exactly, so refinement terminates.
  for (long bits = 32;; bits *= 2) {
    int s = enclose(x, bits).sign();
    if (s != 0) return s;
    if (bits > (1L << 22)) fail(Errc::Internal, "sign refinement failed to separate from zero");
  }
}

}  // namespace quatcone
