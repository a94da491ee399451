#include "svir/derivations.hpp"

#include <functional>
#include <vector>

#include "svir/errors.hpp"

namespace svir {
namespace {

Element strip_central(const Element& a) {
  Element out(a.family());
  for (const auto& [b, c] : a.terms())
    if (!is_central(b.kind)) out.add_term(b, c);
  return out;
}

struct HomogeneousPart {
  Parity parity;
  std::function<Element(const Element&)> map;
};

Element defect_over_components(const std::vector<HomogeneousPart>& parts, const Element& x, const Element& y) {
  if (x.family() != y.family()) throw FamilyMismatch("leibniz_defect arguments from different families");
  Element out(x.family());
  const Element xy = bracket(x, y);
  for (const auto& part : parts) out += part.map(xy);

  const auto [x_even, x_odd] = parity_decompose(x);
  for (const auto& part : parts) {
    const Element dy = part.map(y);
    for (const auto& [xq, q] : {std::pair{&x_even, Parity::Even}, std::pair{&x_odd, Parity::Odd}}) {
      if (xq->is_zero()) continue;
      out -= bracket(part.map(*xq), y);
      Element second = bracket(*xq, dy);
      second *= Rational(sign_of(part.parity, q));
      out -= second;
    }
  }
  return out;
}

}  // namespace

SuperDerivation::SuperDerivation(Element inner, Rational outer_lambda)
    : inner_(strip_central(inner)), outer_lambda_(std::move(outer_lambda)) {
  if (!outer_lambda_.is_zero() && inner_.family() != Family::SW22)
    throw UnsupportedFamily("outer derivation exists only in sw22");
}

SuperDerivation SuperDerivation::outer(Rational lambda) {
  return SuperDerivation(Element(Family::SW22), std::move(lambda));
}

SuperDerivation& SuperDerivation::operator+=(const SuperDerivation& o) {
  if (o.family() != family()) throw FamilyMismatch("adding derivations of different families");
  inner_ += o.inner_;
  outer_lambda_ += o.outer_lambda_;
  return *this;
}

SuperDerivation& SuperDerivation::operator*=(const Rational& k) {
  inner_ *= k;
  outer_lambda_ *= k;
  return *this;
}

Element outer_action(const Element& x) {
  Element out(x.family());
  if (x.family() != Family::SW22) return out;
  for (const auto& [b, c] : x.terms())
    if (b.kind == Kind::I || b.kind == Kind::Q || b.kind == Kind::C2) out.add_term(b, c);
  return out;
}

Element apply(const SuperDerivation& d, const Element& x) {
  if (d.family() != x.family()) throw FamilyMismatch("derivation and element from different families");
  Element out = bracket(d.inner(), x);
  if (!d.outer_lambda().is_zero()) out += d.outer_lambda() * outer_action(x);
  return out;
}

std::pair<SuperDerivation, SuperDerivation> derivation_parity_components(const SuperDerivation& d) {
  auto [even, odd] = parity_decompose(d.inner());
  return {SuperDerivation(std::move(even), d.outer_lambda()), SuperDerivation(std::move(odd), Rational(0))};
}

void RawLinearMap::set(const BasisVector& b, Element image) {
  if (b.family != family_ || image.family() != family_) throw FamilyMismatch("raw map entry from another family");
  if (image.is_zero())
    table_.erase(b);
  else
    table_.insert_or_assign(b, std::move(image));
}

Element RawLinearMap::operator()(const Element& x) const {
  if (x.family() != family_) throw FamilyMismatch("raw map applied to element of another family");
  Element out(family_);
  for (const auto& [b, c] : x.terms()) {
    auto it = table_.find(b);
    if (it != table_.end()) out += c * it->second;
  }
  return out;
}

Element leibniz_defect(const SuperDerivation& d, const Element& x, const Element& y) {
  if (d.family() != x.family()) throw FamilyMismatch("derivation and element from different families");
  const auto [even, odd] = derivation_parity_components(d);
  std::vector<HomogeneousPart> parts;
  if (!even.is_zero()) parts.push_back({Parity::Even, [e = even](const Element& z) { return apply(e, z); }});
  if (!odd.is_zero()) parts.push_back({Parity::Odd, [o = odd](const Element& z) { return apply(o, z); }});
  return defect_over_components(parts, x, y);
}

Element leibniz_defect(const RawLinearMap& m, const Element& x, const Element& y) {
  if (m.family() != x.family()) throw FamilyMismatch("map and element from different families");
  return defect_over_components({{m.parity(), [&m](const Element& z) { return m(z); }}}, x, y);
}

}  // namespace svir
