#pragma once

#include <map>
#include <utility>

#include "svir/superalgebra.hpp"

namespace svir {

/// Superderivation in normal form: ad(inner) + outer_lambda * D, where D is
/// the outer derivation of SW(2,2) fixing I_m, Q_r, C2 and killing L_m, G_r,
/// C1. Central terms of `inner` are stripped on construction.
class SuperDerivation {
 public:
  explicit SuperDerivation(Family f) : inner_(f) {}
  /// Throws UnsupportedFamily if lambda != 0 outside SW22.
  SuperDerivation(Element inner, Rational outer_lambda);

  static SuperDerivation inner_of(Element a) { return SuperDerivation(std::move(a), Rational(0)); }
  /// The pure outer derivation lambda * D (SW22 only).
  static SuperDerivation outer(Rational lambda);

  Family family() const { return inner_.family(); }
  const Element& inner() const { return inner_; }
  const Rational& outer_lambda() const { return outer_lambda_; }
  bool is_zero() const { return inner_.is_zero() && outer_lambda_.is_zero(); }

  SuperDerivation& operator+=(const SuperDerivation& o);
  SuperDerivation& operator*=(const Rational& k);
  friend SuperDerivation operator+(SuperDerivation a, const SuperDerivation& b) { return a += b; }
  friend SuperDerivation operator*(const Rational& k, SuperDerivation a) { return a *= k; }

  bool operator==(const SuperDerivation&) const = default;

 private:
  Element inner_;
  Rational outer_lambda_;
};

/// The outer derivation D of SW(2,2) applied to x.
Element outer_action(const Element& x);

/// ad(inner)(x) + lambda * D(x). Throws FamilyMismatch.
Element apply(const SuperDerivation& d, const Element& x);

/// (even part, odd part); the outer coefficient goes with the even part.
std::pair<SuperDerivation, SuperDerivation> derivation_parity_components(const SuperDerivation& d);

/// A linear map given by a finite table on basis vectors (unlisted vectors
/// map to zero) with a declared parity. Used to represent maps that need not
/// be derivations.
class RawLinearMap {
 public:
  explicit RawLinearMap(Family f, Parity p = Parity::Even) : family_(f), parity_(p) {}

  void set(const BasisVector& b, Element image);

  Family family() const { return family_; }
  Parity parity() const { return parity_; }
  const std::map<BasisVector, Element>& table() const { return table_; }

  Element operator()(const Element& x) const;

 private:
  Family family_;
  Parity parity_;
  std::map<BasisVector, Element> table_;
};

inline Element apply(const RawLinearMap& m, const Element& x) { return m(x); }

/// d([x,y]) minus the super-Leibniz right-hand side, expanded over the
/// homogeneous components of d and x. Zero iff the rule holds on (x, y).
Element leibniz_defect(const SuperDerivation& d, const Element& x, const Element& y);
Element leibniz_defect(const RawLinearMap& m, const Element& x, const Element& y);

}  // namespace svir
