#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "svir/rational.hpp"

namespace svir {

/// The four algebras: the Virasoro algebra, the Ramond (SVir0) and
/// Neveu-Schwarz (SVir12) super Virasoro algebras, and super W(2,2).
enum class Family { Vir, SVir0, SVir12, SW22 };

/// Generator kinds, declared in canonical print order.
enum class Kind { L, G, I, Q, C, C1, C2 };

enum class Parity { Even, Odd };

std::string_view family_name(Family f);  // "vir", "svir0", "svir12", "sw22"
Family parse_family(std::string_view name);
std::string_view kind_name(Kind k);

inline Parity operator+(Parity a, Parity b) { return a == b ? Parity::Even : Parity::Odd; }
/// (-1)^{|a||b|}
inline int sign_of(Parity a, Parity b) { return (a == Parity::Odd && b == Parity::Odd) ? -1 : 1; }

bool is_central(Kind k);
bool family_has_kind(Family f, Kind k);

/// Mode index with denominator 1 or 2, stored as twice its value.
class HalfInt {
 public:
  constexpr HalfInt() = default;
  static constexpr HalfInt from_twice(std::int64_t twice) { return HalfInt(twice); }
  static constexpr HalfInt integer(std::int64_t n) { return HalfInt(2 * n); }
  /// Throws IndexNotInSector if r is not an integer or half-integer.
  static HalfInt from_rational(const Rational& r);

  constexpr std::int64_t twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  /// Value of an integral index.
  constexpr std::int64_t as_integer() const { return twice_ / 2; }
  Rational value() const { return Rational(twice_, 2); }
  /// "n" or "n/2".
  std::string str() const;

  constexpr HalfInt operator+(HalfInt o) const { return HalfInt(twice_ + o.twice_); }
  constexpr HalfInt operator-() const { return HalfInt(-twice_); }
  constexpr bool is_zero() const { return twice_ == 0; }
  constexpr auto operator<=>(const HalfInt&) const = default;

 private:
  constexpr explicit HalfInt(std::int64_t twice) : twice_(twice) {}
  std::int64_t twice_ = 0;
};

/// One generator. Central kinds carry index 0.
struct BasisVector {
  Family family = Family::Vir;
  Kind kind = Kind::L;
  HalfInt index;

  auto operator<=>(const BasisVector&) const = default;
};

/// Validated constructor: throws KindNotInFamily or IndexNotInSector.
BasisVector make_basis(Family f, Kind k, HalfInt index = {});
/// Shorthand for integer indices.
BasisVector make_basis(Family f, Kind k, std::int64_t index);

Parity parity(const BasisVector& b);
Parity parity(Kind k);

/// Whether `index` is a legal mode for kind `k` in family `f`.
bool index_in_sector(Family f, Kind k, HalfInt index);

/// Finitely supported linear combination of basis vectors with exact
/// coefficients. Zero coefficients are never stored, so equality of the term
/// maps is equality of elements.
class Element {
 public:
  using Terms = std::map<BasisVector, Rational>;

  explicit Element(Family f) : family_(f) {}
  Element(const BasisVector& b, Rational coeff = Rational(1));

  Family family() const { return family_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const BasisVector& b) const;

  /// Adds coeff*b; throws FamilyMismatch if b belongs to another family.
  void add_term(const BasisVector& b, const Rational& coeff);

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Rational& k);

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Rational& k, Element a) { return a *= k; }
  friend Element operator-(Element a) { return a *= Rational(-1); }

  bool operator==(const Element& o) const = default;

 private:
  Family family_;
  Terms terms_;
};

/// Even and odd homogeneous parts.
std::pair<Element, Element> parity_decompose(const Element& x);

/// Bracket of two basis vectors from the defining relations. Pairs not listed
/// there bracket to zero; reversed pairs follow from super anti-symmetry.
Element bracket(const BasisVector& u, const BasisVector& v);

/// Bilinear extension; throws FamilyMismatch.
Element bracket(const Element& x, const Element& y);

/// Every basis vector of `f` with |index| <= bound, ordered by kind then
/// index. Central vectors are included when `include_central` is set.
std::vector<BasisVector> enumerate_basis(Family f, const Rational& bound, bool include_central = true);

struct StructureReport {
  std::size_t pairs = 0;
  std::size_t triples = 0;
  std::size_t antisymmetry_violations = 0;
  std::size_t jacobi_violations = 0;
  std::size_t violations() const { return antisymmetry_violations + jacobi_violations; }
};

/// Sweeps every ordered basis pair and triple with |index| <= bound, counting
/// failures of super anti-symmetry (pairs) and of the graded Jacobi identity
/// in Leibniz form (triples).
StructureReport check_structure(Family f, const Rational& bound);

}  // namespace svir
