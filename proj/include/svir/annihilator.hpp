#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "svir/derivations.hpp"
#include "svir/linalg.hpp"

namespace svir {

/// Finite index range |i| <= bound bounding the support of the inner part
/// of a derivation. Choosing bound >= 2 * (max |index| of the target) + 2
/// keeps every kernel member predicted by the structure theory inside.
class GradedWindow {
 public:
  /// Throws std::invalid_argument for a negative bound.
  explicit GradedWindow(Rational bound);
  const Rational& bound() const { return bound_; }

 private:
  Rational bound_;
};

/// Column tag of an evaluation matrix: ad(basis) or the outer derivation D.
struct Generator {
  bool outer = false;
  BasisVector basis;  // meaningful only when !outer

  std::string str() const;
  auto operator<=>(const Generator&) const = default;
};

/// ad(b) for every non-central b in the window (kind order, then index),
/// followed by D for SW22.
std::vector<Generator> window_generators(Family f, const GradedWindow& w);

SuperDerivation as_derivation(Family f, const Generator& g);

/// Derivation sum_j coeffs[j] * generators[j].
SuperDerivation assemble(Family f, std::span<const Generator> generators, std::span<const Rational> coeffs);

/// Coordinates of d over `generators`. Throws std::out_of_range when d uses a
/// generator outside the list.
linalg::DenseVector coordinates(const SuperDerivation& d, std::span<const Generator> generators);

using EvaluationMatrix = linalg::LabeledMatrix<BasisVector, Generator>;

/// Column j holds the coefficients of generator j applied to `target`; rows
/// are the basis vectors met along the way. Throws ZeroTarget.
EvaluationMatrix evaluation_matrix(const Element& target, const GradedWindow& w);

struct DerivationSpace {
  std::vector<SuperDerivation> basis;
  GradedWindow window;
  Element target;

  std::size_t dimension() const { return basis.size(); }
};

/// Window-supported derivations killing `target`, as the canonical echelon
/// basis over the generator order. Throws ZeroTarget.
DerivationSpace annihilator_basis(const Element& target, const GradedWindow& w);

/// Window-supported derivations killing every target at once. Zero targets
/// impose no condition. Basis returned in the same canonical form.
std::vector<SuperDerivation> common_annihilator(Family f, std::span<const Element> targets, const GradedWindow& w);

/// Whether d (with support inside the window) lies in the span of the space.
bool in_span(const DerivationSpace& space, const SuperDerivation& d);

}  // namespace svir
