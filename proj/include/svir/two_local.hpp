#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "svir/annihilator.hpp"

namespace svir {

/// The local map an oracle offers for a pair: a normal-form superderivation,
/// or an arbitrary linear map (only dishonest oracles produce those).
using LocalMap = std::variant<SuperDerivation, RawLinearMap>;

Element apply(const LocalMap& m, const Element& x);

struct QueryResult {
  LocalMap map;
  Element delta_x;
  Element delta_y;
};

/// Query interface of a 2-local superderivation: for every pair (x, y) it
/// returns a map together with the values Delta(x), Delta(y) that the map is
/// supposed to reproduce. `query` must be a pure function of its arguments.
class TwoLocalOracle {
 public:
  using QueryFn = std::function<QueryResult(const Element&, const Element&)>;

  TwoLocalOracle(Family f, QueryFn fn) : family_(f), fn_(std::move(fn)) {}

  Family family() const { return family_; }
  QueryResult query(const Element& x, const Element& y) const { return fn_(x, y); }

  /// query(), then verify the map reproduces both reported values. Throws
  /// OracleDefect otherwise.
  QueryResult checked_query(const Element& x, const Element& y) const;

 private:
  Family family_;
  QueryFn fn_;
};

/// Elements on which globalization is checked: every basis vector within
/// the window, then `random_count` pseudo-random elements drawn from `seed`.
struct TestSet {
  GradedWindow basis_bound{Rational(3)};
  std::size_t random_count = 20;
  std::uint64_t seed = 0;

  std::vector<Element> elements(Family f) const;
};

/// 2 to 4 distinct basis terms with |index| <= bound, coefficients from a
/// fixed small set. Never zero and never a multiple of one basis vector.
template <class Rng>
Element random_element(Family f, const Rational& bound, Rng& rng);

struct Anchors {
  Element first;
  Element second;
  std::optional<Element> third;
};

/// (G_0, G_1) for svir0, (G_{1/2}, G_{3/2}) for svir12, and
/// (G_0, G_1, I_0 + Q_0) for sw22. Throws UnsupportedFamily for vir.
Anchors anchor_pair(Family f);

struct Check {
  Element element;
  Element expected;
  Element got;
  bool pass = false;
};

struct Certificate {
  Family family = Family::SVir0;
  SuperDerivation candidate{Family::SVir0};
  Rational mu;
  std::vector<Check> checks;
  bool pass = false;
  std::optional<Element> failure_witness;
};

/// Reconstructs the global superderivation behind a 2-local oracle and
/// checks it on the test set:
///   1. query the anchor pair and take the returned derivation (its outer
///      part, invisible on the anchors, is dropped);
///   2. sw22 only: the residual at I_0 + Q_0 must be mu * (I_0 + Q_0), and
///      mu * D is added to the candidate;
///   3. compare Delta(e), read as query(anchor_1, e).delta_y, with the
///      candidate on every test element.
/// Throws UnsupportedFamily (vir) and OracleDefect.
Certificate globalize(const TwoLocalOracle& o, const TestSet& t);

nlohmann::ordered_json to_json(const Certificate& c);

/// Oracle for Delta = apply(d, .). Each answer is d plus a seeded random
/// combination of the common annihilator of the queried pair inside
/// `mask_window`; a window of bound 0 disables masking.
TwoLocalOracle make_honest_oracle(const SuperDerivation& d, const GradedWindow& mask_window, std::uint64_t seed);

enum class AdversaryKind { CoefficientSquare, ShiftMap, PairwiseInconsistent };

std::string_view adversary_name(AdversaryKind k);  // "coefficient_square", ...
AdversaryKind parse_adversary(std::string_view name);

/// Oracles whose Delta is not a superderivation:
///   coefficient_square     Delta(sum c_i b_i) = sum c_i^2 b_i
///   shift_map              Delta(L_m) = L_{m+1}, zero on other generators
///   pairwise_inconsistent  ad(L_0) for pairs touching the second anchor,
///                          ad(2 L_0) otherwise
TwoLocalOracle make_adversarial_oracle(AdversaryKind kind, Family f);

/// For each (k, x): does Delta(kx) = k Delta(x), with Delta read through
/// diagonal queries. Throws OracleDefect.
std::vector<bool> homogeneity_check(const TwoLocalOracle& o, const std::vector<std::pair<Rational, Element>>& samples);

/// A raw linear map sending x to dx and y to dy, when one exists.
std::optional<RawLinearMap> interpolating_map(const Element& x, const Element& dx, const Element& y, const Element& dy);

// ---------------------------------------------------------------- inline

template <class Rng>
Element random_element(Family f, const Rational& bound, Rng& rng) {
  static const Rational kCoefficients[] = {Rational(-2), Rational(-1), Rational(-1, 2), Rational(1, 2),
                                           Rational(1),  Rational(2),  Rational(3)};
  const std::vector<BasisVector> basis = enumerate_basis(f, bound);
  const std::size_t want = std::min<std::size_t>(2 + rng() % 3, basis.size());
  Element out(f);
  while (out.size() < want) {
    const BasisVector& b = basis[rng() % basis.size()];
    if (!out.coefficient(b).is_zero()) continue;
    out.add_term(b, kCoefficients[rng() % std::size(kCoefficients)]);
  }
  return out;
}

}  // namespace svir
