#include "svir/reproductions.hpp"

#include <stdexcept>

#include "svir/annihilator.hpp"

namespace svir {
namespace {

Element gen(Family f, Kind k, HalfInt i) { return Element(make_basis(f, k, i)); }
Element gen(Family f, Kind k, std::int64_t i) { return Element(make_basis(f, k, i)); }

SuperDerivation ad(Element e) { return SuperDerivation::inner_of(std::move(e)); }

Rational abs_value(const Rational& r) { return r.sign() < 0 ? -r : r; }

nlohmann::ordered_json index_json(HalfInt i) {
  if (i.is_integer()) return i.as_integer();
  return i.str();
}

bool spans_exactly(const DerivationSpace& s, const std::vector<SuperDerivation>& expected) {
  if (s.dimension() != expected.size()) return false;
  for (const auto& d : expected)
    if (!in_span(s, d)) return false;
  return true;
}

// The annihilator of G_i is spanned by ad(L_{2i}).
LemmaReport fermion_annihilator(Family f) {
  LemmaReport r{"lemma3.3"};
  const bool half = f == Family::SVir12;
  for (std::int64_t t = -6; t <= 6; ++t) {
    // svir0: i in -3..3; svir12: i in -5/2..5/2.
    if (half ? (t % 2 == 0) : (t % 2 != 0)) continue;
    if (half && (t < -5 || t > 5)) continue;
    const HalfInt i = HalfInt::from_twice(t);
    const GradedWindow w(abs_value(i.value()) * Rational(2) + Rational(2));
    const DerivationSpace s = annihilator_basis(gen(f, Kind::G, i), w);
    const bool pass = spans_exactly(s, {ad(gen(f, Kind::L, HalfInt::integer(0) + i + i))});
    r.cases.push_back({{"i", index_json(i)}, {"dim", s.dimension()}, {"pass", pass}});
    r.pass = r.pass && pass;
  }
  return r;
}

LemmaReport sw22_fermion_annihilator() {
  const Family f = Family::SW22;
  LemmaReport r{"lemma4.4i"};
  for (std::int64_t k = -2; k <= 2; ++k) {
    const DerivationSpace s = annihilator_basis(gen(f, Kind::G, k), GradedWindow(Rational(2 * std::abs(k) + 2)));
    const bool pass =
        spans_exactly(s, {ad(gen(f, Kind::L, 2 * k)), ad(gen(f, Kind::I, 2 * k)), SuperDerivation::outer(Rational(1))});
    r.cases.push_back({{"r", k}, {"dim", s.dimension()}, {"pass", pass}});
    r.pass = r.pass && pass;
  }
  return r;
}

LemmaReport mixed_annihilator() {
  const Family f = Family::SW22;
  LemmaReport r{"lemma4.4ii"};
  const Element target = gen(f, Kind::I, 0) + gen(f, Kind::Q, 0);
  for (std::int64_t bound = 2; bound <= 4; ++bound) {
    const DerivationSpace s = annihilator_basis(target, GradedWindow(Rational(bound)));
    bool pass = s.dimension() == static_cast<std::size_t>(4 * bound + 4);
    pass = pass && in_span(s, ad(gen(f, Kind::L, 0)));
    pass = pass && in_span(s, ad(gen(f, Kind::L, 1) - Rational(1, 2) * gen(f, Kind::G, 1)));
    for (const auto& d : s.basis) pass = pass && d.outer_lambda().is_zero();
    r.cases.push_back({{"bound", bound}, {"dim", s.dimension()}, {"expected_dim", 4 * bound + 4}, {"pass", pass}});
    r.pass = r.pass && pass;
  }
  return r;
}

LemmaReport tilted_annihilator() {
  const Family f = Family::SW22;
  LemmaReport r{"lemma4.7"};
  for (std::int64_t p : {-3, -1, 1, 3}) {
    const Element target = gen(f, Kind::L, p) + gen(f, Kind::I, 2 * p) + gen(f, Kind::Q, 2 * p);
    const DerivationSpace s = annihilator_basis(target, GradedWindow(Rational(3 * std::abs(p))));
    const bool pass = spans_exactly(s, {ad(target), ad(gen(f, Kind::I, p))});
    r.cases.push_back({{"p", p}, {"dim", s.dimension()}, {"pass", pass}});
    r.pass = r.pass && pass;
  }
  return r;
}

LemmaReport outer_is_derivation() {
  const Family f = Family::SW22;
  LemmaReport r{"lemma4.1-derivation"};
  const SuperDerivation d = SuperDerivation::outer(Rational(1));
  const std::vector<BasisVector> basis = enumerate_basis(f, Rational(3));
  std::size_t pairs = 0, violations = 0;
  for (const auto& x : basis) {
    for (const auto& y : basis) {
      ++pairs;
      if (!leibniz_defect(d, Element(x), Element(y)).is_zero()) ++violations;
    }
  }
  r.pass = violations == 0;
  r.cases.push_back({{"bound", 3}, {"pairs", pairs}, {"violations", violations}, {"pass", r.pass}});
  return r;
}

}  // namespace

nlohmann::ordered_json LemmaReport::to_json() const {
  nlohmann::ordered_json j;
  j["name"] = name;
  j["cases"] = cases;
  j["verdict"] = pass ? "pass" : "fail";
  return j;
}

const std::vector<std::string>& lemma_names() {
  static const std::vector<std::string> names = {"lemma3.3", "lemma4.4i", "lemma4.4ii", "lemma4.7",
                                                 "lemma4.1-derivation"};
  return names;
}

LemmaReport run_lemma(std::string_view name, Family family) {
  if (name == "lemma3.3") return fermion_annihilator(family == Family::SVir12 ? Family::SVir12 : Family::SVir0);
  if (name == "lemma4.4i") return sw22_fermion_annihilator();
  if (name == "lemma4.4ii") return mixed_annihilator();
  if (name == "lemma4.7") return tilted_annihilator();
  if (name == "lemma4.1-derivation") return outer_is_derivation();
  throw std::invalid_argument("unknown lemma '" + std::string(name) + "'");
}

}  // namespace svir
