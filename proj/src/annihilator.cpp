#include "svir/annihilator.hpp"

#include <stdexcept>
#include <utility>

#include "svir/errors.hpp"

namespace svir {

GradedWindow::GradedWindow(Rational bound) : bound_(std::move(bound)) {
  if (bound_.sign() < 0) throw std::invalid_argument("window bound must be non-negative");
}

std::string Generator::str() const {
  if (outer) return "D";
  return "ad(" + std::string(kind_name(basis.kind)) + "[" + basis.index.str() + "])";
}

std::vector<Generator> window_generators(Family f, const GradedWindow& w) {
  std::vector<Generator> out;
  for (const auto& b : enumerate_basis(f, w.bound(), /*include_central=*/false)) out.push_back({false, b});
  if (f == Family::SW22) out.push_back({true, {}});
  return out;
}

SuperDerivation as_derivation(Family f, const Generator& g) {
  if (g.outer) return SuperDerivation::outer(Rational(1));
  if (g.basis.family != f) throw FamilyMismatch("generator from another family");
  return SuperDerivation::inner_of(Element(g.basis));
}

SuperDerivation assemble(Family f, std::span<const Generator> generators, std::span<const Rational> coeffs) {
  if (generators.size() != coeffs.size()) throw std::invalid_argument("coefficient count mismatch");
  Element inner(f);
  Rational lambda;
  for (std::size_t j = 0; j < generators.size(); ++j) {
    if (coeffs[j].is_zero()) continue;
    if (generators[j].outer)
      lambda += coeffs[j];
    else
      inner.add_term(generators[j].basis, coeffs[j]);
  }
  return SuperDerivation(std::move(inner), std::move(lambda));
}

linalg::DenseVector coordinates(const SuperDerivation& d, std::span<const Generator> generators) {
  linalg::DenseVector v(generators.size());
  std::size_t used = 0;
  for (std::size_t j = 0; j < generators.size(); ++j) {
    const Generator& g = generators[j];
    v[j] = g.outer ? d.outer_lambda() : d.inner().coefficient(g.basis);
    if (!v[j].is_zero()) ++used;
  }
  const std::size_t needed = d.inner().size() + (d.outer_lambda().is_zero() ? 0 : 1);
  if (used != needed) throw std::out_of_range("derivation support outside the generator list");
  return v;
}

namespace {

template <class RowLabel, class MakeRow>
void fill_columns(linalg::LabeledMatrix<RowLabel, Generator>& m, Family f, const Element& target, MakeRow make_row) {
  const auto& gens = m.col_labels();
  for (std::size_t j = 0; j < gens.size(); ++j) {
    const Element image = apply(as_derivation(f, gens[j]), target);
    for (const auto& [b, c] : image.terms()) m.accumulate(make_row(b), j, c);
  }
}

std::vector<SuperDerivation> kernel_derivations(Family f, const std::vector<Generator>& gens,
                                                const std::vector<linalg::DenseVector>& kernel) {
  std::vector<SuperDerivation> out;
  out.reserve(kernel.size());
  for (const auto& v : kernel) out.push_back(assemble(f, gens, v));
  return out;
}

}  // namespace

EvaluationMatrix evaluation_matrix(const Element& target, const GradedWindow& w) {
  if (target.is_zero()) throw ZeroTarget("annihilator target must be nonzero");
  EvaluationMatrix m(window_generators(target.family(), w));
  fill_columns(m, target.family(), target, [](const BasisVector& b) { return b; });
  return m;
}

DerivationSpace annihilator_basis(const Element& target, const GradedWindow& w) {
  const EvaluationMatrix m = evaluation_matrix(target, w);
  return DerivationSpace{kernel_derivations(target.family(), m.col_labels(), linalg::kernel_basis(m)), w, target};
}

std::vector<SuperDerivation> common_annihilator(Family f, std::span<const Element> targets, const GradedWindow& w) {
  linalg::LabeledMatrix<std::pair<std::size_t, BasisVector>, Generator> m(window_generators(f, w));
  for (std::size_t t = 0; t < targets.size(); ++t) {
    if (targets[t].family() != f) throw FamilyMismatch("annihilator target from another family");
    fill_columns(m, f, targets[t], [t](const BasisVector& b) { return std::pair{t, b}; });
  }
  return kernel_derivations(f, m.col_labels(), linalg::kernel_basis(m));
}

bool in_span(const DerivationSpace& space, const SuperDerivation& d) {
  const Family f = space.target.family();
  const std::vector<Generator> gens = window_generators(f, space.window);
  linalg::DenseVector target_coords;
  try {
    target_coords = coordinates(d, gens);
  } catch (const std::out_of_range&) {
    return false;
  }
  std::vector<linalg::SparseRow> rows;
  auto to_row = [](const linalg::DenseVector& v) {
    linalg::SparseRow r;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!v[j].is_zero()) r.emplace(j, v[j]);
    return r;
  };
  for (const auto& member : space.basis) rows.push_back(to_row(coordinates(member, gens)));
  const std::size_t before = linalg::rank(rows, gens.size());
  rows.push_back(to_row(target_coords));
  return linalg::rank(rows, gens.size()) == before;
}

}  // namespace svir
