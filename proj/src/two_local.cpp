#include "svir/two_local.hpp"

#include <random>
#include <stdexcept>

#include "svir/errors.hpp"
#include "svir/expr.hpp"

namespace svir {
namespace {

// FNV-1a; stable across platforms so per-pair seeds are reproducible.
std::uint64_t mix(std::uint64_t h, std::string_view bytes) {
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t pair_seed(std::uint64_t seed, const Element& x, const Element& y) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (int i = 0; i < 8; ++i) h = mix(h, std::string(1, static_cast<char>((seed >> (8 * i)) & 0xff)));
  h = mix(h, format_element(x));
  h = mix(h, "|");
  return mix(h, format_element(y));
}

}  // namespace

Element apply(const LocalMap& m, const Element& x) {
  return std::visit([&x](const auto& map) { return apply(map, x); }, m);
}

QueryResult TwoLocalOracle::checked_query(const Element& x, const Element& y) const {
  if (x.family() != family_ || y.family() != family_) throw FamilyMismatch("query from another family");
  QueryResult r = query(x, y);
  if (svir::apply(r.map, x) != r.delta_x)
    throw OracleDefect("returned map disagrees with reported value at " + format_element(x));
  if (svir::apply(r.map, y) != r.delta_y)
    throw OracleDefect("returned map disagrees with reported value at " + format_element(y));
  return r;
}

std::vector<Element> TestSet::elements(Family f) const {
  std::vector<Element> out;
  for (const auto& b : enumerate_basis(f, basis_bound.bound())) out.emplace_back(b);
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < random_count; ++i) out.push_back(random_element(f, basis_bound.bound(), rng));
  return out;
}

Anchors anchor_pair(Family f) {
  switch (f) {
    case Family::SVir0:
      return {Element(make_basis(f, Kind::G, 0)), Element(make_basis(f, Kind::G, 1)), std::nullopt};
    case Family::SVir12:
      return {Element(make_basis(f, Kind::G, HalfInt::from_twice(1))),
              Element(make_basis(f, Kind::G, HalfInt::from_twice(3))), std::nullopt};
    case Family::SW22:
      return {Element(make_basis(f, Kind::G, 0)), Element(make_basis(f, Kind::G, 1)),
              Element(make_basis(f, Kind::I, 0)) + Element(make_basis(f, Kind::Q, 0))};
    case Family::Vir: break;
  }
  throw UnsupportedFamily("globalization is not defined for the Virasoro algebra");
}

Certificate globalize(const TwoLocalOracle& o, const TestSet& t) {
  const Family f = o.family();
  const Anchors anchors = anchor_pair(f);

  const QueryResult first = o.checked_query(anchors.first, anchors.second);
  SuperDerivation candidate(f);
  if (const auto* d = std::get_if<SuperDerivation>(&first.map)) candidate = SuperDerivation(d->inner(), Rational(0));

  Certificate cert;
  cert.family = f;
  std::vector<std::pair<Element, Element>> expectations;
  expectations.emplace_back(anchors.first, first.delta_x);
  expectations.emplace_back(anchors.second, first.delta_y);

  bool residual_proportional = true;
  if (anchors.third) {
    const Element& third = *anchors.third;
    const Element delta = o.checked_query(anchors.first, third).delta_y;
    const Element residual = delta - apply(candidate, third);
    const auto& [lead, lead_coeff] = *third.terms().begin();
    const Rational mu = residual.coefficient(lead) / lead_coeff;
    if (residual == mu * third) {
      cert.mu = mu;
      candidate += SuperDerivation::outer(mu);
    } else {
      residual_proportional = false;
    }
    expectations.emplace_back(third, delta);
  }

  for (const Element& e : t.elements(f)) expectations.emplace_back(e, o.checked_query(anchors.first, e).delta_y);

  cert.candidate = candidate;
  for (auto& [e, expected] : expectations) {
    Element got = apply(candidate, e);
    const bool pass = got == expected;
    cert.checks.push_back(Check{e, std::move(expected), std::move(got), pass});
  }

  if (!residual_proportional) {
    cert.failure_witness = *anchors.third;
  } else {
    for (const auto& c : cert.checks) {
      if (!c.pass) {
        cert.failure_witness = c.element;
        break;
      }
    }
  }
  cert.pass = !cert.failure_witness.has_value();
  return cert;
}

nlohmann::ordered_json to_json(const Certificate& c) {
  nlohmann::ordered_json j;
  j["family"] = family_name(c.family);
  j["candidate"] = {{"inner", format_element(c.candidate.inner())}, {"lambda", c.candidate.outer_lambda().str()}};
  j["mu"] = c.mu.str();
  auto checks = nlohmann::ordered_json::array();
  for (const auto& ch : c.checks) {
    nlohmann::ordered_json entry;
    entry["element"] = format_element(ch.element);
    entry["expected"] = format_element(ch.expected);
    entry["got"] = format_element(ch.got);
    entry["pass"] = ch.pass;
    checks.push_back(std::move(entry));
  }
  j["checks"] = std::move(checks);
  j["verdict"] = c.pass ? "pass" : "fail";
  j["failure_witness"] = c.failure_witness ? nlohmann::ordered_json(format_element(*c.failure_witness)) : nlohmann::ordered_json(nullptr);
  return j;
}

TwoLocalOracle make_honest_oracle(const SuperDerivation& d, const GradedWindow& mask_window, std::uint64_t seed) {
  const Family f = d.family();
  return TwoLocalOracle(f, [d, mask_window, seed, f](const Element& x, const Element& y) {
    SuperDerivation local = d;
    if (mask_window.bound().sign() > 0) {
      static const Rational kWeights[] = {Rational(-2), Rational(-1), Rational(0), Rational(1, 2),
                                          Rational(1),  Rational(2)};
      const Element targets[] = {x, y};
      std::mt19937_64 rng(pair_seed(seed, x, y));
      for (auto& member : common_annihilator(f, targets, mask_window))
        local += kWeights[rng() % std::size(kWeights)] * std::move(member);
    }
    return QueryResult{std::move(local), apply(d, x), apply(d, y)};
  });
}

std::string_view adversary_name(AdversaryKind k) {
  switch (k) {
    case AdversaryKind::CoefficientSquare: return "coefficient_square";
    case AdversaryKind::ShiftMap: return "shift_map";
    case AdversaryKind::PairwiseInconsistent: return "pairwise_inconsistent";
  }
  return "?";
}

AdversaryKind parse_adversary(std::string_view name) {
  for (AdversaryKind k :
       {AdversaryKind::CoefficientSquare, AdversaryKind::ShiftMap, AdversaryKind::PairwiseInconsistent})
    if (adversary_name(k) == name) return k;
  throw std::invalid_argument("unknown adversarial oracle '" + std::string(name) + "'");
}

std::optional<RawLinearMap> interpolating_map(const Element& x, const Element& dx, const Element& y,
                                              const Element& dy) {
  const Family f = x.family();
  RawLinearMap m(f);

  std::vector<BasisVector> support;
  for (const auto& [b, c] : x.terms()) support.push_back(b);
  for (const auto& [b, c] : y.terms())
    if (x.coefficient(b).is_zero()) support.push_back(b);

  bool built = false;
  for (std::size_t i = 0; i < support.size() && !built; ++i) {
    for (std::size_t j = i + 1; j < support.size() && !built; ++j) {
      const Rational xi = x.coefficient(support[i]), xj = x.coefficient(support[j]);
      const Rational yi = y.coefficient(support[i]), yj = y.coefficient(support[j]);
      const Rational det = xi * yj - xj * yi;
      if (det.is_zero()) continue;
      // Dual functionals on the two coordinates, then images by linearity.
      m.set(support[i], (Rational(1) / det) * (yj * dx - xj * dy));
      m.set(support[j], (Rational(1) / det) * (xi * dy - yi * dx));
      built = true;
    }
  }
  if (!built) {
    // x and y are proportional: one coordinate carries the whole map.
    const Element& base = x.is_zero() ? y : x;
    const Element& image = x.is_zero() ? dy : dx;
    if (!base.is_zero()) {
      const auto& [b, c] = *base.terms().begin();
      m.set(b, (Rational(1) / c) * image);
    }
  }
  if (m(x) != dx || m(y) != dy) return std::nullopt;
  return m;
}

TwoLocalOracle make_adversarial_oracle(AdversaryKind kind, Family f) {
  switch (kind) {
    case AdversaryKind::CoefficientSquare:
      return TwoLocalOracle(f, [f](const Element& x, const Element& y) {
        auto square = [f](const Element& e) {
          Element out(f);
          for (const auto& [b, c] : e.terms()) out.add_term(b, c * c);
          return out;
        };
        Element dx = square(x), dy = square(y);
        std::optional<RawLinearMap> m = interpolating_map(x, dx, y, dy);
        // No linear map fits both values; answer consistently at x only.
        if (!m) m = interpolating_map(x, dx, x, dx);
        return QueryResult{std::move(*m), std::move(dx), std::move(dy)};
      });

    case AdversaryKind::ShiftMap:
      return TwoLocalOracle(f, [f](const Element& x, const Element& y) {
        RawLinearMap shift(f);
        for (const Element* e : {&x, &y})
          for (const auto& [b, c] : e->terms())
            if (b.kind == Kind::L) shift.set(b, Element(BasisVector{f, Kind::L, b.index + HalfInt::integer(1)}));
        Element dx = shift(x), dy = shift(y);
        return QueryResult{std::move(shift), std::move(dx), std::move(dy)};
      });

    case AdversaryKind::PairwiseInconsistent: {
      const BasisVector marker = f == Family::Vir ? make_basis(f, Kind::L, 1)
                                                  : anchor_pair(f).second.terms().begin()->first;
      return TwoLocalOracle(f, [f, marker](const Element& x, const Element& y) {
        const bool touches = !x.coefficient(marker).is_zero() || !y.coefficient(marker).is_zero();
        const SuperDerivation d =
            SuperDerivation::inner_of(Element(make_basis(f, Kind::L, 0), touches ? Rational(1) : Rational(2)));
        return QueryResult{d, apply(d, x), apply(d, y)};
      });
    }
  }
  throw std::invalid_argument("unknown adversary kind");
}

std::vector<bool> homogeneity_check(const TwoLocalOracle& o, const std::vector<std::pair<Rational, Element>>& samples) {
  std::vector<bool> out;
  out.reserve(samples.size());
  for (const auto& [k, x] : samples) {
    if (k.is_zero()) throw std::invalid_argument("homogeneity_check needs nonzero scalars");
    const Element kx = k * x;
    const Element dx = o.checked_query(x, x).delta_x;
    const Element dkx = o.checked_query(kx, kx).delta_x;
    out.push_back(dkx == k * dx);
  }
  return out;
}

}  // namespace svir
