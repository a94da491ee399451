#include "svir/superalgebra.hpp"

#include <stdexcept>

#include "svir/errors.hpp"

namespace svir {

std::string_view family_name(Family f) {
  switch (f) {
    case Family::Vir: return "vir";
    case Family::SVir0: return "svir0";
    case Family::SVir12: return "svir12";
    case Family::SW22: return "sw22";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  if (name == "vir") return Family::Vir;
  if (name == "svir0") return Family::SVir0;
  if (name == "svir12") return Family::SVir12;
  if (name == "sw22") return Family::SW22;
  throw std::invalid_argument("unknown algebra '" + std::string(name) + "'");
}

std::string_view kind_name(Kind k) {
  switch (k) {
    case Kind::L: return "L";
    case Kind::G: return "G";
    case Kind::I: return "I";
    case Kind::Q: return "Q";
    case Kind::C: return "C";
    case Kind::C1: return "C1";
    case Kind::C2: return "C2";
  }
  return "?";
}

bool is_central(Kind k) { return k == Kind::C || k == Kind::C1 || k == Kind::C2; }

bool family_has_kind(Family f, Kind k) {
  switch (f) {
    case Family::Vir: return k == Kind::L || k == Kind::C;
    case Family::SVir0:
    case Family::SVir12: return k == Kind::L || k == Kind::G || k == Kind::C;
    case Family::SW22: return k != Kind::C;
  }
  return false;
}

HalfInt HalfInt::from_rational(const Rational& r) {
  const Rational twice = r * Rational(2);
  if (!twice.is_integer()) throw IndexNotInSector("index " + r.str() + " is not a half-integer");
  const mpz_class n = twice.numerator();
  if (!n.fits_slong_p()) throw IndexNotInSector("index " + r.str() + " out of range");
  return HalfInt(n.get_si());
}

std::string HalfInt::str() const {
  if (is_integer()) return std::to_string(as_integer());
  return std::to_string(twice_) + "/2";
}

bool index_in_sector(Family f, Kind k, HalfInt index) {
  if (is_central(k)) return index.is_zero();
  if (k == Kind::G && f == Family::SVir12) return !index.is_integer();
  return index.is_integer();
}

BasisVector make_basis(Family f, Kind k, HalfInt index) {
  if (!family_has_kind(f, k))
    throw KindNotInFamily(std::string(kind_name(k)) + " is not a generator of " + std::string(family_name(f)));
  if (!index_in_sector(f, k, index))
    throw IndexNotInSector(std::string(kind_name(k)) + "[" + index.str() + "] is outside the " +
                           std::string(family_name(f)) + " sector");
  return BasisVector{f, k, index};
}

BasisVector make_basis(Family f, Kind k, std::int64_t index) { return make_basis(f, k, HalfInt::integer(index)); }

Parity parity(Kind k) { return (k == Kind::G || k == Kind::Q) ? Parity::Odd : Parity::Even; }
Parity parity(const BasisVector& b) { return parity(b.kind); }

// ---------------------------------------------------------------- Element

Element::Element(const BasisVector& b, Rational coeff) : family_(b.family) { add_term(b, coeff); }

Rational Element::coefficient(const BasisVector& b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Element::add_term(const BasisVector& b, const Rational& coeff) {
  if (b.family != family_) throw FamilyMismatch("basis vector from another family");
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(b, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Element& Element::operator+=(const Element& o) {
  if (o.family_ != family_) throw FamilyMismatch("adding elements of different families");
  for (const auto& [b, c] : o.terms_) add_term(b, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  if (o.family_ != family_) throw FamilyMismatch("subtracting elements of different families");
  for (const auto& [b, c] : o.terms_) add_term(b, -c);
  return *this;
}

Element& Element::operator*=(const Rational& k) {
  if (k.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [b, c] : terms_) c *= k;
  return *this;
}

std::pair<Element, Element> parity_decompose(const Element& x) {
  Element even(x.family()), odd(x.family());
  for (const auto& [b, c] : x.terms()) (parity(b) == Parity::Even ? even : odd).add_term(b, c);
  return {even, odd};
}

// ---------------------------------------------------------------- bracket

namespace {

Kind primary_central(Family f) { return f == Family::SW22 ? Kind::C1 : Kind::C; }

BasisVector unchecked(Family f, Kind k, HalfInt index) { return BasisVector{f, k, index}; }

// (m^3 - m) / 12 for an integer m.
Rational virasoro_cocycle(std::int64_t m) { return Rational(m * m * m - m, 12); }

// (r^2 - 1/4) / 3 for a half-integer r.
Rational fermionic_cocycle(HalfInt r) {
  const Rational v = r.value();
  return (v * v - Rational(1, 4)) / Rational(3);
}

// m/2 - r
Rational conformal_weight_factor(HalfInt m, HalfInt r) { return m.value() / Rational(2) - r.value(); }

// Relations exactly as tabulated. Returns false when (u, v) is not a
// tabulated ordered pair, so the caller can try the reversed order.
bool tabulated(const BasisVector& u, const BasisVector& v, Element& out) {
  const Family f = u.family;
  const HalfInt sum = u.index + v.index;
  const bool degree_zero = sum.is_zero();

  // [L_m, L_n] = (m-n) L_{m+n} + delta (m^3-m)/12 C
  if (u.kind == Kind::L && v.kind == Kind::L) {
    const std::int64_t m = u.index.as_integer(), n = v.index.as_integer();
    out.add_term(unchecked(f, Kind::L, sum), Rational(m - n));
    if (degree_zero) out.add_term(unchecked(f, primary_central(f), {}), virasoro_cocycle(m));
    return true;
  }
  // [L_m, G_r] = (m/2 - r) G_{m+r}
  if (u.kind == Kind::L && v.kind == Kind::G) {
    out.add_term(unchecked(f, Kind::G, sum), conformal_weight_factor(u.index, v.index));
    return true;
  }
  // [G_r, G_s] = 2 L_{r+s} + delta (r^2-1/4)/3 C
  if (u.kind == Kind::G && v.kind == Kind::G) {
    out.add_term(unchecked(f, Kind::L, sum), Rational(2));
    if (degree_zero) out.add_term(unchecked(f, primary_central(f), {}), fermionic_cocycle(u.index));
    return true;
  }
  if (f != Family::SW22) return false;

  // [L_m, I_n] = (m-n) I_{m+n} + delta (m^3-m)/12 C2
  if (u.kind == Kind::L && v.kind == Kind::I) {
    const std::int64_t m = u.index.as_integer(), n = v.index.as_integer();
    out.add_term(unchecked(f, Kind::I, sum), Rational(m - n));
    if (degree_zero) out.add_term(unchecked(f, Kind::C2, {}), virasoro_cocycle(m));
    return true;
  }
  // [L_m, Q_r] = (m/2 - r) Q_{m+r}
  if (u.kind == Kind::L && v.kind == Kind::Q) {
    out.add_term(unchecked(f, Kind::Q, sum), conformal_weight_factor(u.index, v.index));
    return true;
  }
  // [G_r, Q_s] = 2 I_{r+s} + delta (r^2-1/4)/3 C2
  if (u.kind == Kind::G && v.kind == Kind::Q) {
    out.add_term(unchecked(f, Kind::I, sum), Rational(2));
    if (degree_zero) out.add_term(unchecked(f, Kind::C2, {}), fermionic_cocycle(u.index));
    return true;
  }
  // [I_m, G_r] = (m/2 - r) Q_{m+r}
  if (u.kind == Kind::I && v.kind == Kind::G) {
    out.add_term(unchecked(f, Kind::Q, sum), conformal_weight_factor(u.index, v.index));
    return true;
  }
  return false;
}

}  // namespace

Element bracket(const BasisVector& u, const BasisVector& v) {
  if (u.family != v.family) throw FamilyMismatch("bracket of basis vectors from different families");
  Element out(u.family);
  if (is_central(u.kind) || is_central(v.kind)) return out;
  if (tabulated(u, v, out)) return out;
  // [u, v] = -(-1)^{|u||v|} [v, u]
  if (tabulated(v, u, out)) out *= Rational(-sign_of(parity(u), parity(v)));
  return out;
}

Element bracket(const Element& x, const Element& y) {
  if (x.family() != y.family()) throw FamilyMismatch("bracket of elements from different families");
  Element out(x.family());
  for (const auto& [u, a] : x.terms()) {
    for (const auto& [v, b] : y.terms()) {
      const Rational ab = a * b;
      const Element uv = bracket(u, v);
      for (const auto& [w, c] : uv.terms()) out.add_term(w, ab * c);
    }
  }
  return out;
}

std::vector<BasisVector> enumerate_basis(Family f, const Rational& bound, bool include_central) {
  if (bound.sign() < 0) throw std::invalid_argument("negative index bound");
  std::vector<BasisVector> out;
  const Rational twice_bound = bound * Rational(2);
  // floor(2*bound) as an integer; bound is non-negative.
  const mpz_class limit_z = twice_bound.numerator() / twice_bound.denominator();
  if (!limit_z.fits_slong_p()) throw std::invalid_argument("index bound too large");
  const std::int64_t limit = limit_z.get_si();

  for (Kind k : {Kind::L, Kind::G, Kind::I, Kind::Q}) {
    if (!family_has_kind(f, k)) continue;
    for (std::int64_t t = -limit; t <= limit; ++t) {
      const HalfInt idx = HalfInt::from_twice(t);
      if (index_in_sector(f, k, idx)) out.push_back(BasisVector{f, k, idx});
    }
  }
  if (include_central)
    for (Kind k : {Kind::C, Kind::C1, Kind::C2})
      if (family_has_kind(f, k)) out.push_back(BasisVector{f, k, {}});
  return out;
}

StructureReport check_structure(Family f, const Rational& bound) {
  const std::vector<BasisVector> basis = enumerate_basis(f, bound);
  StructureReport report;

  for (const auto& u : basis) {
    for (const auto& v : basis) {
      ++report.pairs;
      const Element uv = bracket(u, v);
      Element vu = bracket(v, u);
      vu *= Rational(-sign_of(parity(u), parity(v)));
      if (uv != vu) ++report.antisymmetry_violations;

      const Element eu(u), ev(v);
      for (const auto& w : basis) {
        ++report.triples;
        const Element ew(w);
        // [u,[v,w]] = [[u,v],w] + (-1)^{|u||v|} [v,[u,w]]
        const Element lhs = bracket(eu, bracket(ev, ew));
        Element rhs = bracket(uv, ew);
        Element tail = bracket(ev, bracket(eu, ew));
        tail *= Rational(sign_of(parity(u), parity(v)));
        rhs += tail;
        if (lhs != rhs) ++report.jacobi_violations;
      }
    }
  }
  return report;
}

}  // namespace svir
