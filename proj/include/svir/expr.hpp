#pragma once

#include <ostream>
#include <string>
#include <string_view>

#include "svir/derivations.hpp"

namespace svir {

// Surface syntax for elements:
//
//   expr     := ['-'] term (('+'|'-') term)*  |  '0'
//   term     := [rational '*'] gen
//   gen      := ('L'|'G'|'I'|'Q') '[' index ']' | 'C' | 'C1' | 'C2'
//   rational := ['-'] digits ['/' digits]
//   index    := ['-'] digits ['/2']
//
// Derivation expressions additionally accept the generator 'D' (the outer
// derivation, sw22 only); the other generators denote ad(gen).

/// Throws SyntaxError, KindNotInFamily or IndexNotInSector.
Element parse_element(std::string_view src, Family f);
SuperDerivation parse_derivation(std::string_view src, Family f);

/// Canonical text: terms ordered by kind (L, G, I, Q, C, C1, C2) then by
/// ascending index; "0" for the zero element.
std::string format_element(const Element& x);
/// Inner terms then "D" for the outer part.
std::string format_derivation(const SuperDerivation& d);

inline std::ostream& operator<<(std::ostream& os, const Element& x) { return os << format_element(x); }
inline std::ostream& operator<<(std::ostream& os, const SuperDerivation& d) { return os << format_derivation(d); }
inline std::ostream& operator<<(std::ostream& os, const BasisVector& b) { return os << format_element(Element(b)); }

}  // namespace svir
