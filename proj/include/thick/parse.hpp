#ifndef THICK_PARSE_HPP
#define THICK_PARSE_HPP

#include <string_view>

#include "thick/poly.hpp"

namespace thick {

/// Parses the polynomial grammar
///
///   poly     := term (("+" | "-") term)*
///   term     := coeff | monomial | coeff "*" monomial
///   monomial := var ("^" uint)? ("*" var ("^" uint)?)*
///   coeff    := int | int "/" uint          (the fraction form only over Q)
///
/// Whitespace is ignored. A single leading "-" is also accepted so that
/// printed rationals with a negative leading coefficient parse back.
/// Errors raise ParseError carrying the offending offset.
Poly parse_poly(std::string_view src, const RingPtr& ring);

}  // namespace thick

#endif
