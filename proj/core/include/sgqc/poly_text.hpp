#pragma once

#include <optional>
#include <string>

#include "sgqc/skew_poly.hpp"

namespace sgqc {

/// Parse the canonical polynomial grammar:
///
///   Poly := Term (("+" | "-") Term)*
///   Term := Coef | Coef "*" "x" ["^" int] | "x" ["^" int]
///   Coef := FLit | "(" SLit ")"
///   SLit := FLit | "(" FLit ")" "+v*(" FLit ")"
///   FLit := FTerm ("+" FTerm)*
///   FTerm := int | ["int" "*"] "t" ["^" int]
///
/// Whitespace is insignificant. "-" between terms negates the following
/// term (render always uses "+"). Integer scalars reduce mod p; "t" is
/// the field's primitive element and is rejected over prime fields.
///
/// `primitive_image`, when given, substitutes that element for the symbol
/// "t" (used to re-read displayed polynomials under an alternative
/// primitive-element convention).
SkewPoly parse_poly(SkewRing ring, const std::string& text,
                    std::optional<FieldElement> primitive_image = std::nullopt);

/// Canonical rendering, descending powers, "+"-joined. parse and render
/// are mutually inverse on normalized text.
std::string render_poly(const SkewPoly& p);

FieldElement parse_field_literal(const FieldSpec& field, const std::string& text);
SElement parse_s_literal(const FieldSpec& field, const std::string& text);

} // namespace sgqc
