#pragma once

#include <string>
#include <vector>

#include "field.hpp"
#include "float_real.hpp"
#include "rational.hpp"
#include "series.hpp"

namespace ofc {

// One parsed summand of a weight expression: coeff * e^exponent.
struct ParsedTerm {
  Rat exponent;
  Rat coeff;
};

// Grammar (whitespace insignificant, 'e' denotes eps):
//   expr    := ['-'] term (('+'|'-') term)*
//   term    := coeff ['*' epspart] | epspart
//   coeff   := int ['/' posint]
//   epspart := 'e' ['^' expo]
//   expo    := int ['/' posint] | '(' ['-'] expo ')'
// Duplicate exponents are merged by coefficient addition downstream.
std::vector<ParsedTerm> parse_weight_expr(const std::string& text);

// Lowers a parsed expression into a backend element. Scalar backends reject
// eps-carrying terms with a backend-mismatch error.
template <class K>
K parse_element(const std::string& text);

template <>
Rat parse_element<Rat>(const std::string& text);
template <>
FloatReal parse_element<FloatReal>(const std::string& text);
template <>
SeriesRat parse_element<SeriesRat>(const std::string& text);
template <>
SeriesFloat parse_element<SeriesFloat>(const std::string& text);

// Canonical formatting; parse_element(format_element(x)) reproduces x's
// terms. Float values render as the shortest fraction that converts back to
// the identical double, falling back to the exact dyadic form.
std::string format_element(const Rat& x);
std::string format_element(const FloatReal& x);
std::string format_element(const SeriesRat& x);
std::string format_element(const SeriesFloat& x);

}  // namespace ofc
