#pragma once

#include <string>
#include <string_view>

#include "realiz/cohomology.hpp"
#include "realiz/kunneth.hpp"

namespace realiz {

// Text forms:
//   class    := "0" | term (" + " term)*
//   term     := coeff "*s" partition | "s" partition
//   product  := "0" | pterm (" + " pterm)*
//   pterm    := coeff "*(" slots ")" | "(" slots ")",  slots := "s" partition ("|" "s" partition)*
// Whitespace between tokens is tolerated on input; output is canonical.

/// Throws SyntaxError (with byte position) or InvalidPartition.
CohomologyClass parse_class(std::string_view text, const GrassmannianSpec& g);
std::string format_class(const CohomologyClass& c);

/// Throws SyntaxError, InvalidPartition or SpecMismatch (slot count).
ProductClass parse_product_class(std::string_view text, const ProductSpec& spec);
std::string format_product_class(const ProductClass& c);

}  // namespace realiz
