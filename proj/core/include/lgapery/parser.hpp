#pragma once

#include "lgapery/laurent.hpp"

#include <span>
#include <string>
#include <string_view>

namespace lgapery {

/// Parses a Laurent polynomial.
///
/// Grammar (whitespace is insignificant, implicit multiplication is rejected):
///
///     expr     := ['+'|'-'] term (('+'|'-') term)*
///     term     := factor (('*'|'/') factor)*
///     factor   := atom ('^' ['-'] integer)?
///     atom     := integer | variable | '(' expr ')'
///     variable := 'x' | 'y' | 'z' | 'x' digits
///
/// x, y, z name the first three variables when dimension <= 3; x1..xd are
/// accepted for any dimension. Division is allowed only by a single monomial,
/// and negative powers only of a single monomial. Throws ParseError.
LaurentPolynomial parse(std::string_view text, std::size_t dimension);

/// Same grammar with caller-chosen variable names (each a letter followed by
/// optional letters/digits).
LaurentPolynomial parse(std::string_view text, std::span<const std::string> variable_names);

}  // namespace lgapery
