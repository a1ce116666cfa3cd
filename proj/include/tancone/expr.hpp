#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "tancone/poly.hpp"

namespace tancone {

// Exponent symbols: "a1".."a4" for alpha_i, "a21" etc. for alpha_ij.
using AlphaValues = std::map<std::string, std::int64_t>;

// Template entries are written like "x2^a2-x1^a21*x4^a24" or "-x2^(2*a2+a32)";
// exponents are integers, symbols, or parenthesized integer-linear forms in the symbols.
Poly instantiate_entry(std::string_view text, const AlphaValues& alphas);

// Same grammar, read as a signed product of monomial and primitive-binomial factors,
// e.g. "-x2^a32*(x2^a2-x1^a21*x4^a24)^2".
FactoredPoly instantiate_factored(std::string_view text, const AlphaValues& alphas);

// Rows separated by newlines or ';', entries by ','.
PolyMatrix instantiate_matrix(std::string_view text, const AlphaValues& alphas);

// Literal polynomial with numeric exponents only.
Poly parse_poly(std::string_view text);

}  // namespace tancone
