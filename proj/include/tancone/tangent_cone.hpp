#pragma once

#include <array>
#include <cstdint>
#include <string_view>

#include "tancone/bresinsky.hpp"
#include "tancone/poly.hpp"

namespace tancone {

struct TangentConeIdeal {
  std::array<Poly, 5> generators;
  CaseLabel label = CaseLabel::C1a;
  int variant = 1;
  std::array<std::uint64_t, 5> degrees{};
};

int variant_count(CaseLabel c);  // 2 for 1a, 4 for the other supported cases, 0 otherwise
// Variant from the restriction equalities: 1 none, 2 the f2 condition, 3 the f3 condition, 4 both.
int select_variant(const SupportReport& r);
// Generator templates of a variant, in the sign convention of the resolution matrices.
const std::array<std::string_view, 5>& variant_generators(CaseLabel c, int variant);

// Lowest-degree forms of f1..f5 matched against the variant list.
// Throws UnsupportedCase / RestrictionViolated / InternalInconsistency / VariantMismatch.
TangentConeIdeal tangent_generators(const BresinskyData& d);

}  // namespace tancone
