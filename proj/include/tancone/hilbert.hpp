#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tancone/resolution.hpp"
#include "tancone/semigroup.hpp"

namespace tancone {

using Twists = std::vector<std::vector<std::int64_t>>;

// C(m, 3), zero for m < 3.
std::int64_t binom3(std::int64_t m);

// Alternating sum of C(i + t + 3, 3) over the twists t of each free module.
std::int64_t hf_from_twists(const Twists& twists, std::int64_t i);
// Throws Unverified unless certify() succeeded on r.
std::int64_t hf_from_resolution(const GradedFreeResolution& r, std::int64_t i);

// Coefficients of the Hilbert series numerator; index = power of t.
std::vector<std::int64_t> hilbert_numerator(const Twists& twists);
std::int64_t max_abs_twist(const Twists& twists);

struct HilbertReport {
  std::int64_t bound = 0;
  std::vector<std::int64_t> values;
  std::vector<std::int64_t> oracle_values;
  bool equal = false;
  bool nondecreasing = false;
  std::optional<std::int64_t> stabilization_value;
  std::optional<std::int64_t> stabilization_index;  // first i of the constant tail
};

bool check_nondecreasing(std::span<const std::int64_t> values);
bool check_nondecreasing(const HilbertReport& report);

// Bound defaults to max|twist| + 4 and is never taken below it.
HilbertReport compare_with_oracle(const GradedFreeResolution& r, const NumericalSemigroup& s,
                                  std::optional<std::int64_t> bound = std::nullopt);

}  // namespace tancone
