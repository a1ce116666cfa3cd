#include "tancone/hilbert.hpp"

#include <algorithm>
#include <cstdlib>

#include "tancone/errors.hpp"

namespace tancone {

std::int64_t binom3(std::int64_t m) {
  if (m < 3) return 0;
  return m * (m - 1) * (m - 2) / 6;
}

std::int64_t hf_from_twists(const Twists& twists, std::int64_t i) {
  if (i < 0) throw Error(Reason::InputError, "negative degree");
  std::int64_t h = 0;
  for (std::size_t k = 0; k < twists.size(); ++k) {
    std::int64_t level = 0;
    for (auto t : twists[k]) level += binom3(i + t + 3);
    h += k % 2 ? -level : level;
  }
  return h;
}

std::int64_t hf_from_resolution(const GradedFreeResolution& r, std::int64_t i) {
  if (!r.verified) throw Error(Reason::Unverified, "resolution has not been certified");
  return hf_from_twists(r.twists, i);
}

std::vector<std::int64_t> hilbert_numerator(const Twists& twists) {
  std::vector<std::int64_t> n(static_cast<std::size_t>(max_abs_twist(twists)) + 1, 0);
  for (std::size_t k = 0; k < twists.size(); ++k)
    for (auto t : twists[k]) n[static_cast<std::size_t>(-t)] += k % 2 ? -1 : 1;
  return n;
}

std::int64_t max_abs_twist(const Twists& twists) {
  std::int64_t m = 0;
  for (const auto& level : twists)
    for (auto t : level) m = std::max(m, std::abs(t));
  return m;
}

bool check_nondecreasing(std::span<const std::int64_t> values) {
  for (std::size_t i = 1; i < values.size(); ++i)
    if (values[i] < values[i - 1]) return false;
  return true;
}

bool check_nondecreasing(const HilbertReport& report) { return check_nondecreasing(report.values); }

HilbertReport compare_with_oracle(const GradedFreeResolution& r, const NumericalSemigroup& s,
                                  std::optional<std::int64_t> bound) {
  HilbertReport h;
  const std::int64_t floor_bound = max_abs_twist(r.twists) + 4;
  h.bound = std::max(bound.value_or(floor_bound), floor_bound);
  for (std::int64_t i = 0; i <= h.bound; ++i) h.values.push_back(hf_from_resolution(r, i));
  h.oracle_values = s.hilbert_oracle_sequence(h.bound);
  h.equal = h.values == h.oracle_values;
  h.nondecreasing = check_nondecreasing(h);
  // Past the largest twist the function is polynomial, hence constant in dimension one.
  std::size_t start = h.values.size() - 1;
  while (start > 0 && h.values[start - 1] == h.values.back()) --start;
  if (static_cast<std::int64_t>(start) < h.bound) {
    h.stabilization_value = h.values.back();
    h.stabilization_index = static_cast<std::int64_t>(start);
  }
  return h;
}

}  // namespace tancone
