#pragma once
// Brute-force oracles and sample families shared by the test suites.
// Nothing here calls into the library's own search code.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "tancone/poly.hpp"

namespace tancone {
// Readable gtest failure messages.
inline void PrintTo(const Poly& p, std::ostream* os) { *os << p.to_string(); }
}  // namespace tancone

namespace testing_support {

// Exhaustive search over coefficient vectors.
inline bool brute_contains(std::int64_t n, const std::vector<std::int64_t>& gens) {
  std::function<bool(std::int64_t, std::size_t)> rec = [&](std::int64_t rest, std::size_t k) {
    if (rest == 0) return true;
    if (k == gens.size()) return false;
    for (std::int64_t c = 0; c * gens[k] <= rest; ++c)
      if (rec(rest - c * gens[k], k + 1)) return true;
    return false;
  };
  return n >= 0 && rec(n, 0);
}

// Longest factorization by enumerating all of them; -1 if none.
inline std::int64_t brute_order(std::int64_t s, const std::vector<std::int64_t>& gens) {
  std::int64_t best = -1;
  std::function<void(std::int64_t, std::size_t, std::int64_t)> rec = [&](std::int64_t rest, std::size_t k,
                                                                         std::int64_t len) {
    if (k == gens.size()) {
      if (rest == 0) best = std::max(best, len);
      return;
    }
    for (std::int64_t c = 0; c * gens[k] <= rest; ++c) rec(rest - c * gens[k], k + 1, len + c);
  };
  rec(s, 0, 0);
  return best;
}

// Determinant by the permutation (Leibniz) expansion.
inline tancone::Poly leibniz_det(const tancone::PolyMatrix& m) {
  std::vector<std::size_t> p(m.rows());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = i;
  tancone::Poly det;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = i + 1; j < p.size(); ++j) inversions += p[i] > p[j];
    tancone::Poly term = tancone::Poly::constant(inversions % 2 ? -1 : 1);
    for (std::size_t i = 0; i < p.size(); ++i) term *= m(i, p[i]);
    det += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return det;
}

struct Sample {
  std::array<std::int64_t, 4> gens;
  const char* label;
  int variant;
};

// Smallest family of each variant found by the parametrization sweep.
inline const std::vector<Sample>& variant_samples() {
  static const std::vector<Sample> s = {
      {{7, 15, 18, 24}, "1a", 1},  {{7, 10, 12, 16}, "1a", 2},  {{14, 30, 47, 51}, "1b", 1},
      {{13, 18, 38, 40}, "1b", 2}, {{5, 11, 12, 13}, "1b", 3},  {{5, 6, 7, 8}, "1b", 4},
      {{10, 19, 31, 36}, "2b", 1}, {{10, 17, 36, 38}, "2b", 2}, {{5, 12, 13, 14}, "2b", 3},
      {{5, 7, 8, 9}, "2b", 4},     {{7, 13, 18, 22}, "3a", 1},  {{7, 10, 13, 18}, "3a", 2},
      {{7, 11, 12, 17}, "3a", 3},  {{7, 8, 9, 13}, "3a", 4},
  };
  return s;
}

}  // namespace testing_support
