#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace tancone {

// Numerical semigroup generated by a handful of positive integers.
// Generators are deduplicated and sorted; the caller's order is kept in input().
class NumericalSemigroup {
 public:
  explicit NumericalSemigroup(std::span<const std::int64_t> gens);
  NumericalSemigroup(std::initializer_list<std::int64_t> gens);

  const std::vector<std::int64_t>& generators() const { return gens_; }
  const std::vector<std::int64_t>& input() const { return input_; }
  bool had_duplicates() const { return gens_.size() != input_.size(); }

  std::int64_t frobenius() const { return frobenius_; }
  std::size_t gap_count() const { return gap_count_; }

  bool contains(std::int64_t n) const;
  std::vector<std::int64_t> gaps() const;
  bool is_symmetric() const;
  bool is_minimally_generated() const;

  // Maximal factorization length; throws DomainError when s is not in S.
  std::int64_t order(std::int64_t s) const;
  // ord[s] for 0 <= s <= limit, -1 for non-members.
  std::vector<std::int64_t> order_table(std::int64_t limit) const;

  std::int64_t hilbert_oracle(std::int64_t i) const;
  // Oracle values for i = 0..upto from a single order table.
  std::vector<std::int64_t> hilbert_oracle_sequence(std::int64_t upto) const;

 private:
  void init();

  std::vector<std::int64_t> input_;
  std::vector<std::int64_t> gens_;
  std::vector<char> member_;  // membership for 0..frobenius_
  std::int64_t frobenius_ = -1;
  std::size_t gap_count_ = 0;
};

// Membership in the semigroup generated by `gens` (any order, duplicates fine).
bool in_semigroup(std::int64_t n, std::span<const std::int64_t> gens);

}  // namespace tancone
