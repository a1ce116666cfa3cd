#include "tancone/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "tancone/errors.hpp"

namespace tancone {

NumericalSemigroup::NumericalSemigroup(std::span<const std::int64_t> gens)
    : input_(gens.begin(), gens.end()) {
  init();
}

NumericalSemigroup::NumericalSemigroup(std::initializer_list<std::int64_t> gens)
    : input_(gens) {
  init();
}

void NumericalSemigroup::init() {
  if (input_.empty()) throw Error(Reason::InputError, "no generators");
  for (auto g : input_)
    if (g <= 0) throw Error(Reason::InputError, "generator " + std::to_string(g) + " is not positive");
  gens_ = input_;
  std::sort(gens_.begin(), gens_.end());
  gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());

  std::int64_t g = 0;
  for (auto n : gens_) g = std::gcd(g, n);
  if (g != 1) throw Error(Reason::GcdNotOne, "gcd of generators is " + std::to_string(g));

  // Sieve until a run of n1 consecutive members; by Schur's bound it ends before n1*nk.
  const std::int64_t n1 = gens_.front();
  const std::int64_t limit = n1 * gens_.back() + n1;
  std::vector<char> table(static_cast<std::size_t>(limit) + 1, 0);
  table[0] = 1;
  std::int64_t run = 0;
  std::int64_t last_gap = -1;
  for (std::int64_t s = 0; s <= limit; ++s) {
    if (s > 0)
      for (auto n : gens_)
        if (n <= s && table[s - n]) { table[s] = 1; break; }
    if (table[s]) {
      if (++run == n1) break;
    } else {
      run = 0;
      last_gap = s;
    }
  }
  frobenius_ = last_gap;
  member_.assign(table.begin(), table.begin() + (frobenius_ + 1));
  gap_count_ = static_cast<std::size_t>(std::count(member_.begin(), member_.end(), 0));
}

bool NumericalSemigroup::contains(std::int64_t n) const {
  if (n < 0) throw Error(Reason::InputError, "negative query " + std::to_string(n));
  if (n > frobenius_) return true;
  return member_[n] != 0;
}

std::vector<std::int64_t> NumericalSemigroup::gaps() const {
  std::vector<std::int64_t> out;
  for (std::int64_t s = 1; s <= frobenius_; ++s)
    if (!member_[s]) out.push_back(s);
  return out;
}

bool NumericalSemigroup::is_symmetric() const {
  std::size_t nongaps = 0;
  for (std::int64_t s = 0; s < frobenius_; ++s)
    if (member_[s]) ++nongaps;
  return nongaps == gap_count_;
}

bool NumericalSemigroup::is_minimally_generated() const {
  if (had_duplicates()) return false;
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    std::vector<std::int64_t> others;
    for (std::size_t j = 0; j < gens_.size(); ++j)
      if (j != i) others.push_back(gens_[j]);
    if (in_semigroup(gens_[i], others)) return false;
  }
  return true;
}

std::vector<std::int64_t> NumericalSemigroup::order_table(std::int64_t limit) const {
  std::vector<std::int64_t> ord(static_cast<std::size_t>(std::max<std::int64_t>(limit, 0)) + 1, -1);
  ord[0] = 0;
  for (std::int64_t s = 1; s <= limit; ++s)
    for (auto n : gens_)
      if (n <= s && ord[s - n] >= 0) ord[s] = std::max(ord[s], ord[s - n] + 1);
  return ord;
}

std::int64_t NumericalSemigroup::order(std::int64_t s) const {
  if (s < 0 || !contains(s))
    throw Error(Reason::DomainError, std::to_string(s) + " is not in the semigroup");
  return order_table(s)[s];
}

std::int64_t NumericalSemigroup::hilbert_oracle(std::int64_t i) const {
  if (i < 0) throw Error(Reason::InputError, "negative degree");
  auto ord = order_table(i * gens_.back());
  return std::count(ord.begin(), ord.end(), i);
}

std::vector<std::int64_t> NumericalSemigroup::hilbert_oracle_sequence(std::int64_t upto) const {
  if (upto < 0) throw Error(Reason::InputError, "negative degree");
  auto ord = order_table(upto * gens_.back());
  std::vector<std::int64_t> h(static_cast<std::size_t>(upto) + 1, 0);
  for (auto o : ord)
    if (o >= 0 && o <= upto) ++h[o];
  return h;
}

bool in_semigroup(std::int64_t n, std::span<const std::int64_t> gens) {
  if (n < 0) return false;
  std::vector<char> t(static_cast<std::size_t>(n) + 1, 0);
  t[0] = 1;
  for (std::int64_t s = 1; s <= n; ++s)
    for (auto g : gens)
      if (g > 0 && g <= s && t[s - g]) { t[s] = 1; break; }
  return t[n] != 0;
}

}  // namespace tancone
