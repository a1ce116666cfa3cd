#include "tancone/bresinsky.hpp"

#include <algorithm>
#include <numeric>

#include "tancone/errors.hpp"

namespace tancone {
namespace {

const std::array<CaseShape, 6> kShapes{{
    {CaseLabel::C1a, {{{3, 4}, {1, 4}, {1, 2}, {2, 3}}}, {{{2, 1}, {4, 3}}}, {{{3, 2}, {1, 4}}}},
    {CaseLabel::C1b, {{{3, 4}, {1, 3}, {2, 4}, {1, 2}}}, {{{4, 2}, {1, 3}}}, {{{2, 1}, {3, 4}}}},
    {CaseLabel::C2a, {{{2, 3}, {3, 4}, {1, 4}, {1, 2}}}, {{{1, 2}, {3, 4}}}, {{{4, 1}, {2, 3}}}},
    {CaseLabel::C2b, {{{2, 3}, {1, 4}, {2, 4}, {1, 3}}}, {{{4, 1}, {3, 2}}}, {{{1, 3}, {2, 4}}}},
    {CaseLabel::C3a, {{{2, 4}, {1, 3}, {1, 4}, {2, 3}}}, {{{3, 1}, {4, 2}}}, {{{2, 3}, {1, 4}}}},
    {CaseLabel::C3b, {{{2, 4}, {3, 4}, {1, 2}, {1, 3}}}, {{{1, 2}, {4, 3}}}, {{{3, 1}, {2, 4}}}},
}};

std::string sym(int i, int j) { return "a" + std::to_string(i) + std::to_string(j); }
std::string sym(int i) { return "a" + std::to_string(i); }

// Membership in the semigroup generated by a few integers, table grown on demand.
class Subsemigroup {
 public:
  explicit Subsemigroup(std::vector<std::int64_t> gens) : gens_(std::move(gens)) { table_.push_back(1); }

  bool contains(std::int64_t n) {
    if (n < 0) return false;
    while (static_cast<std::int64_t>(table_.size()) <= n) {
      std::int64_t s = static_cast<std::int64_t>(table_.size());
      char v = 0;
      for (auto g : gens_)
        if (g <= s && table_[s - g]) { v = 1; break; }
      table_.push_back(v);
    }
    return table_[n] != 0;
  }

 private:
  std::vector<std::int64_t> gens_;
  std::vector<char> table_;
};

Poly monomial_of(const BresinskyData& d, const std::array<std::pair<int, int>, 2>& parts) {
  Exponents e{};
  for (auto [i, j] : parts) e[j - 1] += static_cast<std::uint32_t>(d.a(i, j));
  return Poly::monomial(e);
}

std::int64_t weight(const BresinskyData& d, const std::array<std::pair<int, int>, 2>& parts) {
  std::int64_t w = 0;
  for (auto [i, j] : parts) w += d.a(i, j) * d.generators[j - 1];
  return w;
}

struct Rule {
  int i, j, k;
  bool greater;  // a_i > a_ij + a_ik, otherwise a_i < ...
};

std::vector<std::array<int, 3>> restriction_rules(CaseLabel c) {
  switch (c) {
    case CaseLabel::C1a: return {{2, 1, 4}};
    case CaseLabel::C1b: return {{2, 1, 3}, {3, 2, 4}};
    case CaseLabel::C2b: return {{2, 1, 4}, {3, 2, 4}};
    case CaseLabel::C3a: return {{2, 1, 3}, {3, 1, 4}};
    default: return {};
  }
}

std::vector<Rule> implied_rules(CaseLabel c) {
  switch (c) {
    case CaseLabel::C1a: return {{1, 3, 4, true}, {4, 2, 3, false}, {3, 1, 2, false}};
    case CaseLabel::C1b: return {{1, 3, 4, true}, {4, 1, 2, false}};
    case CaseLabel::C2b: return {{1, 2, 3, true}, {4, 1, 3, false}};
    case CaseLabel::C3a: return {{1, 2, 4, true}, {4, 2, 3, false}};
    default: return {};
  }
}

}  // namespace

std::string_view to_string(CaseLabel c) {
  switch (c) {
    case CaseLabel::C1a: return "1a";
    case CaseLabel::C1b: return "1b";
    case CaseLabel::C2a: return "2a";
    case CaseLabel::C2b: return "2b";
    case CaseLabel::C3a: return "3a";
    case CaseLabel::C3b: return "3b";
  }
  return "?";
}

std::optional<CaseLabel> parse_case_label(std::string_view s) {
  for (const auto& sh : kShapes)
    if (to_string(sh.label) == s) return sh.label;
  return std::nullopt;
}

bool is_supported_case(CaseLabel c) {
  return c == CaseLabel::C1a || c == CaseLabel::C1b || c == CaseLabel::C2b || c == CaseLabel::C3a;
}

const CaseShape& case_shape(CaseLabel c) { return kShapes[static_cast<std::size_t>(c)]; }

AlphaValues BresinskyData::alpha_values() const {
  AlphaValues v;
  for (int i = 1; i <= 4; ++i) {
    v[sym(i)] = a(i);
    for (int j = 1; j <= 4; ++j)
      if (a(i, j)) v[sym(i, j)] = a(i, j);
  }
  return v;
}

BresinskyData solve_structure(const NumericalSemigroup& s) {
  const auto& g = s.generators();
  if (g.size() != 4 || !s.is_minimally_generated())
    throw Error(Reason::NotMinimallyGenerated, "need four minimal generators");
  if (!s.is_symmetric()) throw Error(Reason::NotSymmetric, "semigroup is not symmetric");

  BresinskyData d;
  std::copy(g.begin(), g.end(), d.generators.begin());
  std::array<std::vector<int>, 4> others;
  std::vector<Subsemigroup> subs;
  for (int i = 0; i < 4; ++i) {
    std::vector<std::int64_t> og;
    for (int j = 0; j < 4; ++j)
      if (j != i) {
        others[i].push_back(j);
        og.push_back(g[j]);
      }
    subs.emplace_back(og);
  }
  for (int i = 0; i < 4; ++i) {
    std::int64_t k = 1;
    while (!subs[i].contains(k * g[i])) {
      if (++k > 1'000'000) throw Error(Reason::InternalInconsistency, "alpha search did not terminate");
    }
    d.alpha[i] = k;
  }

  // Unique two-variable representation a_i n_i = a n_j + b n_k, 0 < a < a_j, 0 < b < a_k.
  std::array<std::pair<int, int>, 4> rhs{};
  for (int i = 0; i < 4; ++i) {
    const std::int64_t target = d.alpha[i] * g[i];
    std::vector<std::array<std::int64_t, 4>> found;  // j, k, a, b
    for (std::size_t x = 0; x < 3; ++x)
      for (std::size_t y = x + 1; y < 3; ++y) {
        int j = others[i][x], k = others[i][y];
        for (std::int64_t a = 1; a < d.alpha[j]; ++a) {
          std::int64_t rest = target - a * g[j];
          if (rest <= 0) break;
          if (rest % g[k]) continue;
          std::int64_t b = rest / g[k];
          if (b >= 1 && b < d.alpha[k]) found.push_back({j, k, a, b});
        }
      }
    if (found.empty())
      throw Error(Reason::CompleteIntersection,
                  "no two-variable representation of " + std::to_string(d.alpha[i]) + "*n" +
                      std::to_string(i + 1));
    if (found.size() > 1)
      throw Error(Reason::StructureAmbiguous,
                  std::to_string(found.size()) + " two-variable representations of " +
                      std::to_string(d.alpha[i]) + "*n" + std::to_string(i + 1));
    auto [j, k, a, b] = found.front();
    d.alpha_ij[i][j] = a;
    d.alpha_ij[i][k] = b;
    rhs[i] = {static_cast<int>(j) + 1, static_cast<int>(k) + 1};
  }

  const CaseShape* match = nullptr;
  for (const auto& sh : kShapes)
    if (sh.rhs == rhs) match = &sh;
  if (!match) throw Error(Reason::CompleteIntersection, "representation pattern matches no Bresinsky case");
  d.label = match->label;

  for (int j = 1; j <= 4; ++j) {
    std::int64_t sum = 0;
    for (int i = 1; i <= 4; ++i) sum += d.a(i, j);
    if (sum != d.a(j))
      throw Error(Reason::CompleteIntersection, "sum identity fails for a" + std::to_string(j));
  }
  if (weight(d, match->f5_plus) != weight(d, match->f5_minus))
    throw Error(Reason::InternalInconsistency, "f5 is not homogeneous for the semigroup grading");

  // Relabeling onto the case 1a pattern; the pattern has automorphisms, keep the smallest.
  const auto& canon = case_shape(CaseLabel::C1a).rhs;
  std::array<int, 4> p{1, 2, 3, 4};
  bool found_perm = false;
  do {
    bool ok = true;
    for (int i = 0; i < 4 && ok; ++i) {
      auto [j, k] = rhs[i];
      auto [cj, ck] = canon[p[i] - 1];
      int mj = p[j - 1], mk = p[k - 1];
      ok = (mj == cj && mk == ck) || (mj == ck && mk == cj);
    }
    if (ok) {
      d.to_canonical = p;
      found_perm = true;
      break;
    }
  } while (std::next_permutation(p.begin(), p.end()));
  if (!found_perm) throw Error(Reason::InternalInconsistency, "no relabeling onto the canonical pattern");
  return d;
}

SupportReport check_restrictions(const BresinskyData& d) {
  if (!is_supported_case(d.label))
    throw Error(Reason::UnsupportedCase,
                "case " + std::string(to_string(d.label)) + " has no tangent cone description");
  SupportReport r;
  r.label = d.label;
  for (auto [i, j, k] : restriction_rules(d.label)) {
    Inequality q;
    q.text = sym(i) + " <= " + sym(i, j) + "+" + sym(i, k);
    q.lhs = d.a(i);
    q.rhs = d.a(i, j) + d.a(i, k);
    q.holds = q.lhs <= q.rhs;
    q.equality = q.lhs == q.rhs;
    r.restrictions.push_back(q);
  }
  for (auto rule : implied_rules(d.label)) {
    Inequality q;
    q.text = sym(rule.i) + (rule.greater ? " > " : " < ") + sym(rule.i, rule.j) + "+" + sym(rule.i, rule.k);
    q.lhs = d.a(rule.i);
    q.rhs = d.a(rule.i, rule.j) + d.a(rule.i, rule.k);
    q.holds = rule.greater ? q.lhs > q.rhs : q.lhs < q.rhs;
    r.implied.push_back(q);
  }
  for (const auto& q : r.restrictions)
    if (!q.holds)
      throw Error(Reason::RestrictionViolated,
                  q.text + " fails (" + std::to_string(q.lhs) + " > " + std::to_string(q.rhs) + ")");
  for (const auto& q : r.implied)
    if (!q.holds)
      throw Error(Reason::InternalInconsistency,
                  "implied inequality " + q.text + " fails (" + std::to_string(q.lhs) + " vs " +
                      std::to_string(q.rhs) + ")");
  r.supported = true;
  return r;
}

std::int64_t CanonicalParameters::get(int i, int j) const {
  switch (i * 10 + j) {
    case 21: return a21;
    case 31: return a31;
    case 32: return a32;
    case 42: return a42;
    case 13: return a13;
    case 43: return a43;
    case 14: return a14;
    case 24: return a24;
    default: return 0;
  }
}

std::array<std::int64_t, 4> CanonicalParameters::generators() const {
  auto [A1, A2, A3, A4] = alpha();
  return {A2 * A3 * a14 + a32 * a13 * a24,
          A3 * A4 * a21 + a31 * a43 * a24,
          A1 * A4 * a32 + a14 * a42 * a31,
          A1 * A2 * a43 + a42 * a21 * a13};
}

ParametrizedSemigroup semigroup_from_parameters(const CanonicalParameters& p) {
  for (auto v : {p.a21, p.a31, p.a32, p.a42, p.a13, p.a43, p.a14, p.a24})
    if (v < 1) throw Error(Reason::InputError, "parameters must be positive");
  auto cg = p.generators();
  std::array<int, 4> order{0, 1, 2, 3};
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return cg[x] < cg[y]; });
  std::array<int, 4> to_sorted{};
  for (int pos = 0; pos < 4; ++pos) to_sorted[order[pos]] = pos + 1;
  NumericalSemigroup s(cg);  // GcdNotOne surfaces here
  if (!s.is_minimally_generated())
    throw Error(Reason::NotMinimallyGenerated,
                "generators " + std::to_string(cg[0]) + "," + std::to_string(cg[1]) + "," +
                    std::to_string(cg[2]) + "," + std::to_string(cg[3]) + " are not minimal");
  return {std::move(s), cg, to_sorted};
}

std::array<Poly, 5> case_binomials(const BresinskyData& d) {
  const auto& sh = case_shape(d.label);
  std::array<Poly, 5> f;
  for (int i = 1; i <= 4; ++i) {
    auto [j, k] = sh.rhs[i - 1];
    Exponents e{};
    e[j - 1] = static_cast<std::uint32_t>(d.a(i, j));
    e[k - 1] = static_cast<std::uint32_t>(d.a(i, k));
    f[i - 1] = Poly::variable(i, static_cast<std::uint32_t>(d.a(i))) - Poly::monomial(e);
  }
  f[4] = monomial_of(d, sh.f5_plus) - monomial_of(d, sh.f5_minus);
  return f;
}

std::array<Poly, 5> build_ideal_generators(const BresinskyData& d) {
  if (!is_supported_case(d.label))
    throw Error(Reason::UnsupportedCase, "case " + std::string(to_string(d.label)));
  return case_binomials(d);
}

}  // namespace tancone
