#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tancone/expr.hpp"
#include "tancone/poly.hpp"
#include "tancone/semigroup.hpp"

namespace tancone {

enum class CaseLabel { C1a, C1b, C2a, C2b, C3a, C3b };

std::string_view to_string(CaseLabel c);  // "1a", "1b", ...
std::optional<CaseLabel> parse_case_label(std::string_view s);
bool is_supported_case(CaseLabel c);

// Indices below are 1-based variable labels in sorted order n1 < n2 < n3 < n4.
struct CaseShape {
  CaseLabel label;
  // f_i = x_i^{a_i} - x_j^{a_ij} x_k^{a_ik} with (j, k) = rhs[i-1].
  std::array<std::pair<int, int>, 4> rhs;
  // f5 = prod x_j^{a_ij} over f5_plus minus prod over f5_minus; each entry is (i, j).
  std::array<std::pair<int, int>, 2> f5_plus;
  std::array<std::pair<int, int>, 2> f5_minus;
};

const CaseShape& case_shape(CaseLabel c);

struct BresinskyData {
  std::array<std::int64_t, 4> generators{};  // sorted
  std::array<std::int64_t, 4> alpha{};
  std::array<std::array<std::int64_t, 4>, 4> alpha_ij{};  // [i][j], 0 when absent
  CaseLabel label = CaseLabel::C1a;
  // to_canonical[i] = case 1a label of sorted variable i+1, 1-based.
  std::array<int, 4> to_canonical{};

  std::int64_t a(int i) const { return alpha[i - 1]; }
  std::int64_t a(int i, int j) const { return alpha_ij[i - 1][j - 1]; }
  // Symbol table for templates: a1..a4 and every stored a_ij.
  AlphaValues alpha_values() const;
};

BresinskyData solve_structure(const NumericalSemigroup& s);

struct Inequality {
  std::string text;  // e.g. "a2 <= a21+a24"
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
  bool holds = false;
  bool equality = false;
};

struct SupportReport {
  bool supported = false;
  CaseLabel label = CaseLabel::C1a;
  std::vector<Inequality> restrictions;  // the standard-basis conditions, f2 first
  std::vector<Inequality> implied;       // consequences of n1 < n2 < n3 < n4
};

// Throws UnsupportedCase, RestrictionViolated or InternalInconsistency.
SupportReport check_restrictions(const BresinskyData& d);

struct CanonicalParameters {
  std::int64_t a21 = 1, a31 = 1, a32 = 1, a42 = 1, a13 = 1, a43 = 1, a14 = 1, a24 = 1;

  std::array<std::int64_t, 4> alpha() const {
    return {a21 + a31, a32 + a42, a13 + a43, a14 + a24};
  }
  // Exponent a_ij in canonical labels (1-based), 0 when not a parameter.
  std::int64_t get(int i, int j) const;
  std::array<std::int64_t, 4> generators() const;
};

struct ParametrizedSemigroup {
  NumericalSemigroup semigroup;
  std::array<std::int64_t, 4> canonical_generators{};
  // canonical_to_sorted[i] = sorted label (1-based) of canonical variable i+1.
  std::array<int, 4> canonical_to_sorted{};
};

// Throws InputError, GcdNotOne or NotMinimallyGenerated.
ParametrizedSemigroup semigroup_from_parameters(const CanonicalParameters& p);

// f1..f5 of the matched case; throws UnsupportedCase for 2a/3b.
std::array<Poly, 5> build_ideal_generators(const BresinskyData& d);
// Same binomials without the support restriction (diagnostics and tests).
std::array<Poly, 5> case_binomials(const BresinskyData& d);

}  // namespace tancone
