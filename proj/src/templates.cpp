// Resolution matrices, tangent-cone generator lists and exactness witnesses, as data.
// Entries use the expression grammar of expr.hpp; a1..a4 and aij are the Bresinsky exponents.
#include <array>
#include <string>

#include "tancone/errors.hpp"
#include "tancone/resolution.hpp"
#include "tancone/tangent_cone.hpp"

namespace tancone {
namespace {

using C = CaseLabel;
constexpr std::array<std::size_t, 4> kSix{1, 5, 6, 2};
constexpr std::array<std::size_t, 4> kFive{1, 5, 5, 1};

const ResolutionTemplate kTemplates[] = {
    {C::C1a, 1, kSix,
     "x3^a13*x4^a14, x2^a2, x3^a3, x4^a4, x2^a32*x4^a14",
     R"(x3^a43, 0, x4^a24, x2^a32, 0, 0
        0, x3^a3, 0, 0, 0, x4^a14
        -x4^a14, -x2^a2, 0, 0, 0, 0
        0, 0, -x3^a13, 0, x2^a32, 0
        0, 0, 0, -x3^a13, -x4^a24, -x2^a42)",
     R"(x2^a2, 0
        -x4^a14, 0
        0, x2^a32
        -x2^a42*x3^a43, -x4^a24
        0, x3^a13
        x3^a3, 0)"},
    {C::C1a, 2, kSix,
     "x3^a13*x4^a14, x2^a2-x1^a21*x4^a24, x3^a3, x4^a4, x2^a32*x4^a14",
     R"(x4^a24, x2^a32, x3^a43, 0, 0, 0
        0, 0, 0, x4^a14, 0, x3^a3
        0, 0, -x4^a14, 0, 0, -x2^a2+x1^a21*x4^a24
        -x3^a13, 0, 0, x1^a21, x2^a32, 0
        0, -x3^a13, 0, -x2^a42, -x4^a24, 0)",
     R"(x2^a32, x1^a21*x3^a43
        -x4^a24, -x2^a42*x3^a43
        0, x2^a2-x1^a21*x4^a24
        0, x3^a3
        x3^a13, 0
        0, -x4^a14)"},
    {C::C1b, 1, kSix,
     "x3^a13*x4^a14, x2^a2, x3^a3, x4^a4, x2^a42*x3^a13",
     R"(-x4^a34, 0, -x3^a23, 0, x2^a42, 0
        0, -x4^a4, 0, 0, 0, -x3^a13
        0, 0, x4^a14, x2^a42, 0, 0
        x3^a13, x2^a2, 0, 0, 0, 0
        0, 0, 0, -x3^a23, -x4^a14, x2^a32)",
     R"(x2^a2, 0
        -x3^a13, 0
        0, x2^a42
        0, -x4^a14
        x2^a32*x4^a34, x3^a23
        x4^a4, 0)"},
    // Column 6 carries -x4^a14 in the last row: the displayed placement in row 3
    // does not give a complex (see README, "Template corrections").
    {C::C1b, 2, kSix,
     "x3^a13*x4^a14, x2^a2-x1^a21*x3^a23, x3^a3, x4^a4, x2^a42*x3^a13",
     R"(-x4^a34, 0, -x3^a23, 0, 0, x2^a42
        0, -x4^a4, 0, 0, x3^a13, 0
        0, 0, x4^a14, x2^a42, x1^a21, 0
        x3^a13, x2^a2-x1^a21*x3^a23, 0, 0, 0, 0
        0, 0, 0, -x3^a23, -x2^a32, -x4^a14)",
     R"(x2^a2-x1^a21*x3^a23, 0
        -x3^a13, 0
        x1^a21*x4^a34, x2^a42
        0, -x4^a14
        -x4^a4, 0
        x2^a32*x4^a34, x3^a23)"},
    {C::C1b, 3, kFive,
     "x3^a13*x4^a14, x2^a2, x3^a3-x2^a32*x4^a34, x4^a4, x2^a42*x3^a13",
     R"(-x3^a23, 0, x4^a34, x2^a42, 0
        0, x4^a34, 0, 0, x3^a13
        x4^a14, x2^a42, 0, 0, 0
        x2^a32, 0, -x3^a13, 0, 0
        0, -x3^a23, 0, -x4^a14, -x2^a32)",
     R"(x2^a42*x3^a13
        -x3^a13*x4^a14
        x2^a2
        x3^a3-x2^a32*x4^a34
        x4^a4)"},
    {C::C1b, 4, kFive,
     "x3^a13*x4^a14, x2^a2-x1^a21*x3^a23, x3^a3-x2^a32*x4^a34, x4^a4, x2^a42*x3^a13-x1^a21*x4^a34",
     R"(-x4^a34, x3^a23, -x2^a42, 0, 0
        0, 0, 0, x4^a34, -x3^a13
        0, -x4^a14, 0, x2^a42, -x1^a21
        x3^a13, -x2^a32, x1^a21, 0, 0
        0, 0, x4^a14, -x3^a23, x2^a32)",
     R"(x2^a2-x1^a21*x3^a23
        x2^a42*x3^a13-x1^a21*x4^a34
        x3^a3-x2^a32*x4^a34
        x3^a13*x4^a14
        x4^a4)"},
    {C::C2b, 1, kSix,
     "x2^a12*x3^a13, x2^a2, x3^a3, x4^a4, x3^a13*x4^a24",
     R"(x4^a24, x3^a43, x2^a32, 0, 0, 0
        0, 0, -x3^a13, 0, 0, -x4^a4
        0, -x2^a12, 0, 0, -x4^a24, 0
        0, 0, 0, -x3^a13, 0, x2^a2
        -x2^a12, 0, 0, x4^a34, x3^a43, 0)",
     R"(x3^a43, x2^a32*x4^a34
        -x4^a24, 0
        0, -x4^a4
        0, x2^a2
        x2^a12, 0
        0, x3^a13)"},
    {C::C2b, 2, kSix,
     "x2^a12*x3^a13, x2^a2-x1^a21*x4^a24, x3^a3, x4^a4, x3^a13*x4^a24",
     R"(x4^a24, x3^a43, x2^a32, 0, 0, 0
        0, 0, -x3^a13, 0, 0, -x4^a4
        0, -x2^a12, 0, 0, -x4^a24, 0
        0, 0, 0, -x3^a13, 0, x2^a2-x1^a21*x4^a24
        -x2^a12, 0, -x1^a21, x4^a34, x3^a43, 0)",
     R"(x3^a43, x2^a32*x4^a34
        -x4^a24, 0
        0, -x4^a4
        0, x2^a2-x1^a21*x4^a24
        x2^a12, 0
        0, x3^a13)"},
    {C::C2b, 3, kFive,
     "x2^a12*x3^a13, x2^a2, x3^a3-x2^a32*x4^a34, x4^a4, x3^a13*x4^a24",
     R"(-x4^a24, 0, 0, -x2^a32, -x3^a43
        0, 0, 0, x3^a13, x4^a34
        0, -x4^a24, 0, 0, x2^a12
        0, -x2^a32, -x3^a13, 0, 0
        x2^a12, x3^a43, x4^a34, 0, 0)",
     R"(x3^a3-x2^a32*x4^a34
        -x2^a12*x3^a13
        x2^a2
        x4^a4
        -x3^a13*x4^a24)"},
    {C::C2b, 4, kFive,
     "x2^a12*x3^a13, x2^a2-x1^a21*x4^a24, x3^a3-x2^a32*x4^a34, x4^a4, x3^a13*x4^a24",
     R"(x4^a24, x2^a32, x3^a43, 0, 0
        0, -x3^a13, -x4^a34, 0, 0
        0, 0, -x2^a12, 0, -x4^a24
        0, 0, -x1^a21, -x3^a13, -x2^a32
        -x2^a12, -x1^a21, 0, x4^a34, x3^a43)",
     R"(x3^a3-x2^a32*x4^a34
        x4^a4
        -x3^a13*x4^a24
        -x2^a2+x1^a21*x4^a24
        x2^a12*x3^a13)"},
    {C::C3a, 1, kSix,
     "x2^a12*x4^a14, x2^a2, x3^a3, x4^a4, x3^a23*x4^a14",
     R"(0, 0, x3^a23, x4^a34, x2^a42, 0
        0, -x3^a3, 0, 0, -x4^a14, 0
        x4^a14, x2^a2, 0, 0, 0, 0
        0, 0, 0, -x2^a12, 0, -x3^a23
        -x3^a43, 0, -x2^a12, 0, 0, x4^a34)",
     R"(x2^a2, 0
        -x4^a14, 0
        -x2^a42*x3^a43, x4^a34
        0, -x3^a23
        x3^a3, 0
        0, x2^a12)"},
    {C::C3a, 2, kSix,
     "x2^a12*x4^a14, x2^a2-x1^a21*x3^a23, x3^a3, x4^a4, x3^a23*x4^a14",
     R"(0, 0, x3^a23, x4^a34, x2^a42, 0
        0, -x3^a3, 0, 0, -x4^a14, 0
        x4^a14, x2^a2-x1^a21*x3^a23, 0, 0, 0, 0
        0, 0, 0, -x2^a12, 0, -x3^a23
        -x3^a43, 0, -x2^a12, 0, -x1^a21, x4^a34)",
     R"(x2^a2-x1^a21*x3^a23, 0
        -x4^a14, 0
        -x2^a42*x3^a43, x4^a34
        0, -x3^a23
        x3^a3, 0
        0, x2^a12)"},
    {C::C3a, 3, kSix,
     "x2^a12*x4^a14, x2^a2, x3^a3-x1^a31*x4^a34, x4^a4, x3^a23*x4^a14",
     R"(0, 0, x3^a23, x4^a34, x2^a42, 0
        0, -x3^a3+x1^a31*x4^a34, 0, 0, -x4^a14, 0
        x4^a14, x2^a2, 0, 0, 0, 0
        x1^a31, 0, 0, -x2^a12, 0, -x3^a23
        -x3^a43, 0, -x2^a12, 0, 0, x4^a34)",
     R"(x2^a2, 0
        -x4^a14, 0
        -x2^a42*x3^a43, x4^a34
        x1^a31*x2^a42, -x3^a23
        x3^a3-x1^a31*x4^a34, 0
        0, x2^a12)"},
    {C::C3a, 4, kSix,
     "x2^a12*x4^a14, x2^a2-x1^a21*x3^a23, x3^a3-x1^a31*x4^a34, x4^a4, x3^a23*x4^a14",
     R"(x3^a23, x2^a42, x4^a34, 0, 0, 0
        0, -x4^a14, 0, 0, 0, x3^a3-x1^a31*x4^a34
        0, 0, 0, -x4^a14, 0, -x2^a2+x1^a21*x3^a23
        0, 0, -x2^a12, -x1^a31, -x3^a23, 0
        -x2^a12, -x1^a21, 0, x3^a43, x4^a34, 0)",
     R"(x4^a34, x2^a42*x3^a43
        0, -x3^a3+x1^a31*x4^a34
        -x3^a23, -x1^a31*x2^a42
        0, x2^a2-x1^a21*x3^a23
        x2^a12, x1^a1
        0, -x4^a14)"},
};

// Tangent-cone generator lists, identical to the first matrix of each template.
struct VariantGens {
  C label;
  int variant;
  std::array<std::string_view, 5> gens;
};

const VariantGens kVariantGens[] = {
    {C::C1a, 1, {"x3^a13*x4^a14", "x2^a2", "x3^a3", "x4^a4", "x2^a32*x4^a14"}},
    {C::C1a, 2, {"x3^a13*x4^a14", "x2^a2-x1^a21*x4^a24", "x3^a3", "x4^a4", "x2^a32*x4^a14"}},
    {C::C1b, 1, {"x3^a13*x4^a14", "x2^a2", "x3^a3", "x4^a4", "x2^a42*x3^a13"}},
    {C::C1b, 2, {"x3^a13*x4^a14", "x2^a2-x1^a21*x3^a23", "x3^a3", "x4^a4", "x2^a42*x3^a13"}},
    {C::C1b, 3, {"x3^a13*x4^a14", "x2^a2", "x3^a3-x2^a32*x4^a34", "x4^a4", "x2^a42*x3^a13"}},
    {C::C1b, 4, {"x3^a13*x4^a14", "x2^a2-x1^a21*x3^a23", "x3^a3-x2^a32*x4^a34", "x4^a4",
                 "x2^a42*x3^a13-x1^a21*x4^a34"}},
    {C::C2b, 1, {"x2^a12*x3^a13", "x2^a2", "x3^a3", "x4^a4", "x3^a13*x4^a24"}},
    {C::C2b, 2, {"x2^a12*x3^a13", "x2^a2-x1^a21*x4^a24", "x3^a3", "x4^a4", "x3^a13*x4^a24"}},
    {C::C2b, 3, {"x2^a12*x3^a13", "x2^a2", "x3^a3-x2^a32*x4^a34", "x4^a4", "x3^a13*x4^a24"}},
    {C::C2b, 4, {"x2^a12*x3^a13", "x2^a2-x1^a21*x4^a24", "x3^a3-x2^a32*x4^a34", "x4^a4",
                 "x3^a13*x4^a24"}},
    {C::C3a, 1, {"x2^a12*x4^a14", "x2^a2", "x3^a3", "x4^a4", "x3^a23*x4^a14"}},
    {C::C3a, 2, {"x2^a12*x4^a14", "x2^a2-x1^a21*x3^a23", "x3^a3", "x4^a4", "x3^a23*x4^a14"}},
    {C::C3a, 3, {"x2^a12*x4^a14", "x2^a2", "x3^a3-x1^a31*x4^a34", "x4^a4", "x3^a23*x4^a14"}},
    {C::C3a, 4, {"x2^a12*x4^a14", "x2^a2-x1^a21*x3^a23", "x3^a3-x1^a31*x4^a34", "x4^a4",
                 "x3^a23*x4^a14"}},
};

WitnessSpec at(std::vector<std::size_t> rows, std::vector<std::size_t> cols, std::string_view printed,
               std::string_view effective = {}) {
  return {std::move(rows), std::move(cols), true, printed, effective};
}

WitnessSpec found(std::string_view printed, std::string_view effective = {}) {
  return {{}, {}, false, printed, effective};
}

// Tabulated forms read "f_i" as the i-th tangent-cone generator; an effective form is
// given only where the tabulated one is not the minor (see README, "Witness corrections").
const std::vector<WitnessTable>& witness_tables() {
  static const std::vector<WitnessTable> tables = {
      {C::C1a, 1,
       {at({2}, {1, 3}, "-x2^(2*a2+a32)"), at({1}, {5, 6}, "x3^(a3+2*a13)*x4^a14")},
       {found("x2^(a2+a32)"), found("x3^(a3+a13)", "-x3^(a3+a13)"), found("x4^a4")}},
      {C::C1a, 2,
       {at({1}, {5, 6}, "-x3^(2*a13)*x4^(2*a14)", "x3^(2*a13)*x4^(2*a14)"),
        at({2}, {1, 3}, "-x2^(2*a32)*(x2^a2-x1^a21*x4^a24)^2", "-x2^a32*(x2^a2-x1^a21*x4^a24)^2")},
       {found("x2^a2*(x2^a2-x1^a21*x4^a24)", "x2^a32*(x2^a2-x1^a21*x4^a24)"), found("x3^(a3+a13)", "-x3^(a3+a13)"),
        found("x4^a4")}},
      {C::C1b, 1,
       {at({3}, {2, 5}, "x3^(2*a3)"), at({2}, {1, 3}, "x2^(a42+2*a2)", "-x2^(a42+2*a2)")},
       {found("x2^(a2+a42)"), found("x3^a3", "-x3^a3"), found("x4^(a4+a14)")}},
      {C::C1b, 2,
       {at({3}, {2, 6}, "x3^(2*a3)", "-x3^(2*a3)"), at({4}, {4, 6}, "-x2^a32*x4^(2*a4)")},
       {found("-x3^a3"), found("x1^a21*x4^a4", "-x1^a21*x4^a4"),
        found("x2^a42*(x2^a2-x1^a21*x3^a23)")}},
      {C::C1b, 3, {at({3}, {4}, "(x3^a3-x2^a32*x4^a34)^2"), at({4}, {5}, "x4^(2*a4)")}, {}},
      {C::C1b, 4, {at({2}, {1}, "(x2^a2-x1^a21*x3^a23)^2"), at({4}, {5}, "x4^(2*a4)")}, {}},
      {C::C2b, 1,
       {at({3}, {1, 6}, "x3^(2*a3)"), at({2}, {4, 5}, "x2^(a12+2*a2)")},
       {found("-x2^(a2+a12)"), found("x3^a3-x2^a32*x4^a34", "x3^a3"), found("x4^(a4+a24)")}},
      {C::C2b, 2,
       {at({3}, {1, 6}, "x3^(2*a3)"), at({4}, {2, 3}, "-x4^(a24+2*a4)")},
       {found("-x2^a12*(x2^a2-x1^a21*x4^a24)"), found("x3^a3"), found("x4^(a24+a4)")}},
      {C::C2b, 3, {at({2}, {3}, "-x2^(2*a2)"), at({4}, {4}, "x4^(2*a4)")}, {}},
      {C::C2b, 4, {at({1}, {5}, "-x2^(2*a12)*x3^(2*a13)"), at({4}, {2}, "-x4^(2*a4)")}, {}},
      {C::C3a, 1,
       {at({3}, {5, 6}, "-x2^a12*x3^(2*a3)"), at({4}, {2, 3}, "-x4^(2*a4)")},
       {found("x2^(a12+a2)"), found("x3^(a23+a3)"), found("-x4^a4")}},
      {C::C3a, 2,
       {at({3}, {4, 5}, "-x3^(2*a3+a23)"), at({4}, {2, 3}, "-x4^(2*a4)")},
       {found("x2^a12*(x2^a2-x1^a21*x3^a23)"), found("x3^(a23+a3)"), found("-x4^a4")}},
      {C::C3a, 3,
       {at({2}, {1, 6}, "-x2^(2*a2)", "x2^(a12+2*a2)"), at({4}, {2, 3}, "-x4^(2*a4)")},
       {found("x2^(a12+a2)"), found("x3^a23*(x3^a3-x1^a31*x4^a34)"), found("-x4^a4")}},
      {C::C3a, 4,
       {at({1}, {5, 6}, "x2^(2*a12)*x4^(2*a14)"),
        at({3}, {2, 3}, "-x3^(2*a23)*(x3^a3-x1^a31*x4^a34)^2", "x3^a23*(x3^a3-x1^a31*x4^a34)^2")},
       {found("-x2^a12*x4^a14", "x2^a12*(x3^a3-x1^a31*x4^a34)"), found("-x4^a4"),
        found("x3^a23*x4^a14", "x1^a31*(x2^a2-x1^a21*x3^a23)")}},
  };
  return tables;
}

}  // namespace

std::span<const ResolutionTemplate> resolution_templates() { return kTemplates; }

const ResolutionTemplate& resolution_template(CaseLabel c, int variant) {
  for (const auto& t : kTemplates)
    if (t.label == c && t.variant == variant) return t;
  throw Error(Reason::UnsupportedCase,
              "no resolution template for case " + std::string(to_string(c)) + " variant " +
                  std::to_string(variant));
}

const std::array<std::string_view, 5>& variant_generators(CaseLabel c, int variant) {
  for (const auto& v : kVariantGens)
    if (v.label == c && v.variant == variant) return v.gens;
  throw Error(Reason::UnsupportedCase,
              "no generator list for case " + std::string(to_string(c)) + " variant " +
                  std::to_string(variant));
}

const WitnessTable& witness_table(CaseLabel c, int variant) {
  for (const auto& t : witness_tables())
    if (t.label == c && t.variant == variant) return t;
  throw Error(Reason::UnsupportedCase,
              "no witness table for case " + std::string(to_string(c)) + " variant " +
                  std::to_string(variant));
}

}  // namespace tancone
