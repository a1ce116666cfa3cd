#include "tancone/tangent_cone.hpp"

#include "tancone/errors.hpp"
#include "tancone/expr.hpp"

namespace tancone {

int variant_count(CaseLabel c) {
  if (c == CaseLabel::C1a) return 2;
  return is_supported_case(c) ? 4 : 0;
}

int select_variant(const SupportReport& r) {
  int v = 1;
  if (!r.restrictions.empty() && r.restrictions[0].equality) v += 1;
  if (r.restrictions.size() > 1 && r.restrictions[1].equality) v += 2;
  return v;
}

TangentConeIdeal tangent_generators(const BresinskyData& d) {
  SupportReport report = check_restrictions(d);
  const int selected = select_variant(report);
  const auto f = build_ideal_generators(d);
  const auto alphas = d.alpha_values();

  std::array<Poly, 5> forms;
  for (int i = 0; i < 5; ++i) forms[i] = lowest_degree_form(f[i]);

  // Which listed variants agree with the computed forms, generator by generator up to sign.
  auto mismatch = [&](int variant) -> int {
    const auto& tpl = variant_generators(d.label, variant);
    for (int i = 0; i < 5; ++i) {
      Poly g = instantiate_entry(tpl[i], alphas);
      if (!(forms[i] == g) && !(forms[i] == -g)) return i;
    }
    return -1;
  };

  int bad = mismatch(selected);
  if (bad >= 0)
    throw Error(Reason::VariantMismatch,
                "f" + std::to_string(bad + 1) + " lowest form " + forms[bad].to_string() +
                    " does not match case " + std::string(to_string(d.label)) + " variant " +
                    std::to_string(selected));
  for (int v = 1; v <= variant_count(d.label); ++v)
    if (v != selected && mismatch(v) < 0)
      throw Error(Reason::VariantMismatch, "lowest forms match more than one variant");

  TangentConeIdeal tc;
  tc.label = d.label;
  tc.variant = selected;
  const auto& tpl = variant_generators(d.label, selected);
  for (int i = 0; i < 5; ++i) {
    tc.generators[i] = instantiate_entry(tpl[i], alphas);
    auto deg = tc.generators[i].homogeneous_degree();
    if (!deg)
      throw Error(Reason::VariantMismatch, "generator " + tc.generators[i].to_string() + " is not homogeneous");
    tc.degrees[i] = *deg;
  }
  return tc;
}

}  // namespace tancone
