#include "tancone/analysis.hpp"

#include <algorithm>

namespace tancone {
namespace {

using json = nlohmann::ordered_json;

json matrix_json(const PolyMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

json inequality_json(const Inequality& q) {
  return {{"text", q.text}, {"lhs", q.lhs}, {"rhs", q.rhs}, {"holds", q.holds}, {"equality", q.equality}};
}

json pairs_json(const std::vector<PairVerdict>& pairs) {
  json out = json::array();
  for (const auto& p : pairs)
    out.push_back({{"a", p.a + 1}, {"b", p.b + 1}, {"coprime", p.coprime}, {"flagged", p.flagged},
                   {"detail", p.detail}});
  return out;
}

json witness_json(const WitnessReport& w) {
  json groups = json::array();
  for (const auto& g : w.groups) {
    json minors = json::array();
    for (const auto& m : g.minors) {
      json item = {{"printed", m.printed},
                   {"effective", m.effective},
                   {"corrected", m.corrected},
                   {"value", m.value},
                   {"realized", m.realized},
                   {"at_stated_location", m.at_stated_location},
                   {"printed_realized", m.printed_realized}};
      item["stated"] = m.stated_rows.empty() && m.stated_cols.empty()
                           ? json(nullptr)
                           : json{{"deleted_rows", m.stated_rows}, {"deleted_cols", m.stated_cols}};
      item["realized_at"] = m.realized ? json{{"deleted_rows", m.realized_rows}, {"deleted_cols", m.realized_cols}}
                                       : json(nullptr);
      minors.push_back(std::move(item));
    }
    groups.push_back({{"matrix", g.matrix},
                      {"minor_size", g.minor_size},
                      {"ok", g.ok},
                      {"minors", std::move(minors)},
                      {"pairs", pairs_json(g.pairs)},
                      {"printed_coprime", g.printed_coprime},
                      {"printed_pairs", pairs_json(g.printed_pairs)}});
  }
  return {{"ok", w.ok},
          {"failure", w.failure ? json(std::string(to_string(*w.failure))) : json(nullptr)},
          {"corrected", w.corrected},
          {"flagged_pairs", w.flagged_pairs},
          {"groups", std::move(groups)}};
}

}  // namespace

bool AnalysisRecord::verification_failed() const {
  if (rejection) return *rejection == Reason::InternalInconsistency;
  return !verification || !verification->ok() || !hilbert || !hilbert->equal || !hilbert->nondecreasing;
}

std::string AnalysisRecord::status() const {
  return rejection ? std::string(to_string(*rejection)) : std::string("ok");
}

AnalysisRecord analyze(std::span<const std::int64_t> gens, const AnalysisOptions& opts) {
  if (gens.size() != 4) throw Error(Reason::InputError, "expected exactly four generators");
  for (auto g : gens)
    if (g <= 0) throw Error(Reason::InputError, "generators must be positive");

  AnalysisRecord rec;
  rec.input.assign(gens.begin(), gens.end());
  rec.generators = rec.input;
  std::sort(rec.generators.begin(), rec.generators.end());
  rec.generators.erase(std::unique(rec.generators.begin(), rec.generators.end()), rec.generators.end());
  for (auto g : rec.input)
    rec.permutation.push_back(
        static_cast<int>(std::lower_bound(rec.generators.begin(), rec.generators.end(), g) - rec.generators.begin()) +
        1);

  auto reject = [&](const Error& e) {
    rec.rejection = e.reason();
    rec.rejection_detail = e.detail();
  };

  std::optional<NumericalSemigroup> sg;
  try {
    sg.emplace(gens);
  } catch (const Error& e) {
    reject(e);
    return rec;
  }
  rec.minimally_generated = sg->is_minimally_generated();
  rec.symmetric = sg->is_symmetric();
  rec.frobenius = sg->frobenius();
  if (!*rec.minimally_generated) {
    reject(Error(Reason::NotMinimallyGenerated, "some generator lies in the semigroup of the others"));
    return rec;
  }
  if (!*rec.symmetric) {
    reject(Error(Reason::NotSymmetric, "gap and nongap counts differ"));
    return rec;
  }

  try {
    rec.structure = solve_structure(*sg);
    rec.support = check_restrictions(*rec.structure);
    rec.tangent_cone = tangent_generators(*rec.structure);
    rec.resolution = build_resolution(*rec.tangent_cone, *rec.structure);
  } catch (const Error& e) {
    reject(e);
    return rec;
  }
  rec.verification = certify(*rec.resolution);
  if (rec.resolution->verified) rec.hilbert = compare_with_oracle(*rec.resolution, *sg, opts.hilbert_bound);
  return rec;
}

nlohmann::ordered_json to_json(const AnalysisRecord& rec, const JsonSections& sections) {
  json j;
  j["schema"] = kSchema;
  j["input"] = rec.input;
  j["generators"] = rec.generators;
  j["permutation"] = rec.permutation;
  j["minimally_generated"] = rec.minimally_generated ? json(*rec.minimally_generated) : json(nullptr);
  j["symmetric"] = rec.symmetric ? json(*rec.symmetric) : json(nullptr);
  j["frobenius"] = rec.frobenius ? json(*rec.frobenius) : json(nullptr);
  j["status"] = rec.status();
  j["reason"] = rec.rejection ? json{{"code", std::string(to_string(*rec.rejection))}, {"detail", rec.rejection_detail}}
                              : json(nullptr);

  if (rec.structure) {
    const auto& d = *rec.structure;
    json aij = json::object();
    for (int i = 1; i <= 4; ++i)
      for (int k = 1; k <= 4; ++k)
        if (d.a(i, k)) aij["a" + std::to_string(i) + std::to_string(k)] = d.a(i, k);
    j["structure"] = {{"case", std::string(to_string(d.label))},
                      {"alpha", d.alpha},
                      {"alpha_ij", std::move(aij)},
                      {"to_canonical", d.to_canonical},
                      {"ideal_generators", [&] {
                         json g = json::array();
                         for (const auto& f : case_binomials(d)) g.push_back(f.to_string());
                         return g;
                       }()}};
  } else {
    j["structure"] = nullptr;
  }
  if (rec.support) {
    json rs = json::array(), im = json::array();
    for (const auto& q : rec.support->restrictions) rs.push_back(inequality_json(q));
    for (const auto& q : rec.support->implied) im.push_back(inequality_json(q));
    j["restrictions"] = {{"supported", rec.support->supported}, {"conditions", rs}, {"implied", im}};
  } else {
    j["restrictions"] = nullptr;
  }

  j["case"] = rec.structure ? json(std::string(to_string(rec.structure->label))) : json(nullptr);
  j["variant"] = rec.tangent_cone ? json(rec.tangent_cone->variant) : json(nullptr);
  if (rec.tangent_cone) {
    json g = json::array();
    for (const auto& p : rec.tangent_cone->generators) g.push_back(p.to_string());
    j["tangent_cone"] = {{"generators", std::move(g)}, {"degrees", rec.tangent_cone->degrees}};
  } else {
    j["tangent_cone"] = nullptr;
  }

  if (rec.resolution) {
    const auto& r = *rec.resolution;
    j["betti"] = betti_sequence(r);
    j["twists"] = r.twists.empty() ? json(nullptr) : json(r.twists);
    j["homogeneous_type"] = homogeneous_type(r);
  } else {
    j["betti"] = nullptr;
    j["twists"] = nullptr;
    j["homogeneous_type"] = nullptr;
  }

  if (rec.verification) {
    const auto& v = *rec.verification;
    json vj = {{"ok", v.ok()},
               {"complex_ok", v.complex_ok},
               {"minimal_ok", v.minimal_ok},
               {"rank_ok", v.rank_ok},
               {"witnesses_ok", v.witnesses_ok},
               {"twists_ok", v.twists_ok},
               {"corrected_witnesses", v.witnesses.corrected},
               {"flagged_pairs", v.witnesses.flagged_pairs}};
    if (!v.twist_error.empty()) vj["twist_error"] = v.twist_error;
    if (sections.witnesses) {
      vj["ranks"] = {{"ok", v.ranks.ok},
                     {"certified", v.ranks.ranks},
                     {"phi1_nonzero", v.ranks.phi1_nonzero},
                     {"phi2_top_minors_vanish", v.ranks.phi2_top_minors_vanish},
                     {"phi2_minor_nonzero", v.ranks.phi2_minor_nonzero},
                     {"phi3_minor_nonzero", v.ranks.phi3_minor_nonzero},
                     {"telescoping", v.ranks.telescoping}};
      vj["witnesses"] = witness_json(v.witnesses);
    }
    j["verification"] = std::move(vj);
  } else {
    j["verification"] = nullptr;
  }

  if (rec.hilbert) {
    const auto& h = *rec.hilbert;
    j["hilbert"] = {{"bound", h.bound},
                    {"equal", h.equal},
                    {"nondecreasing", h.nondecreasing},
                    {"stabilization_value", h.stabilization_value ? json(*h.stabilization_value) : json(nullptr)},
                    {"stabilization_index", h.stabilization_index ? json(*h.stabilization_index) : json(nullptr)},
                    {"values", h.values}};
    if (sections.hilbert_table) {
      json rows = json::array();
      for (std::size_t i = 0; i < h.values.size(); ++i)
        rows.push_back({{"i", i},
                        {"hf", h.values[i]},
                        {"oracle", h.oracle_values[i]},
                        {"equal", h.values[i] == h.oracle_values[i]}});
      j["hilbert"]["table"] = std::move(rows);
    }
  } else {
    j["hilbert"] = nullptr;
  }

  if (sections.resolution && rec.resolution) {
    const auto& r = *rec.resolution;
    j["resolution"] = {{"ranks", r.ranks},
                       {"phi1", matrix_json(r.phi1)},
                       {"phi2", matrix_json(r.phi2)},
                       {"phi3", matrix_json(r.phi3)}};
  }
  return j;
}

}  // namespace tancone
