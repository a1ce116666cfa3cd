#include "tancone/resolution.hpp"

#include <algorithm>

#include "tancone/expr.hpp"

namespace tancone {
namespace {

std::vector<std::size_t> to_zero_based(const std::vector<std::size_t>& v) {
  std::vector<std::size_t> out;
  for (auto i : v) out.push_back(i - 1);
  return out;
}

std::vector<std::size_t> deleted_one_based(std::size_t n, const std::vector<std::size_t>& kept) {
  auto del = complement(n, kept);
  for (auto& i : del) ++i;
  return del;
}

// All k-minors of a matrix, computed once on first use.
class MinorCache {
 public:
  MinorCache(const PolyMatrix& m, std::size_t k) : m_(m), k_(k) {}

  struct Entry {
    std::vector<std::size_t> rows, cols;  // kept, 0-based
    Poly value;
  };

  const std::vector<Entry>& all() {
    if (!built_) {
      for (const auto& rs : combinations(m_.rows(), k_))
        for (const auto& cs : combinations(m_.cols(), k_)) entries_.push_back({rs, cs, minor(m_, rs, cs)});
      built_ = true;
    }
    return entries_;
  }

  const Entry* find(const Poly& p) {
    for (const auto& e : all())
      if (e.value == p) return &e;
    return nullptr;
  }

 private:
  const PolyMatrix& m_;
  std::size_t k_;
  bool built_ = false;
  std::vector<Entry> entries_;
};

WitnessGroup check_group(const std::string& name, const PolyMatrix& m, std::size_t k,
                         const std::vector<WitnessSpec>& specs, const AlphaValues& alphas) {
  WitnessGroup g;
  g.matrix = name;
  g.minor_size = k;
  MinorCache cache(m, k);
  std::vector<FactoredPoly> eff, printed;
  bool all_realized = true;
  for (const auto& spec : specs) {
    MinorWitness w;
    w.stated_rows = spec.deleted_rows;
    w.stated_cols = spec.deleted_cols;
    w.printed = std::string(spec.printed);
    w.effective = std::string(spec.effective.empty() ? spec.printed : spec.effective);
    w.corrected = !spec.effective.empty() && spec.effective != spec.printed;
    FactoredPoly fe, fp;
    try {
      fe = instantiate_factored(w.effective, alphas);
      fp = instantiate_factored(w.printed, alphas);
    } catch (const Error& e) {
      w.value = e.detail();
      all_realized = false;
      eff.emplace_back();
      printed.emplace_back();
      g.minors.push_back(std::move(w));
      continue;
    }
    Poly value = fe.expand();
    w.value = value.to_string();

    std::vector<std::size_t> kept_rows, kept_cols;
    if (spec.located) {
      kept_rows = complement(m.rows(), to_zero_based(spec.deleted_rows));
      kept_cols = complement(m.cols(), to_zero_based(spec.deleted_cols));
      if (kept_rows.size() == k && kept_cols.size() == k && minor(m, kept_rows, kept_cols) == value) {
        w.realized = w.at_stated_location = true;
        w.realized_rows = spec.deleted_rows;
        w.realized_cols = spec.deleted_cols;
      }
    }
    if (!w.realized) {
      if (const auto* e = cache.find(value)) {
        w.realized = true;
        w.realized_rows = deleted_one_based(m.rows(), e->rows);
        w.realized_cols = deleted_one_based(m.cols(), e->cols);
      }
    }
    if (!w.corrected) {
      w.printed_realized = w.realized;
    } else {
      Poly pv = fp.expand();
      w.printed_realized = (spec.located && kept_rows.size() == k && kept_cols.size() == k &&
                            minor(m, kept_rows, kept_cols) == pv) ||
                           cache.find(pv) != nullptr;
    }
    all_realized = all_realized && w.realized;
    eff.push_back(std::move(fe));
    printed.push_back(std::move(fp));
    g.minors.push_back(std::move(w));
  }

  bool all_coprime = true;
  for (std::size_t a = 0; a < eff.size(); ++a)
    for (std::size_t b = a + 1; b < eff.size(); ++b) {
      auto v = structurally_coprime(eff[a], eff[b]);
      g.pairs.push_back({a, b, v.coprime, v.flagged, v.detail});
      all_coprime = all_coprime && v.coprime;
      auto pv = structurally_coprime(printed[a], printed[b]);
      g.printed_pairs.push_back({a, b, pv.coprime, pv.flagged, pv.detail});
      g.printed_coprime = g.printed_coprime && pv.coprime;
    }
  g.ok = all_realized && all_coprime;
  return g;
}

}  // namespace

GradedFreeResolution build_resolution(const TangentConeIdeal& tc, const BresinskyData& d) {
  if (tc.label != d.label) throw Error(Reason::InternalInconsistency, "tangent cone and structure disagree on the case");
  if (!is_supported_case(d.label)) throw Error(Reason::UnsupportedCase, std::string(to_string(d.label)));
  const auto& tpl = resolution_template(tc.label, tc.variant);
  GradedFreeResolution r;
  r.label = tc.label;
  r.variant = tc.variant;
  r.ranks = tpl.ranks;
  r.alphas = d.alpha_values();
  r.phi1 = instantiate_matrix(tpl.phi1, r.alphas);
  r.phi2 = instantiate_matrix(tpl.phi2, r.alphas);
  r.phi3 = instantiate_matrix(tpl.phi3, r.alphas);
  if (r.phi1.rows() != r.ranks[0] || r.phi1.cols() != r.ranks[1] || r.phi2.rows() != r.ranks[1] ||
      r.phi2.cols() != r.ranks[2] || r.phi3.rows() != r.ranks[2] || r.phi3.cols() != r.ranks[3])
    throw Error(Reason::InternalInconsistency, "template shape disagrees with its ranks");
  for (std::size_t j = 0; j < 5; ++j)
    if (!(r.phi1(0, j) == tc.generators[j]))
      throw Error(Reason::VariantMismatch, "first matrix entry " + std::to_string(j + 1) +
                                               " differs from the tangent cone generator");
  return r;
}

bool verify_complex(const GradedFreeResolution& r) {
  if (r.phi1.cols() != r.phi2.rows() || r.phi2.cols() != r.phi3.rows()) return false;
  return (r.phi1 * r.phi2).is_zero() && (r.phi2 * r.phi3).is_zero();
}

bool verify_minimality(const GradedFreeResolution& r) {
  for (const PolyMatrix* m : {&r.phi1, &r.phi2, &r.phi3})
    for (std::size_t i = 0; i < m->rows(); ++i)
      for (std::size_t j = 0; j < m->cols(); ++j)
        if ((*m)(i, j).has_constant_term()) return false;
  return true;
}

RankReport verify_ranks(const GradedFreeResolution& r) {
  RankReport rep;
  for (std::size_t j = 0; j < r.phi1.cols(); ++j) rep.phi1_nonzero = rep.phi1_nonzero || !r.phi1(0, j).is_zero();

  const std::size_t b1 = r.phi1.cols();
  const std::size_t b2 = r.phi2.cols();
  const std::size_t b3 = r.phi3.cols();
  const std::size_t target2 = b1 - 1;
  rep.phi2_top_minors_vanish = all_minors_vanish(r.phi2, b1);

  // Designated minors first, then any nonzero minor of the right size.
  try {
    for (const auto& spec : witness_table(r.label, r.variant).phi2) {
      auto rows = complement(r.phi2.rows(), to_zero_based(spec.deleted_rows));
      auto cols = complement(r.phi2.cols(), to_zero_based(spec.deleted_cols));
      if (rows.size() == target2 && cols.size() == target2 && !minor(r.phi2, rows, cols).is_zero()) {
        rep.phi2_minor_nonzero = true;
        break;
      }
    }
  } catch (const Error&) {
  }
  if (!rep.phi2_minor_nonzero)
    rep.phi2_minor_nonzero = !all_minors_vanish(r.phi2, target2);
  rep.phi3_minor_nonzero = b3 > 0 && !all_minors_vanish(r.phi3, b3);

  rep.ranks = {rep.phi1_nonzero ? 1u : 0u, rep.phi2_minor_nonzero && rep.phi2_top_minors_vanish ? target2 : 0,
               rep.phi3_minor_nonzero ? b3 : 0};
  rep.telescoping = r.phi1.rows() == 1 && rep.ranks[0] + rep.ranks[1] == b1 && rep.ranks[1] + rep.ranks[2] == b2;
  rep.ok = rep.phi1_nonzero && rep.phi2_top_minors_vanish && rep.phi2_minor_nonzero && rep.phi3_minor_nonzero &&
           rep.telescoping;
  return rep;
}

WitnessReport exactness_witnesses(const GradedFreeResolution& r) {
  WitnessReport rep;
  const auto& table = witness_table(r.label, r.variant);
  rep.groups.push_back(check_group("phi2", r.phi2, r.phi1.cols() - 1, table.phi2, r.alphas));
  if (!table.phi3.empty()) rep.groups.push_back(check_group("phi3", r.phi3, r.phi3.cols(), table.phi3, r.alphas));
  rep.ok = true;
  bool realized = true;
  for (const auto& g : rep.groups) {
    rep.ok = rep.ok && g.ok;
    for (const auto& w : g.minors) {
      realized = realized && w.realized;
      rep.corrected += w.corrected;
    }
    for (const auto& p : g.pairs) rep.flagged_pairs += p.flagged;
  }
  if (!rep.ok) rep.failure = realized ? Reason::CoprimalityFailure : Reason::WitnessMismatch;
  return rep;
}

std::vector<std::vector<std::int64_t>> infer_twists(const GradedFreeResolution& r) {
  std::vector<std::vector<std::int64_t>> shifts{{0}};
  int k = 1;
  for (const PolyMatrix* m : {&r.phi1, &r.phi2, &r.phi3}) {
    const auto& rows = shifts.back();
    if (rows.size() != m->rows())
      throw Error(Reason::InhomogeneousEntry, "matrix " + std::to_string(k) + " has the wrong number of rows");
    std::vector<std::int64_t> cols(m->cols());
    for (std::size_t j = 0; j < m->cols(); ++j) {
      std::optional<std::int64_t> col;
      for (std::size_t i = 0; i < m->rows(); ++i) {
        const Poly& e = (*m)(i, j);
        if (e.is_zero()) continue;
        auto deg = e.homogeneous_degree();
        if (!deg)
          throw Error(Reason::InhomogeneousEntry, "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                                      ") of phi" + std::to_string(k) + " is not homogeneous");
        std::int64_t c = rows[i] + static_cast<std::int64_t>(*deg);
        if (col && *col != c)
          throw Error(Reason::InhomogeneousEntry,
                      "column " + std::to_string(j + 1) + " of phi" + std::to_string(k) + " has inconsistent degrees");
        col = c;
      }
      if (!col) throw Error(Reason::InhomogeneousEntry, "zero column in phi" + std::to_string(k));
      cols[j] = *col;
    }
    shifts.push_back(std::move(cols));
    ++k;
  }
  for (auto& level : shifts)
    for (auto& t : level) t = -t;
  return shifts;
}

BettiSequence betti_sequence(const GradedFreeResolution& r) {
  return {r.phi1.rows(), r.phi1.cols(), r.phi2.cols(), r.phi3.cols()};
}

bool homogeneous_type(const GradedFreeResolution& r) {
  return betti_sequence(r) == BettiSequence{1, 5, 5, 1};
}

VerificationReport certify(GradedFreeResolution& r) {
  VerificationReport v;
  v.betti = betti_sequence(r);
  v.complex_ok = verify_complex(r);
  v.minimal_ok = verify_minimality(r);
  v.ranks = verify_ranks(r);
  v.rank_ok = v.ranks.ok && v.betti == r.ranks;
  v.witnesses = exactness_witnesses(r);
  v.witnesses_ok = v.witnesses.ok;
  try {
    r.twists = infer_twists(r);
    v.twists_ok = true;
  } catch (const Error& e) {
    r.twists.clear();
    v.twist_error = e.detail();
  }
  r.verified = v.ok();
  return v;
}

}  // namespace tancone
