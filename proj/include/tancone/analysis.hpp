#pragma once

#include <array>
#include <cstdint>
#include <map>
#include "json.hpp"
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tancone/bresinsky.hpp"
#include "tancone/errors.hpp"
#include "tancone/hilbert.hpp"
#include "tancone/resolution.hpp"
#include "tancone/tangent_cone.hpp"

namespace tancone {

inline constexpr const char* kSchema = "tancone.analysis/1";

struct AnalysisOptions {
  std::optional<std::int64_t> hilbert_bound;
};

struct AnalysisRecord {
  std::vector<std::int64_t> input;
  std::vector<std::int64_t> generators;  // sorted, deduplicated
  std::vector<int> permutation;          // permutation[i] = sorted position (1-based) of input[i]
  std::optional<bool> minimally_generated;
  std::optional<bool> symmetric;
  std::optional<std::int64_t> frobenius;

  std::optional<Reason> rejection;
  std::string rejection_detail;

  std::optional<BresinskyData> structure;
  std::optional<SupportReport> support;
  std::optional<TangentConeIdeal> tangent_cone;
  std::optional<GradedFreeResolution> resolution;
  std::optional<VerificationReport> verification;
  std::optional<HilbertReport> hilbert;

  bool accepted() const { return !rejection.has_value(); }
  // A supported input on which some certification step failed.
  bool verification_failed() const;
  std::string status() const;
};

// Runs the whole pipeline. Rejections are recorded, never thrown;
// malformed input (not four positive integers) throws InputError.
AnalysisRecord analyze(std::span<const std::int64_t> gens, const AnalysisOptions& opts = {});

struct JsonSections {
  bool resolution = false;   // matrices
  bool witnesses = false;    // full witness and rank detail
  bool hilbert_table = false;
};

nlohmann::ordered_json to_json(const AnalysisRecord& rec, const JsonSections& sections = {});

// Sweep over the case 1a parametrization with every alpha_ij in [1, alpha_max].
struct SweepOptions {
  int alpha_max = 3;
  std::optional<CaseLabel> case_filter;
  std::optional<int> variant_filter;
  std::optional<std::string> status_filter;
  unsigned threads = 0;  // 0: TANCONE_THREADS or hardware concurrency
};

struct SweepRow {
  CanonicalParameters params;
  AnalysisRecord record;
  double micros = 0;
};

struct SweepResult {
  std::size_t tuples = 0;
  std::size_t degenerate = 0;  // gcd != 1 or not minimally generated
  std::size_t families = 0;    // distinct valid semigroups before filtering
  std::vector<SweepRow> rows;  // filtered, ordered by sorted generators
  std::map<std::string, std::size_t> counts;  // "1b/4", "UnsupportedCase", ... over all families
  double seconds = 0;
};

unsigned thread_count();
SweepResult run_sweep(const SweepOptions& opts);

// Distinct valid families in enumeration order (first parameter tuple wins on duplicates).
std::vector<CanonicalParameters> sweep_families(int alpha_max, std::size_t* tuples = nullptr,
                                                std::size_t* degenerate = nullptr);

std::string csv_header();
std::string csv_row(const SweepRow& row);

}  // namespace tancone
