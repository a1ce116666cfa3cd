#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tancone/bresinsky.hpp"
#include "tancone/errors.hpp"
#include "tancone/poly.hpp"
#include "tancone/tangent_cone.hpp"

namespace tancone {

struct ResolutionTemplate {
  CaseLabel label;
  int variant;
  std::array<std::size_t, 4> ranks;
  std::string_view phi1;
  std::string_view phi2;
  std::string_view phi3;
};

std::span<const ResolutionTemplate> resolution_templates();
const ResolutionTemplate& resolution_template(CaseLabel c, int variant);

// A minor predicted in an exactness argument. Indices are 1-based deletions;
// when `located` is false the size is fixed and the minor is found by search.
struct WitnessSpec {
  std::vector<std::size_t> deleted_rows;
  std::vector<std::size_t> deleted_cols;
  bool located = true;
  std::string_view printed;
  std::string_view effective;  // empty: same as printed
};

struct WitnessTable {
  CaseLabel label;
  int variant;
  std::vector<WitnessSpec> phi2;  // nonzero (b1-1)-minors
  std::vector<WitnessSpec> phi3;  // nonzero b3-minors (empty when b3 = 1)
};

const WitnessTable& witness_table(CaseLabel c, int variant);

struct GradedFreeResolution {
  CaseLabel label = CaseLabel::C1a;
  int variant = 1;
  std::array<std::size_t, 4> ranks{};
  PolyMatrix phi1, phi2, phi3;
  AlphaValues alphas;
  // twists[k] lists the (nonpositive) twists of the k-th free module; twists[0] = {0}.
  std::vector<std::vector<std::int64_t>> twists;
  bool verified = false;
};

using BettiSequence = std::array<std::size_t, 4>;

GradedFreeResolution build_resolution(const TangentConeIdeal& tc, const BresinskyData& d);

bool verify_complex(const GradedFreeResolution& r);
bool verify_minimality(const GradedFreeResolution& r);

struct RankReport {
  bool ok = false;
  bool phi1_nonzero = false;
  bool phi2_top_minors_vanish = false;
  bool phi2_minor_nonzero = false;
  bool phi3_minor_nonzero = false;
  bool telescoping = false;
  std::array<std::size_t, 3> ranks{};  // certified ranks of phi1, phi2, phi3
};
RankReport verify_ranks(const GradedFreeResolution& r);

struct MinorWitness {
  std::vector<std::size_t> stated_rows, stated_cols;  // 1-based deletions (empty if unstated)
  std::vector<std::size_t> realized_rows, realized_cols;  // 1-based deletions where found
  std::string printed, effective;
  bool corrected = false;       // effective differs from printed
  bool realized = false;        // effective prediction equals some minor
  bool at_stated_location = false;
  bool printed_realized = false;  // printed prediction equals some minor
  std::string value;            // canonical expansion of the effective prediction
};

struct PairVerdict {
  std::size_t a = 0, b = 0;
  bool coprime = false;
  bool flagged = false;
  std::string detail;
};

struct WitnessGroup {
  std::string matrix;  // "phi2" or "phi3"
  std::size_t minor_size = 0;
  std::vector<MinorWitness> minors;
  std::vector<PairVerdict> pairs;          // on the effective forms
  std::vector<PairVerdict> printed_pairs;  // on the printed forms
  bool printed_coprime = true;
  bool ok = false;
};

struct WitnessReport {
  bool ok = false;
  std::optional<Reason> failure;  // WitnessMismatch or CoprimalityFailure
  std::vector<WitnessGroup> groups;
  std::size_t corrected = 0;
  std::size_t flagged_pairs = 0;
};
WitnessReport exactness_witnesses(const GradedFreeResolution& r);

// Throws InhomogeneousEntry.
std::vector<std::vector<std::int64_t>> infer_twists(const GradedFreeResolution& r);

BettiSequence betti_sequence(const GradedFreeResolution& r);
bool homogeneous_type(const GradedFreeResolution& r);

struct VerificationReport {
  bool complex_ok = false;
  bool minimal_ok = false;
  bool rank_ok = false;
  bool witnesses_ok = false;
  bool twists_ok = false;
  std::string twist_error;
  RankReport ranks;
  WitnessReport witnesses;
  BettiSequence betti{};

  bool ok() const { return complex_ok && minimal_ok && rank_ok && witnesses_ok && twists_ok; }
};

// Runs every check, stores the inferred twists and sets r.verified.
VerificationReport certify(GradedFreeResolution& r);

}  // namespace tancone
