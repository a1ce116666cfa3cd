#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tancone {

// Reason codes double as the machine-readable rejection strings in JSON/CSV.
enum class Reason {
  InputError,
  DomainError,
  DimensionMismatch,
  GcdNotOne,
  NotMinimallyGenerated,
  NotSymmetric,
  CompleteIntersection,
  StructureAmbiguous,
  UnsupportedCase,
  RestrictionViolated,
  InternalInconsistency,
  VariantMismatch,
  InhomogeneousEntry,
  WitnessMismatch,
  CoprimalityFailure,
  Unverified,
};

std::string_view to_string(Reason r);

class Error : public std::runtime_error {
 public:
  Error(Reason reason, const std::string& detail);
  Reason reason() const noexcept { return reason_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  Reason reason_;
  std::string detail_;
};

}  // namespace tancone
