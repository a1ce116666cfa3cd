#include "tancone/errors.hpp"

namespace tancone {

std::string_view to_string(Reason r) {
  switch (r) {
    case Reason::InputError: return "InputError";
    case Reason::DomainError: return "DomainError";
    case Reason::DimensionMismatch: return "DimensionMismatch";
    case Reason::GcdNotOne: return "GcdNotOne";
    case Reason::NotMinimallyGenerated: return "NotMinimallyGenerated";
    case Reason::NotSymmetric: return "NotSymmetric";
    case Reason::CompleteIntersection: return "CompleteIntersection";
    case Reason::StructureAmbiguous: return "StructureAmbiguous";
    case Reason::UnsupportedCase: return "UnsupportedCase";
    case Reason::RestrictionViolated: return "RestrictionViolated";
    case Reason::InternalInconsistency: return "InternalInconsistency";
    case Reason::VariantMismatch: return "VariantMismatch";
    case Reason::InhomogeneousEntry: return "InhomogeneousEntry";
    case Reason::WitnessMismatch: return "WitnessMismatch";
    case Reason::CoprimalityFailure: return "CoprimalityFailure";
    case Reason::Unverified: return "Unverified";
  }
  return "Unknown";
}

Error::Error(Reason reason, const std::string& detail)
    : std::runtime_error(std::string(to_string(reason)) + ": " + detail),
      reason_(reason),
      detail_(detail) {}

}  // namespace tancone
