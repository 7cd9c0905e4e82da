#pragma once

#include "abideal/fibers.hpp"

#include <string>
#include <vector>

namespace abideal {

struct TypeVerification {
  LieType type;
  std::vector<NamedCheck> checks;

  bool ok() const { return all_pass(checks); }
  const NamedCheck* find(const std::string& name) const;
};

/// Everything at once: enumeration counts, the exhaustive-oracle cross-check
/// on small systems, generator and extension laws, fiber structure, the
/// order-ideal description of fibers, and the per-family reference data
/// (F4 table, E-series histograms and classes, classical closed forms).
TypeVerification verify_type(LieType type);

/// A1-A8, B2-B4, C2-C4, D4-D6, E6-E8, F4, G2.
std::vector<LieType> standard_battery();

/// Check names whose pass is the computational confirmation of the
/// order-ideal fiber description (reported separately by the CLI).
bool is_conjecture_check(const std::string& name);

}  // namespace abideal
