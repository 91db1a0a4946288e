#ifndef KACLIM_VERIFY_HPP
#define KACLIM_VERIFY_HPP

#include <string>
#include <vector>

#include "kaclim/bk.hpp"

namespace kaclim {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // empty when passing
};

/// Cross-check battery for one input matrix: closed forms against the
/// generic cochain complex, invariant-theory identities, and the series
/// reconciliations. Independent of the caller's reporting pipeline.
std::vector<CheckResult> run_verification(const Gcm& gcm, Variant variant, int max_degree);

}  // namespace kaclim

#endif
