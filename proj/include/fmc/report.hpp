#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fmc/cyclotomic.hpp"
#include "fmc/errors.hpp"

namespace fmc {

/// A failing tuple of basis indices with its nonzero defect.
struct Witness {
  std::vector<std::size_t> indices;
  std::vector<Scalar> defect;
};

/// Outcome of checking one identity over every relevant basis tuple.
struct CheckReport {
  std::string identity;
  bool passed = true;
  std::optional<Witness> witness;
  std::uint64_t tuples_checked = 0;
  /// Free-form detail, e.g. which congruence a bicharacter violates.
  std::string note;
};

inline bool all_passed(const std::vector<CheckReport>& reports) {
  for (const auto& r : reports) {
    if (!r.passed) return false;
  }
  return true;
}

/// A construction refused to run because its hypotheses do not hold.
/// Carries the reports of the preconditions that were checked.
class PreconditionFailed : public Error {
 public:
  PreconditionFailed(const std::string& what, std::vector<CheckReport> reports)
      : Error(what), reports_(std::move(reports)) {}
  const std::vector<CheckReport>& reports() const noexcept { return reports_; }

 private:
  std::vector<CheckReport> reports_;
};

}  // namespace fmc
