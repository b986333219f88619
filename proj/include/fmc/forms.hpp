#pragma once

#include <string>
#include <vector>

#include "fmc/graded.hpp"
#include "fmc/identities.hpp"
#include "fmc/report.hpp"

namespace fmc {

/// Reports for form-symmetric, form-invariance and form-nondegenerate.
/// Needs dot and bracket. An empty name picks the only form present.
std::vector<CheckReport> check_form(const AlgebraSpec& spec, const std::string& form = {},
                                    const CheckOptions& options = {});

/// Runs coherence-1 and coherence-2 after confirming the hypotheses
/// (f-manifold-color suite plus check_form). Throws PreconditionFailed with
/// the failing reports when a hypothesis does not hold.
std::vector<CheckReport> coherence_from_form(const AlgebraSpec& spec, const std::string& form = {},
                                             const CheckOptions& options = {});

}  // namespace fmc
