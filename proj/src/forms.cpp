#include "fmc/forms.hpp"

namespace fmc {

namespace {

Bindings form_binding(const std::string& form) {
  Bindings b;
  if (!form.empty()) b.form = form;
  return b;
}

}  // namespace

std::vector<CheckReport> check_form(const AlgebraSpec& spec, const std::string& form, const CheckOptions& options) {
  return check_suite(spec, "form", form_binding(form), options);
}

std::vector<CheckReport> coherence_from_form(const AlgebraSpec& spec, const std::string& form,
                                             const CheckOptions& options) {
  std::vector<CheckReport> pre = check_suite(spec, "f-manifold-color", {}, options);
  for (auto& r : check_form(spec, form, options)) pre.push_back(std::move(r));
  if (!all_passed(pre)) throw PreconditionFailed("form hypotheses do not hold", std::move(pre));

  std::vector<CheckReport> out;
  for (IdentityId id : {IdentityId::Coherence1, IdentityId::Coherence2}) {
    CheckReport r = check(spec, id, {}, options);
    if (!r.passed) r.note = "coherence fails although every hypothesis holds";
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace fmc
