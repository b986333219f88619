#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fmc/graded.hpp"
#include "fmc/report.hpp"

namespace fmc {

enum class IdentityId {
  EpsCommutative,
  Associative,
  LieColorSkew,
  LieColorJacobi,
  PreLieColor,
  ZinbielColor,
  HertlingManin,
  AssocRep,
  LieRep,
  FmRepR,
  FmRepS,
  DualHypR,
  DualHypT,
  Coherence1,
  Coherence2,
  PreFm1,
  PreFm2,
  FormInvariance,
  FormNondegenerate,
  FormSymmetric,
  PDecomposition,
  FormPAdjoint,
};

struct IdentityInfo {
  IdentityId id;
  std::string_view name;
  /// Number of algebra basis indices quantified over.
  std::size_t algebra_arity;
  /// One extra carrier basis index, placed last.
  bool carrier_slot;
  /// Required products, by conventional name.
  std::vector<std::string_view> products;
  bool needs_rho;
  bool needs_mu;
  bool needs_form;
  /// Defect expression, LHS - RHS.
  std::string_view formula;

  std::size_t arity() const noexcept { return algebra_arity + (carrier_slot ? 1 : 0); }
};

const std::vector<IdentityInfo>& identity_catalog();
const IdentityInfo& identity_info(IdentityId id);
std::string_view identity_name(IdentityId id);
/// Throws InvalidArgument on an unknown name.
IdentityId parse_identity(std::string_view name);

/// Suite names in a stable order.
std::vector<std::string> suite_names();
/// Throws InvalidArgument on an unknown suite.
const std::vector<IdentityId>& suite_members(std::string_view suite);

/// Which representation / form an identity reads. Unset fields are resolved
/// automatically when the choice is unambiguous; see resolve().
struct Bindings {
  std::optional<std::string> rho;
  std::optional<std::string> mu;
  std::optional<std::string> form;

  /// Binds rho/mu to the pair stored as "name.rho" / "name.mu".
  static Bindings pair(const std::string& name) { return Bindings{name + ".rho", name + ".mu", std::nullopt}; }
  Bindings& with_form(std::string name) {
    form = std::move(name);
    return *this;
  }
};

struct CheckOptions {
  /// Worker threads; 0 picks the hardware concurrency.
  unsigned threads = 1;
};

/// Evaluates `id` on every tuple of basis vectors in lexicographic order.
/// The witness, if any, is the lexicographically smallest failing tuple and
/// tuples_checked counts tuples up to and including it.
/// Throws MissingInput when a required product/representation/form is absent.
CheckReport check(const AlgebraSpec& spec, IdentityId id, const Bindings& bindings = {},
                  const CheckOptions& options = {});
std::vector<CheckReport> check_suite(const AlgebraSpec& spec, std::string_view suite, const Bindings& bindings = {},
                                     const CheckOptions& options = {});
/// Members of a suite, or the single identity of that name. Throws InvalidArgument.
std::vector<IdentityId> target_members(std::string_view name);
std::vector<CheckReport> check_target(const AlgebraSpec& spec, std::string_view name, const Bindings& bindings = {},
                                      const CheckOptions& options = {});
/// Shorthand: true when every member of the suite passes.
bool passes(const AlgebraSpec& spec, std::string_view suite, const Bindings& bindings = {});

/// Defect of `id` on one basis tuple.
std::vector<Scalar> defect_at(const AlgebraSpec& spec, IdentityId id, const std::vector<std::size_t>& indices,
                              const Bindings& bindings = {});
/// Defect of `id` on arbitrary homogeneous arguments (carrier element last
/// for representation identities). Throws NonHomogeneous.
std::vector<Scalar> evaluate_identity(const AlgebraSpec& spec, IdentityId id, const std::vector<Element>& args,
                                      const Bindings& bindings = {});

}  // namespace fmc
