#include "fmc/constructions.hpp"

#include "fmc/errors.hpp"
#include "fmc/operators.hpp"

namespace fmc {

namespace {

void require(const std::string& what, std::vector<CheckReport> reports) {
  if (!all_passed(reports)) throw PreconditionFailed(what, std::move(reports));
}

void append(std::vector<CheckReport>& out, std::vector<CheckReport> more) {
  for (auto& r : more) out.push_back(std::move(r));
}

// Copy of `spec` with `rep` stored under a private name, for running checks.
AlgebraSpec with_pair(const AlgebraSpec& spec, const FmRepresentation& rep, const std::string& name) {
  AlgebraSpec out = spec;
  out.set_fm_representation(name, rep);
  return out;
}

Representation star(const Representation& r, const GradedModule& dual, bool negate, std::string name) {
  const GradedModule& a = r.algebra();
  const GradedModule& v = r.carrier();
  const Grading& g = a.grading();
  std::vector<Representation::Entry> entries;
  for (const auto& e : r.entries()) {
    // <r*(a_k) alpha_row, v_col> = -eps(a_k, -d_row) <alpha_row, r(a_k) v_col>
    Scalar c = g.eps(a.degree(e.i), g.neg(v.degree(e.row))) * e.coeff;
    entries.push_back({e.i, e.col, e.row, negate ? c : -c});
  }
  return Representation(std::move(name), a, dual, false, entries);
}

}  // namespace

BilinearMap commutator_bracket(const BilinearMap& prelie) { return commutator_product(prelie, "bracket"); }

Representation left_multiplication(const BilinearMap& m, std::string name) {
  std::vector<Representation::Entry> entries;
  for (const auto& e : m.entries()) entries.push_back({e.i, e.k, e.j, e.coeff});
  return Representation::on_self(std::move(name), m.module(), entries);
}

Symmetrization symmetrize_zinbiel(const BilinearMap& zinbiel) {
  AlgebraSpec probe(zinbiel.module());
  BilinearMap z = zinbiel;
  z.rename("zinbiel");
  probe.set_product(z);
  require("input is not a Zinbiel color algebra", {check(probe, IdentityId::ZinbielColor)});
  return Symmetrization{symmetrized_product(zinbiel, "dot"), left_multiplication(zinbiel, "frakL")};
}

FmRepresentation adjoint_fm_representation(const AlgebraSpec& spec, const CheckOptions& options) {
  require("input is not an F-manifold color algebra", check_suite(spec, "f-manifold-color", {}, options));
  return FmRepresentation{left_multiplication(spec.product("bracket"), "adjoint.rho"),
                          left_multiplication(spec.product("dot"), "adjoint.mu")};
}

AlgebraSpec semidirect_product(const AlgebraSpec& spec, const FmRepresentation& rep, const CheckOptions& options) {
  if (!(rep.rho.algebra() == spec.module) || !(rep.mu.algebra() == spec.module)) {
    throw ContextMismatch("representation does not act by this algebra");
  }
  if (!(rep.rho.carrier() == rep.mu.carrier())) throw ContextMismatch("rho and mu act on different carriers");
  std::vector<CheckReport> pre = check_suite(spec, "f-manifold-color", {}, options);
  append(pre, check_suite(with_pair(spec, rep, "input"), "fm-representation", Bindings::pair("input"), options));
  require("semidirect product hypotheses do not hold", std::move(pre));

  const GradedModule& a = spec.module;
  const GradedModule& v = rep.rho.carrier();
  const Grading& g = a.grading();
  const std::size_t n = a.dim();
  std::vector<GroupElement> degrees = a.degrees();
  degrees.insert(degrees.end(), v.degrees().begin(), v.degrees().end());
  GradedModule sum(a.grading_ptr(), degrees);

  // (x1 + v1) o (x2 + v2) = x1 o x2 + act(x1)v2 + sign eps(v1, x2) act(x2)v1
  auto build = [&](const BilinearMap& m, const Representation& r, bool skew) {
    std::vector<BilinearMap::Entry> entries = m.entries();
    for (const auto& e : r.entries()) {
      entries.push_back({e.i, n + e.col, n + e.row, e.coeff});
      Scalar c = g.eps(v.degree(e.col), a.degree(e.i)) * e.coeff;
      entries.push_back({n + e.col, e.i, n + e.row, skew ? -c : c});
    }
    return BilinearMap(m.name(), sum, entries);
  };

  AlgebraSpec out(sum);
  out.set_product(build(spec.product("dot"), rep.mu, false));
  out.set_product(build(spec.product("bracket"), rep.rho, true));
  return out;
}

FmRepresentation dual_representation(const FmRepresentation& rep) {
  const GradedModule& v = rep.rho.carrier();
  if (!(v == rep.mu.carrier())) throw ContextMismatch("rho and mu act on different carriers");
  std::vector<GroupElement> degrees;
  for (const auto& d : v.degrees()) degrees.push_back(v.grading().neg(d));
  GradedModule dual(v.grading_ptr(), degrees);
  return FmRepresentation{star(rep.rho, dual, false, "dual.rho"), star(rep.mu, dual, true, "dual.mu")};
}

FmRepresentation dual_representation_checked(const AlgebraSpec& spec, const FmRepresentation& rep,
                                             const CheckOptions& options) {
  const AlgebraSpec probe = with_pair(spec, rep, "input");
  const Bindings b = Bindings::pair("input");
  std::vector<CheckReport> pre = check_suite(spec, "f-manifold-color", {}, options);
  for (IdentityId id : {IdentityId::AssocRep, IdentityId::LieRep, IdentityId::DualHypR, IdentityId::DualHypT}) {
    pre.push_back(check(probe, id, b, options));
  }
  require("dual representation hypotheses do not hold", std::move(pre));
  return dual_representation(rep);
}

FmRepresentation canonical_identification(const FmRepresentation& rep) {
  const GradedModule& v = rep.rho.carrier();
  const Grading& g = v.grading();
  auto rescale = [&](const Representation& r) {
    std::vector<Representation::Entry> entries;
    for (const auto& e : r.entries()) {
      long long k = g.eps_exponent(v.degree(e.row), v.degree(e.row)) + g.eps_exponent(v.degree(e.col), v.degree(e.col));
      entries.push_back({e.i, e.row, e.col, g.field().root(k) * e.coeff});
    }
    return Representation(r.name(), r.algebra(), v, r.self_carrier(), entries);
  };
  return FmRepresentation{rescale(rep.rho), rescale(rep.mu)};
}

Induced induce_from_pre_f(const AlgebraSpec& spec, const CheckOptions& options) {
  require("input is not a pre-F-manifold color algebra", check_suite(spec, "pre-f-manifold-color", {}, options));
  const BilinearMap& zinbiel = spec.product("zinbiel");
  const BilinearMap& prelie = spec.product("prelie");
  AlgebraSpec out(spec.module);
  out.set_product(zinbiel);
  out.set_product(prelie);
  out.set_product(symmetrized_product(zinbiel, "dot"));
  out.set_product(commutator_product(prelie, "bracket"));
  FmRepresentation rep{left_multiplication(prelie, "induced.rho"), left_multiplication(zinbiel, "induced.mu")};
  out.set_fm_representation("induced", rep);
  return Induced{std::move(out), std::move(rep)};
}

}  // namespace fmc
