#include "fmc/identities.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <thread>

#include "fmc/errors.hpp"
#include "fmc/operators.hpp"

namespace fmc {

namespace {

using I = IdentityId;

const std::vector<IdentityInfo>& catalog_table() {
  static const std::vector<IdentityInfo> table = {
      {I::EpsCommutative, "eps-commutative", 2, false, {"dot"}, false, false, false, "x.y - eps(x,y) y.x"},
      {I::Associative, "associative", 3, false, {"dot"}, false, false, false, "(x.y).z - x.(y.z)"},
      {I::LieColorSkew, "lie-color-skew", 2, false, {"bracket"}, false, false, false, "[x,y] + eps(x,y)[y,x]"},
      {I::LieColorJacobi, "lie-color-jacobi", 3, false, {"bracket"}, false, false, false,
       "eps(z,x)[x,[y,z]] + eps(y,z)[z,[x,y]] + eps(x,y)[y,[z,x]]"},
      {I::PreLieColor, "pre-lie-color", 3, false, {"prelie"}, false, false, false,
       "(x*y)*z - x*(y*z) - eps(x,y)((y*x)*z - y*(x*z))"},
      {I::ZinbielColor, "zinbiel-color", 3, false, {"zinbiel"}, false, false, false,
       "x<>(y<>z) - (x<>y)<>z - eps(x,y)(y<>x)<>z"},
      {I::HertlingManin, "hertling-manin", 4, false, {"dot", "bracket"}, false, false, false,
       "P_{x.y}(z,w) - x.P_y(z,w) - eps(x,y) y.P_x(z,w)"},
      {I::AssocRep, "assoc-rep", 2, true, {"dot"}, false, true, false, "mu(x.y)v - mu(x)mu(y)v"},
      {I::LieRep, "lie-rep", 2, true, {"bracket"}, true, false, false,
       "rho([x,y])v - rho(x)rho(y)v + eps(x,y)rho(y)rho(x)v"},
      {I::FmRepR, "fm-rep-R", 3, true, {"dot", "bracket"}, true, true, false,
       "R(x1.x2,x3)v - mu(x1)R(x2,x3)v - eps(x1,x2)mu(x2)R(x1,x3)v"},
      {I::FmRepS, "fm-rep-S", 3, true, {"dot", "bracket"}, true, true, false,
       "mu(P_x1(x2,x3))v - eps(x1,x2+x3)S(x2,x3)mu(x1)v + mu(x1)S(x2,x3)v"},
      {I::DualHypR, "dual-hyp-R", 3, true, {"dot", "bracket"}, true, true, false,
       "R(x.y,z)v - eps(x,y+z)R(y,z)mu(x)v - eps(y,z)R(x,z)mu(y)v"},
      {I::DualHypT, "dual-hyp-T", 3, true, {"dot", "bracket"}, true, true, false,
       "mu(P_x(y,z))v + eps(x,y+z)T(y,z)mu(x)v - mu(x)T(y,z)v"},
      {I::Coherence1, "coherence-1", 4, false, {"dot", "bracket"}, false, false, false,
       "P_{x.y}(z,w) - eps(x,y+z)P_y(z,x.w) - eps(y,z)P_x(z,y.w)"},
      {I::Coherence2, "coherence-2", 4, false, {"dot", "bracket"}, false, false, false,
       "P_x(y,z).w + eps(x,y+z)T(y,z)(x.w) - x.T(y,z)(w)"},
      {I::PreFm1, "pre-fm-1", 4, false, {"zinbiel", "prelie"}, false, false, false,
       "F1(x.y,z,w) - x<>F1(y,z,w) - eps(x,y) y<>F1(x,z,w)"},
      {I::PreFm2, "pre-fm-2", 4, false, {"zinbiel", "prelie"}, false, false, false,
       "(F1(x,y,z) + eps(y,z)F1(x,z,y) + eps(x,y+z)F2(y,z,x))<>w - eps(x,y+z)F2(y,z,x<>w) + x<>F2(y,z,w)"},
      {I::FormInvariance, "form-invariance", 3, false, {"dot", "bracket"}, false, false, true,
       "[B(x.y,z) - B(x,y.z), B([x,y],z) - B(x,[y,z])]"},
      {I::FormNondegenerate, "form-nondegenerate", 0, false, {}, false, false, true, "det B != 0"},
      {I::FormSymmetric, "form-symmetric", 2, false, {}, false, false, true, "B(x,y) - B(y,x)"},
      {I::PDecomposition, "p-decomposition", 3, false, {"zinbiel", "prelie"}, false, false, false,
       "P_x(y,z) - F1(x,y,z) - eps(y,z)F1(x,z,y) - eps(x,y+z)F2(y,z,x)"},
      {I::FormPAdjoint, "form-p-adjoint", 4, false, {"dot", "bracket"}, false, false, true,
       "B(P_x(y,z),w) - eps(x+y,z)B(z,P_x(y,w))"},
  };
  return table;
}

const std::map<std::string, std::vector<IdentityId>, std::less<>>& suite_table() {
  static const std::map<std::string, std::vector<IdentityId>, std::less<>> table = [] {
    std::map<std::string, std::vector<IdentityId>, std::less<>> t;
    t["f-manifold-color"] = {I::EpsCommutative, I::Associative, I::LieColorSkew, I::LieColorJacobi,
                             I::HertlingManin};
    t["fm-representation"] = {I::AssocRep, I::LieRep, I::FmRepR, I::FmRepS};
    t["coherence"] = t["f-manifold-color"];
    t["coherence"].push_back(I::Coherence1);
    t["coherence"].push_back(I::Coherence2);
    t["pre-f-manifold-color"] = {I::ZinbielColor, I::PreLieColor, I::PreFm1, I::PreFm2};
    t["lie-color"] = {I::LieColorSkew, I::LieColorJacobi};
    t["eps-comm-assoc"] = {I::EpsCommutative, I::Associative};
    t["dual-hypotheses"] = {I::DualHypR, I::DualHypT};
    t["form"] = {I::FormSymmetric, I::FormInvariance, I::FormNondegenerate};
    return t;
  }();
  return table;
}

// Signed, epsilon-twisted sum of homogeneous terms.
class Sum {
 public:
  explicit Sum(Element zero) : v_(std::move(zero)) {}
  Sum& plus(const Hom& t, long long e = 0) {
    v_.add_root_scaled(t.value, e, false);
    return *this;
  }
  Sum& minus(const Hom& t, long long e = 0) {
    v_.add_root_scaled(t.value, e, true);
    return *this;
  }
  Hom as(GroupElement degree) { return Hom{std::move(v_), std::move(degree)}; }
  std::vector<Scalar> coeffs() const { return v_.coeffs(); }

 private:
  Element v_;
};

class Evaluator {
 public:
  Evaluator(const AlgebraSpec& spec, IdentityId id, const Bindings& b)
      : spec_(spec), info_(identity_info(id)), g_(spec.grading()) {
    for (auto p : info_.products) {
      const BilinearMap& m = spec.product(std::string(p));
      if (p == "dot") dot_ = &m;
      if (p == "bracket") bracket_ = &m;
      if (p == "zinbiel") zin_ = &m;
      if (p == "prelie") pre_ = &m;
    }
    if (zin_ && pre_ && id != I::PreLieColor && id != I::ZinbielColor) {
      derived_dot_.emplace(symmetrized_product(*zin_));
      derived_bracket_.emplace(commutator_product(*pre_));
      dot_ = &*derived_dot_;
      bracket_ = &*derived_bracket_;
    }
    if (info_.needs_rho) rho_ = &resolve_rep(b.rho, ".rho");
    if (info_.needs_mu) mu_ = &resolve_rep(b.mu, ".mu");
    if (rho_ && mu_ && !(rho_->carrier() == mu_->carrier())) {
      throw ContextMismatch("representations '" + rho_->name() + "' and '" + mu_->name() +
                            "' act on different carriers");
    }
    if (info_.needs_form) form_ = &resolve_form(b.form);
    if (rho_) note_ += "rho=" + rho_->name();
    if (mu_) note_ += std::string(note_.empty() ? "" : " ") + "mu=" + mu_->name();
    if (form_) note_ += std::string(note_.empty() ? "" : " ") + "form=" + form_->name();

    const GradedModule& a = spec.module;
    for (std::size_t i = 0; i < a.dim(); ++i) alg_basis_.push_back(hom::basis(a, i));
    if (info_.carrier_slot) {
      const GradedModule& v = carrier();
      for (std::size_t i = 0; i < v.dim(); ++i) car_basis_.push_back(hom::basis(v, i));
    }
  }

  const IdentityInfo& info() const { return info_; }
  const std::string& note() const { return note_; }
  const GradedModule& carrier() const { return rho_ ? rho_->carrier() : mu_->carrier(); }

  std::vector<std::size_t> dims() const {
    std::vector<std::size_t> d(info_.algebra_arity, spec_.module.dim());
    if (info_.carrier_slot) d.push_back(carrier().dim());
    return d;
  }

  const Hom& basis(std::size_t slot, std::size_t i) const {
    return info_.carrier_slot && slot == info_.algebra_arity ? car_basis_[i] : alg_basis_[i];
  }

  Hom lift(std::size_t slot, const Element& x) const {
    const GradedModule& m = info_.carrier_slot && slot == info_.algebra_arity ? carrier() : spec_.module;
    if (x.size() != m.dim()) throw ContextMismatch("argument " + std::to_string(slot) + " has the wrong dimension");
    return hom::lift(m, x);
  }

  std::vector<Scalar> defect(const std::vector<const Hom*>& a) const;

  const BilinearForm& form() const { return *form_; }

 private:
  const Representation& resolve_rep(const std::optional<std::string>& name, const std::string& suffix) const {
    if (name) return spec_.representation(*name);
    auto pairs = spec_.fm_representation_names();
    if (pairs.size() == 1) return spec_.representation(pairs.front() + suffix);
    if (spec_.representations.size() == 1) return spec_.representations.begin()->second;
    throw MissingInput("identity '" + std::string(info_.name) + "' needs a representation" +
                       (spec_.representations.empty() ? "" : "; several are present, choose one explicitly"));
  }

  const BilinearForm& resolve_form(const std::optional<std::string>& name) const {
    if (name) return spec_.form(*name);
    if (spec_.forms.size() == 1) return spec_.forms.begin()->second;
    throw MissingInput("identity '" + std::string(info_.name) + "' needs a form" +
                       (spec_.forms.empty() ? "" : "; several are present, choose one explicitly"));
  }

  long long e(const Hom& a, const Hom& b) const { return g_.eps_exponent(a.degree, b.degree); }
  Hom dot(const Hom& a, const Hom& b) const { return hom::mul(*dot_, a, b); }
  Hom br(const Hom& a, const Hom& b) const { return hom::mul(*bracket_, a, b); }
  Hom zin(const Hom& a, const Hom& b) const { return hom::mul(*zin_, a, b); }
  Hom pre(const Hom& a, const Hom& b) const { return hom::mul(*pre_, a, b); }
  Hom rho(const Hom& x, const Hom& v) const { return hom::act(*rho_, x, v); }
  Hom mu(const Hom& x, const Hom& v) const { return hom::act(*mu_, x, v); }
  Hom P(const Hom& x, const Hom& y, const Hom& z) const { return hom::P(*dot_, *bracket_, x, y, z); }
  Hom R(const Hom& x, const Hom& y, const Hom& v) const { return hom::R(*rho_, *mu_, *bracket_, x, y, v); }
  Hom S(const Hom& x, const Hom& y, const Hom& v) const { return hom::S(*rho_, *mu_, *dot_, x, y, v); }
  Hom T(const Hom& x, const Hom& y, const Hom& v) const { return hom::T_rep(*rho_, *mu_, *dot_, x, y, v); }
  Hom Tc(const Hom& y, const Hom& z, const Hom& w) const { return hom::T_coh(*dot_, *bracket_, y, z, w); }
  Hom F1(const Hom& x, const Hom& y, const Hom& z) const { return hom::F1(*zin_, *pre_, *bracket_, x, y, z); }
  Hom F2(const Hom& x, const Hom& y, const Hom& z) const { return hom::F2(*zin_, *pre_, *dot_, x, y, z); }
  Scalar B(const Hom& x, const Hom& y) const { return form_->eval(x.value, y.value); }
  Scalar z(long long k) const { return spec_.field().root(k); }

  // F1(x,y,z) + eps(y,z)F1(x,z,y) + eps(x,y+z)F2(y,z,x)
  Hom decomposition(const Hom& x, const Hom& y, const Hom& zz) const {
    Sum s(spec_.module.zero());
    s.plus(F1(x, y, zz)).plus(F1(x, zz, y), e(y, zz)).plus(F2(y, zz, x), e(x, y) + e(x, zz));
    return s.as(g_.add(x.degree, y.degree, zz.degree));
  }

  const AlgebraSpec& spec_;
  const IdentityInfo& info_;
  const Grading& g_;
  const BilinearMap* dot_ = nullptr;
  const BilinearMap* bracket_ = nullptr;
  const BilinearMap* zin_ = nullptr;
  const BilinearMap* pre_ = nullptr;
  std::optional<BilinearMap> derived_dot_;
  std::optional<BilinearMap> derived_bracket_;
  const Representation* rho_ = nullptr;
  const Representation* mu_ = nullptr;
  const BilinearForm* form_ = nullptr;
  std::string note_;
  std::vector<Hom> alg_basis_;
  std::vector<Hom> car_basis_;
};

std::vector<Scalar> Evaluator::defect(const std::vector<const Hom*>& a) const {
  const Element zero = spec_.module.zero();
  switch (info_.id) {
    case I::EpsCommutative: {
      const Hom &x = *a[0], &y = *a[1];
      return Sum(zero).plus(dot(x, y)).minus(dot(y, x), e(x, y)).coeffs();
    }
    case I::Associative: {
      const Hom &x = *a[0], &y = *a[1], &w = *a[2];
      return Sum(zero).plus(dot(dot(x, y), w)).minus(dot(x, dot(y, w))).coeffs();
    }
    case I::LieColorSkew: {
      const Hom &x = *a[0], &y = *a[1];
      return Sum(zero).plus(br(x, y)).plus(br(y, x), e(x, y)).coeffs();
    }
    case I::LieColorJacobi: {
      const Hom &x = *a[0], &y = *a[1], &w = *a[2];
      return Sum(zero)
          .plus(br(x, br(y, w)), e(w, x))
          .plus(br(w, br(x, y)), e(y, w))
          .plus(br(y, br(w, x)), e(x, y))
          .coeffs();
    }
    case I::PreLieColor: {
      const Hom &x = *a[0], &y = *a[1], &w = *a[2];
      return Sum(zero)
          .plus(pre(pre(x, y), w))
          .minus(pre(x, pre(y, w)))
          .minus(pre(pre(y, x), w), e(x, y))
          .plus(pre(y, pre(x, w)), e(x, y))
          .coeffs();
    }
    case I::ZinbielColor: {
      const Hom &x = *a[0], &y = *a[1], &w = *a[2];
      return Sum(zero).plus(zin(x, zin(y, w))).minus(zin(zin(x, y), w)).minus(zin(zin(y, x), w), e(x, y)).coeffs();
    }
    case I::HertlingManin: {
      const Hom &x = *a[0], &y = *a[1], &u = *a[2], &w = *a[3];
      return Sum(zero)
          .plus(P(dot(x, y), u, w))
          .minus(dot(x, P(y, u, w)))
          .minus(dot(y, P(x, u, w)), e(x, y))
          .coeffs();
    }
    case I::AssocRep: {
      const Hom &x = *a[0], &y = *a[1], &v = *a[2];
      return Sum(carrier().zero()).plus(mu(dot(x, y), v)).minus(mu(x, mu(y, v))).coeffs();
    }
    case I::LieRep: {
      const Hom &x = *a[0], &y = *a[1], &v = *a[2];
      return Sum(carrier().zero())
          .plus(rho(br(x, y), v))
          .minus(rho(x, rho(y, v)))
          .plus(rho(y, rho(x, v)), e(x, y))
          .coeffs();
    }
    case I::FmRepR: {
      const Hom &x1 = *a[0], &x2 = *a[1], &x3 = *a[2], &v = *a[3];
      return Sum(carrier().zero())
          .plus(R(dot(x1, x2), x3, v))
          .minus(mu(x1, R(x2, x3, v)))
          .minus(mu(x2, R(x1, x3, v)), e(x1, x2))
          .coeffs();
    }
    case I::FmRepS: {
      const Hom &x1 = *a[0], &x2 = *a[1], &x3 = *a[2], &v = *a[3];
      return Sum(carrier().zero())
          .plus(mu(P(x1, x2, x3), v))
          .minus(S(x2, x3, mu(x1, v)), e(x1, x2) + e(x1, x3))
          .plus(mu(x1, S(x2, x3, v)))
          .coeffs();
    }
    case I::DualHypR: {
      const Hom &x = *a[0], &y = *a[1], &w = *a[2], &v = *a[3];
      return Sum(carrier().zero())
          .plus(R(dot(x, y), w, v))
          .minus(R(y, w, mu(x, v)), e(x, y) + e(x, w))
          .minus(R(x, w, mu(y, v)), e(y, w))
          .coeffs();
    }
    case I::DualHypT: {
      const Hom &x = *a[0], &y = *a[1], &w = *a[2], &v = *a[3];
      return Sum(carrier().zero())
          .plus(mu(P(x, y, w), v))
          .plus(T(y, w, mu(x, v)), e(x, y) + e(x, w))
          .minus(mu(x, T(y, w, v)))
          .coeffs();
    }
    case I::Coherence1: {
      const Hom &x = *a[0], &y = *a[1], &u = *a[2], &w = *a[3];
      return Sum(zero)
          .plus(P(dot(x, y), u, w))
          .minus(P(y, u, dot(x, w)), e(x, y) + e(x, u))
          .minus(P(x, u, dot(y, w)), e(y, u))
          .coeffs();
    }
    case I::Coherence2: {
      const Hom &x = *a[0], &y = *a[1], &u = *a[2], &w = *a[3];
      return Sum(zero)
          .plus(dot(P(x, y, u), w))
          .plus(Tc(y, u, dot(x, w)), e(x, y) + e(x, u))
          .minus(dot(x, Tc(y, u, w)))
          .coeffs();
    }
    case I::PreFm1: {
      const Hom &x = *a[0], &y = *a[1], &u = *a[2], &w = *a[3];
      return Sum(zero)
          .plus(F1(dot(x, y), u, w))
          .minus(zin(x, F1(y, u, w)))
          .minus(zin(y, F1(x, u, w)), e(x, y))
          .coeffs();
    }
    case I::PreFm2: {
      const Hom &x = *a[0], &y = *a[1], &u = *a[2], &w = *a[3];
      return Sum(zero)
          .plus(zin(decomposition(x, y, u), w))
          .minus(F2(y, u, zin(x, w)), e(x, y) + e(x, u))
          .plus(zin(x, F2(y, u, w)))
          .coeffs();
    }
    case I::PDecomposition: {
      const Hom &x = *a[0], &y = *a[1], &u = *a[2];
      return Sum(zero).plus(P(x, y, u)).minus(decomposition(x, y, u)).coeffs();
    }
    case I::FormInvariance: {
      const Hom &x = *a[0], &y = *a[1], &w = *a[2];
      return {B(dot(x, y), w) - B(x, dot(y, w)), B(br(x, y), w) - B(x, br(y, w))};
    }
    case I::FormSymmetric:
      return {B(*a[0], *a[1]) - B(*a[1], *a[0])};
    case I::FormPAdjoint: {
      const Hom &x = *a[0], &y = *a[1], &u = *a[2], &w = *a[3];
      return {B(P(x, y, u), w) - z(e(x, u) + e(y, u)) * B(u, P(x, y, w))};
    }
    case I::FormNondegenerate:
      break;
  }
  throw InvalidArgument("identity '" + std::string(info_.name) + "' has no pointwise defect");
}

bool all_zero(const std::vector<Scalar>& d) {
  return std::all_of(d.begin(), d.end(), [](const Scalar& s) { return s.is_zero(); });
}

// Scans tuples whose first index lies in [lo, hi), lexicographically.
// Stops early once `stop()` reports a failure in an earlier chunk.
template <class Stop>
std::optional<Witness> scan(const Evaluator& ev, const std::vector<std::size_t>& dims, std::size_t lo, std::size_t hi,
                            Stop&& stop) {
  const std::size_t k = dims.size();
  std::vector<std::size_t> idx(k, 0);
  std::vector<const Hom*> args(k);
  idx[0] = lo;
  for (std::size_t s = 1; s < k; ++s) {
    if (dims[s] == 0) return std::nullopt;
  }
  std::size_t since_poll = 0;
  while (idx[0] < hi) {
    for (std::size_t s = 0; s < k; ++s) args[s] = &ev.basis(s, idx[s]);
    auto d = ev.defect(args);
    if (!all_zero(d)) return Witness{idx, std::move(d)};
    if (++since_poll == 64) {
      since_poll = 0;
      if (stop()) return std::nullopt;
    }
    std::size_t s = k;
    while (s > 0) {
      --s;
      if (++idx[s] < dims[s] || s == 0) break;
      idx[s] = 0;
    }
  }
  return std::nullopt;
}

std::uint64_t rank_of(const std::vector<std::size_t>& idx, const std::vector<std::size_t>& dims) {
  std::uint64_t r = 0;
  for (std::size_t s = 0; s < dims.size(); ++s) r = r * dims[s] + idx[s];
  return r;
}

CheckReport check_nondegenerate(const AlgebraSpec& spec, const Evaluator& ev) {
  CheckReport report;
  report.identity = "form-nondegenerate";
  report.note = ev.note();
  const Matrix& m = ev.form().matrix();
  report.tuples_checked = spec.module.dim() == 0 ? 0 : 1;
  if (auto kernel = m.kernel_vector()) {
    report.passed = false;
    report.witness = Witness{{}, kernel->coeffs()};
  }
  return report;
}

}  // namespace

const std::vector<IdentityInfo>& identity_catalog() { return catalog_table(); }

const IdentityInfo& identity_info(IdentityId id) {
  for (const auto& info : catalog_table()) {
    if (info.id == id) return info;
  }
  throw InvalidArgument("unknown identity id");
}

std::string_view identity_name(IdentityId id) { return identity_info(id).name; }

IdentityId parse_identity(std::string_view name) {
  for (const auto& info : catalog_table()) {
    if (info.name == name) return info.id;
  }
  throw InvalidArgument("unknown identity '" + std::string(name) + "'");
}

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, members] : suite_table()) out.push_back(name);
  return out;
}

const std::vector<IdentityId>& suite_members(std::string_view suite) {
  auto it = suite_table().find(suite);
  if (it == suite_table().end()) throw InvalidArgument("unknown suite '" + std::string(suite) + "'");
  return it->second;
}

CheckReport check(const AlgebraSpec& spec, IdentityId id, const Bindings& bindings, const CheckOptions& options) {
  const Evaluator ev(spec, id, bindings);
  if (id == I::FormNondegenerate) return check_nondegenerate(spec, ev);

  CheckReport report;
  report.identity = std::string(ev.info().name);
  report.note = ev.note();
  const auto dims = ev.dims();
  std::uint64_t total = 1;
  for (auto d : dims) total *= d;

  const std::size_t first = dims.empty() ? 1 : dims[0];
  unsigned threads = options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.threads;
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, first));

  std::optional<Witness> witness;
  if (total == 0) {
    // nothing to check
  } else if (dims.empty()) {
    std::vector<Scalar> d = ev.defect({});
    if (!all_zero(d)) witness = Witness{{}, std::move(d)};
  } else if (threads <= 1) {
    witness = scan(ev, dims, 0, first, [] { return false; });
  } else {
    // Chunk c owns first indices [c*first/T, (c+1)*first/T); the lowest failing
    // chunk holds the lexicographically smallest witness.
    std::vector<std::optional<Witness>> found(threads);
    std::atomic<unsigned> lowest_failure{threads};
    std::vector<std::thread> pool;
    std::exception_ptr error;
    std::mutex error_mutex;
    for (unsigned c = 0; c < threads; ++c) {
      pool.emplace_back([&, c] {
        try {
          const std::size_t lo = c * first / threads, hi = (c + 1) * first / threads;
          found[c] = scan(ev, dims, lo, hi, [&] { return lowest_failure.load() < c; });
          if (found[c]) {
            unsigned cur = lowest_failure.load();
            while (c < cur && !lowest_failure.compare_exchange_weak(cur, c)) {
            }
          }
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
    for (auto& f : found) {
      if (f) {
        witness = std::move(f);
        break;
      }
    }
  }

  if (witness) {
    report.passed = false;
    report.tuples_checked = rank_of(witness->indices, dims) + 1;
    report.witness = std::move(witness);
  } else {
    report.tuples_checked = total;
  }
  return report;
}

std::vector<CheckReport> check_suite(const AlgebraSpec& spec, std::string_view suite, const Bindings& bindings,
                                     const CheckOptions& options) {
  std::vector<CheckReport> out;
  for (IdentityId id : suite_members(suite)) out.push_back(check(spec, id, bindings, options));
  return out;
}

std::vector<IdentityId> target_members(std::string_view name) {
  auto it = suite_table().find(name);
  if (it != suite_table().end()) return it->second;
  for (const auto& info : catalog_table()) {
    if (info.name == name) return {info.id};
  }
  throw InvalidArgument("unknown suite or identity '" + std::string(name) + "'");
}

std::vector<CheckReport> check_target(const AlgebraSpec& spec, std::string_view name, const Bindings& bindings,
                                      const CheckOptions& options) {
  std::vector<CheckReport> out;
  for (IdentityId id : target_members(name)) out.push_back(check(spec, id, bindings, options));
  return out;
}

bool passes(const AlgebraSpec& spec, std::string_view suite, const Bindings& bindings) {
  return all_passed(check_target(spec, suite, bindings));
}

std::vector<Scalar> defect_at(const AlgebraSpec& spec, IdentityId id, const std::vector<std::size_t>& indices,
                              const Bindings& bindings) {
  const Evaluator ev(spec, id, bindings);
  if (id == I::FormNondegenerate) {
    auto kernel = ev.form().matrix().kernel_vector();
    return kernel ? kernel->coeffs() : std::vector<Scalar>{};
  }
  const auto dims = ev.dims();
  if (indices.size() != dims.size()) {
    throw InvalidArgument("identity '" + std::string(ev.info().name) + "' takes " + std::to_string(dims.size()) +
                          " indices");
  }
  std::vector<const Hom*> args;
  for (std::size_t s = 0; s < dims.size(); ++s) {
    if (indices[s] >= dims[s]) throw IndexError("index " + std::to_string(indices[s]) + " out of range");
    args.push_back(&ev.basis(s, indices[s]));
  }
  return ev.defect(args);
}

std::vector<Scalar> evaluate_identity(const AlgebraSpec& spec, IdentityId id, const std::vector<Element>& args,
                                      const Bindings& bindings) {
  const Evaluator ev(spec, id, bindings);
  if (args.size() != ev.info().arity()) {
    throw InvalidArgument("identity '" + std::string(ev.info().name) + "' takes " +
                          std::to_string(ev.info().arity()) + " arguments");
  }
  std::vector<Hom> lifted;
  for (std::size_t s = 0; s < args.size(); ++s) lifted.push_back(ev.lift(s, args[s]));
  std::vector<const Hom*> ptrs;
  for (const auto& h : lifted) ptrs.push_back(&h);
  return ev.defect(ptrs);
}

}  // namespace fmc
