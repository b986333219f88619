#include "fmc/search.hpp"

#include <random>
#include <set>
#include <unordered_map>

#include "fmc/errors.hpp"
#include "fmc/identities.hpp"
#include "fmc/spec_io.hpp"

namespace fmc {

namespace {

enum class Symmetry { Free, EpsSymmetric, EpsSkew };

Symmetry symmetry_of(const std::string& product) {
  if (product == "dot") return Symmetry::EpsSymmetric;
  if (product == "bracket") return Symmetry::EpsSkew;
  return Symmetry::Free;
}

class Sampler {
 public:
  Sampler(const GradedModule& m, std::vector<Scalar> pool, std::uint64_t seed)
      : m_(m), pool_(std::move(pool)), rng_(seed) {}

  const Scalar& draw() { return pool_[rng_() % pool_.size()]; }

  // x.y = eps(x,y) y.x for dot, [x,y] = -eps(x,y)[y,x] for bracket: only the
  // upper triangle is drawn, and a diagonal cell the relation forces to zero
  // stays empty.
  BilinearMap product(const std::string& name) {
    const Grading& g = m_.grading();
    const Symmetry sym = symmetry_of(name);
    const std::size_t n = m_.dim();
    std::vector<BilinearMap::Entry> entries;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (sym != Symmetry::Free && j < i) continue;
        const GroupElement target = g.add(m_.degree(i), m_.degree(j));
        const Scalar& e = g.eps(m_.degree(i), m_.degree(j));
        if (i == j) {
          if (sym == Symmetry::EpsSymmetric && !e.is_one()) continue;
          if (sym == Symmetry::EpsSkew && e.is_one()) continue;
        }
        for (std::size_t k = 0; k < n; ++k) {
          if (!(m_.degree(k) == target)) continue;
          const Scalar c = draw();
          if (c.is_zero()) continue;
          entries.push_back({i, j, k, c});
          if (sym == Symmetry::Free || i == j) continue;
          // m(b_j, b_i) = +-eps(j, i) m(b_i, b_j)
          Scalar back = g.eps(m_.degree(j), m_.degree(i)) * c;
          entries.push_back({j, i, k, sym == Symmetry::EpsSkew ? -back : back});
        }
      }
    }
    return BilinearMap(name, m_, entries);
  }

  // Symmetric, supported on pairs of opposite degree.
  BilinearForm form(const std::string& name) {
    const Grading& g = m_.grading();
    const std::size_t n = m_.dim();
    std::vector<BilinearForm::Entry> entries;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        if (!g.add(m_.degree(i), m_.degree(j)).is_zero()) continue;
        const Scalar c = draw();
        if (c.is_zero()) continue;
        entries.push_back({i, j, c});
        if (i != j) entries.push_back({j, i, c});
      }
    }
    return BilinearForm(name, m_, entries);
  }

 private:
  const GradedModule& m_;
  std::vector<Scalar> pool_;
  std::mt19937_64 rng_;
};

}  // namespace

SearchResult search(const SearchParams& p) {
  if (p.trials < 1) throw InvalidArgument("trials must be >= 1");
  if (p.pool.empty()) throw InvalidArgument("coefficient pool is empty");
  const std::vector<IdentityId> members = target_members(p.target);

  std::set<std::string> products;
  bool needs_form = false;
  for (IdentityId id : members) {
    const IdentityInfo& info = identity_info(id);
    if (info.needs_rho || info.needs_mu) {
      throw InvalidArgument("search target '" + p.target + "' involves representations");
    }
    for (auto name : info.products) products.insert(std::string(name));
    needs_form = needs_form || info.needs_form;
  }

  GradingPtr grading;
  try {
    grading = make_grading(FiniteAbelianGroup(p.cyclic_orders), Bicharacter(p.root_order, p.exponents));
  } catch (const BicharacterError& e) {
    throw InvalidArgument(e.what());
  }
  const FiniteAbelianGroup& group = grading->group();
  std::vector<GroupElement> degrees;
  if (p.degrees.empty()) {
    degrees.assign(p.dimension, group.zero());
  } else {
    if (p.degrees.size() != p.dimension) throw InvalidArgument("need one degree per basis vector");
    for (const auto& d : p.degrees) degrees.push_back(group.element(d));
  }
  const GradedModule module(grading, degrees);

  std::vector<Scalar> pool;
  for (const auto& lit : p.pool) pool.push_back(parse_scalar(lit, module.field()));

  Sampler sampler(module, pool, p.seed);
  SearchResult result;
  result.trials = p.trials;
  std::unordered_map<std::string, bool> seen;
  for (std::uint64_t t = 0; t < p.trials; ++t) {
    AlgebraSpec spec(module);
    for (const auto& name : products) spec.set_product(sampler.product(name));
    if (needs_form) spec.set_form(sampler.form("B"));
    std::string text = emit_spec(spec);
    auto [it, fresh] = seen.emplace(std::move(text), false);
    if (!fresh) continue;
    ++result.distinct;
    bool ok = true;
    for (IdentityId id : members) {
      if (!check(spec, id).passed) {
        ok = false;
        break;
      }
    }
    it->second = ok;
    if (ok) result.found.push_back(std::move(spec));
  }
  return result;
}

}  // namespace fmc
