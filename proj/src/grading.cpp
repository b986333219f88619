#include "fmc/grading.hpp"

#include <numeric>
#include <ostream>

#include "fmc/errors.hpp"
#include "fmc/report.hpp"

namespace fmc {

namespace {

long long mod(long long a, long long n) {
  long long r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace

bool GroupElement::is_zero() const noexcept {
  for (int v : c_) {
    if (v != 0) return false;
  }
  return true;
}

std::ostream& operator<<(std::ostream& os, const GroupElement& g) {
  os << '(';
  for (std::size_t i = 0; i < g.rank(); ++i) os << (i ? "," : "") << g[i];
  return os << ')';
}

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<int> cyclic_orders) : orders_(std::move(cyclic_orders)) {
  for (int d : orders_) {
    if (d < 2) throw InvalidArgument("cyclic orders must be >= 2, got " + std::to_string(d));
  }
}

long long FiniteAbelianGroup::order() const noexcept {
  long long n = 1;
  for (int d : orders_) n *= d;
  return n;
}

long long FiniteAbelianGroup::exponent() const noexcept {
  long long e = 1;
  for (int d : orders_) e = std::lcm(e, static_cast<long long>(d));
  return e;
}

GroupElement FiniteAbelianGroup::zero() const { return GroupElement(GroupElement::Components(orders_.size(), 0)); }

GroupElement FiniteAbelianGroup::element(const std::vector<long long>& components) const {
  if (components.size() != orders_.size()) {
    throw InvalidArgument("group element has " + std::to_string(components.size()) + " components, group rank is " +
                          std::to_string(orders_.size()));
  }
  GroupElement::Components c(orders_.size());
  for (std::size_t i = 0; i < orders_.size(); ++i) c[i] = static_cast<int>(mod(components[i], orders_[i]));
  return GroupElement(std::move(c));
}

bool FiniteAbelianGroup::contains(const GroupElement& g) const noexcept {
  if (g.rank() != orders_.size()) return false;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (g[i] < 0 || g[i] >= orders_[i]) return false;
  }
  return true;
}

void FiniteAbelianGroup::require_member(const GroupElement& g) const {
  if (!contains(g)) throw ContextMismatch("group element does not belong to this group");
}

GroupElement FiniteAbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
  require_member(a);
  require_member(b);
  GroupElement::Components c(orders_.size());
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    int s = a[i] + b[i];
    c[i] = s >= orders_[i] ? s - orders_[i] : s;
  }
  return GroupElement(std::move(c));
}

GroupElement FiniteAbelianGroup::neg(const GroupElement& a) const {
  require_member(a);
  GroupElement::Components c(orders_.size());
  for (std::size_t i = 0; i < orders_.size(); ++i) c[i] = a[i] == 0 ? 0 : orders_[i] - a[i];
  return GroupElement(std::move(c));
}

std::vector<GroupElement> FiniteAbelianGroup::elements() const {
  std::vector<GroupElement> out;
  GroupElement::Components cur(orders_.size(), 0);
  while (true) {
    out.emplace_back(cur);
    std::size_t i = orders_.size();
    while (i > 0) {
      --i;
      if (++cur[i] < orders_[i]) break;
      cur[i] = 0;
      if (i == 0) return out;
    }
    if (orders_.empty()) return out;
  }
}

GroupElement group_add(const FiniteAbelianGroup& g, const GroupElement& a, const GroupElement& b) {
  return g.add(a, b);
}

GroupElement group_neg(const FiniteAbelianGroup& g, const GroupElement& a) { return g.neg(a); }

Bicharacter::Bicharacter(int root_order, std::vector<std::vector<long long>> exponents)
    : root_order_(root_order), exponents_(std::move(exponents)) {
  if (root_order < 1) throw InvalidArgument("bicharacter root order must be >= 1");
}

long long Bicharacter::exponent(const GroupElement& a, const GroupElement& b) const {
  long long e = 0;
  const std::size_t k = exponents_.size();
  for (std::size_t i = 0; i < k; ++i) {
    if (a[i] == 0) continue;
    long long row = 0;
    for (std::size_t j = 0; j < k; ++j) row += exponents_[i][j] * b[j];
    e += a[i] * (row % root_order_);
  }
  return mod(e, root_order_);
}

CheckReport bicharacter_validate(const FiniteAbelianGroup& group, const Bicharacter& eps) {
  CheckReport report;
  report.identity = "bicharacter";
  const std::size_t k = group.rank();
  const auto& m = eps.exponents();
  const long long n = eps.root_order();
  if (m.size() != k) {
    report.passed = false;
    report.note = "exponent matrix has " + std::to_string(m.size()) + " rows, group rank is " + std::to_string(k);
    return report;
  }
  for (const auto& row : m) {
    if (row.size() != k) {
      report.passed = false;
      report.note = "exponent matrix is not square";
      return report;
    }
  }
  const auto& field = CyclotomicField::get(static_cast<int>(n));
  auto fail = [&](std::size_t i, std::size_t j, long long e, std::string note) {
    report.passed = false;
    report.witness = Witness{{i, j}, {field.root(e) - field.one()}};
    report.note = std::move(note);
  };
  const auto& d = group.cyclic_orders();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      ++report.tuples_checked;
      if (mod(m[i][j] + m[j][i], n) != 0) {
        fail(i, j, m[i][j] + m[j][i], "skew-symmetry: M[i][j] + M[j][i] is not 0 mod N");
        return report;
      }
      if (mod(d[i] * m[i][j], n) != 0) {
        fail(i, j, d[i] * m[i][j], "well-definedness: d_i * M[i][j] is not 0 mod N");
        return report;
      }
      if (mod(d[j] * m[i][j], n) != 0) {
        fail(i, j, d[j] * m[i][j], "well-definedness: d_j * M[i][j] is not 0 mod N");
        return report;
      }
    }
  }
  return report;
}

Scalar bicharacter_eval(const Bicharacter& eps, const GroupElement& a, const GroupElement& b) {
  return root_of_unity(eps.exponent(a, b), eps.root_order());
}

Grading::Grading(FiniteAbelianGroup group, Bicharacter eps)
    : group_(std::move(group)), eps_(std::move(eps)), field_(&CyclotomicField::get(eps_.root_order())) {
  CheckReport r = bicharacter_validate(group_, eps_);
  if (!r.passed) {
    std::string where;
    if (r.witness) {
      where = " at (" + std::to_string(r.witness->indices[0]) + "," + std::to_string(r.witness->indices[1]) + ")";
    }
    throw BicharacterError("invalid bicharacter" + where + ": " + r.note);
  }
}

GradingPtr make_grading(FiniteAbelianGroup group, Bicharacter eps) {
  return std::make_shared<const Grading>(std::move(group), std::move(eps));
}

GradingPtr trivial_grading() { return make_grading(FiniteAbelianGroup{}, Bicharacter{1, {}}); }

}  // namespace fmc
