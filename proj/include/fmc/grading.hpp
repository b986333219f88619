#pragma once

#include <cstddef>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "fmc/cyclotomic.hpp"

namespace fmc {

struct CheckReport;

/// Element of Z_{d_1} x ... x Z_{d_k}, stored as reduced components.
class GroupElement {
 public:
  using Components = boost::container::small_vector<int, 4>;

  GroupElement() = default;
  explicit GroupElement(Components c) : c_(std::move(c)) {}
  GroupElement(std::initializer_list<int> c) : c_(c) {}

  std::size_t rank() const noexcept { return c_.size(); }
  int operator[](std::size_t i) const { return c_[i]; }
  const Components& components() const noexcept { return c_; }
  bool is_zero() const noexcept;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement& a, const GroupElement& b) {
    return std::lexicographical_compare_three_way(a.c_.begin(), a.c_.end(), b.c_.begin(), b.c_.end());
  }
  friend std::ostream& operator<<(std::ostream& os, const GroupElement& g);

 private:
  Components c_;
};

/// Z_{d_1} x ... x Z_{d_k}; the empty list is the trivial group.
class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() = default;
  /// Throws InvalidArgument if some d_i < 2.
  explicit FiniteAbelianGroup(std::vector<int> cyclic_orders);

  const std::vector<int>& cyclic_orders() const noexcept { return orders_; }
  std::size_t rank() const noexcept { return orders_.size(); }
  long long order() const noexcept;
  long long exponent() const noexcept;

  GroupElement zero() const;
  /// Reduces arbitrary integers into range. Throws on rank mismatch.
  GroupElement element(const std::vector<long long>& components) const;
  bool contains(const GroupElement& g) const noexcept;

  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement neg(const GroupElement& a) const;
  GroupElement sub(const GroupElement& a, const GroupElement& b) const { return add(a, neg(b)); }

  /// Every element in lexicographic component order.
  std::vector<GroupElement> elements() const;

  friend bool operator==(const FiniteAbelianGroup&, const FiniteAbelianGroup&) = default;

 private:
  void require_member(const GroupElement& g) const;
  std::vector<int> orders_;
};

GroupElement group_add(const FiniteAbelianGroup& g, const GroupElement& a, const GroupElement& b);
GroupElement group_neg(const FiniteAbelianGroup& g, const GroupElement& a);

/// epsilon(g_i, g_j) = z_N^{M[i][j]} on the cyclic generators, extended biadditively.
class Bicharacter {
 public:
  Bicharacter() = default;
  Bicharacter(int root_order, std::vector<std::vector<long long>> exponents);

  int root_order() const noexcept { return root_order_; }
  const std::vector<std::vector<long long>>& exponents() const noexcept { return exponents_; }

  /// sum_{i,j} a_i M[i][j] b_j reduced into [0, N).
  long long exponent(const GroupElement& a, const GroupElement& b) const;

  friend bool operator==(const Bicharacter&, const Bicharacter&) = default;

 private:
  int root_order_ = 1;
  std::vector<std::vector<long long>> exponents_;
};

/// Checks M[i][j] + M[j][i] == 0 and d_i M[i][j] == d_j M[i][j] == 0 (mod N).
/// Never throws for a well-shaped matrix; a bad shape fails the report.
CheckReport bicharacter_validate(const FiniteAbelianGroup& group, const Bicharacter& eps);

Scalar bicharacter_eval(const Bicharacter& eps, const GroupElement& a, const GroupElement& b);

/// The shared context every graded object lives in: group, validated
/// bicharacter, and the coefficient field Q(z_N).
class Grading {
 public:
  /// Validates the bicharacter; throws BicharacterError on failure.
  Grading(FiniteAbelianGroup group, Bicharacter eps);

  const FiniteAbelianGroup& group() const noexcept { return group_; }
  const Bicharacter& bicharacter() const noexcept { return eps_; }
  const CyclotomicField& field() const noexcept { return *field_; }
  int root_order() const noexcept { return eps_.root_order(); }

  long long eps_exponent(const GroupElement& a, const GroupElement& b) const { return eps_.exponent(a, b); }
  const Scalar& eps(const GroupElement& a, const GroupElement& b) const { return field_->root(eps_.exponent(a, b)); }

  GroupElement add(const GroupElement& a, const GroupElement& b) const { return group_.add(a, b); }
  GroupElement add(const GroupElement& a, const GroupElement& b, const GroupElement& c) const {
    return group_.add(group_.add(a, b), c);
  }
  GroupElement neg(const GroupElement& a) const { return group_.neg(a); }

  friend bool operator==(const Grading& a, const Grading& b) {
    return a.group_ == b.group_ && a.eps_ == b.eps_;
  }

 private:
  FiniteAbelianGroup group_;
  Bicharacter eps_;
  const CyclotomicField* field_;
};

using GradingPtr = std::shared_ptr<const Grading>;

GradingPtr make_grading(FiniteAbelianGroup group, Bicharacter eps);
/// The trivial group with epsilon == 1 over Q.
GradingPtr trivial_grading();

}  // namespace fmc
