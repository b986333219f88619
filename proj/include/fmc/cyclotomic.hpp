#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "fmc/rational.hpp"

namespace fmc {

class Scalar;

/// The cyclotomic field Q(z) with z a primitive N-th root of unity, presented
/// as Q[x]/(Phi_N(x)). Instances are interned: there is exactly one object per
/// N for the lifetime of the process, so fields compare by address.
class CyclotomicField {
 public:
  /// Returns the interned field of the given root order. Thread-safe.
  static const CyclotomicField& get(int order);

  CyclotomicField(const CyclotomicField&) = delete;
  CyclotomicField& operator=(const CyclotomicField&) = delete;

  int order() const noexcept { return order_; }
  /// phi(N), the length of every coefficient vector.
  int degree() const noexcept { return degree_; }
  /// Phi_N, low degree first, monic, integer coefficients.
  const std::vector<Rational>& modulus() const noexcept { return modulus_; }

  /// z^k reduced modulo N.
  const Scalar& root(long long k) const;
  const Scalar& zero() const;
  const Scalar& one() const;

  /// Canonical form of x^p for 0 <= p < table size (>= max(N, 2*phi - 1)).
  const std::vector<Rational>& power(std::size_t p) const { return powers_[p]; }

 private:
  explicit CyclotomicField(int order);

  int order_;
  int degree_;
  std::vector<Rational> modulus_;
  std::vector<std::vector<Rational>> powers_;
  std::vector<Scalar> roots_;
};

/// Element of Q(z_N) in the power basis 1, z, ..., z^(phi(N)-1). The
/// coefficient vector is always fully reduced, so equality is coefficientwise.
class Scalar {
 public:
  using Coeffs = boost::container::small_vector<Rational, 2>;

  /// Zero of the field.
  explicit Scalar(const CyclotomicField& field);
  Scalar(const CyclotomicField& field, Rational value);
  /// `coeffs` must already have length phi(N).
  Scalar(const CyclotomicField& field, Coeffs coeffs);

  const CyclotomicField& field() const noexcept { return *field_; }
  int root_order() const noexcept { return field_->order(); }
  const Coeffs& coeffs() const noexcept { return c_; }

  bool is_zero() const noexcept;
  bool is_one() const noexcept;
  /// True when the value lies in Q.
  bool is_rational() const noexcept;

  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar operator-() const;
  /// this += a * b.
  Scalar& add_product(const Scalar& a, const Scalar& b);

  /// Multiplicative inverse via the extended Euclidean algorithm against Phi_N.
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Canonical literal: terms by increasing power, `c`, `c*z^k`, `z^k`, `-z^k`.
  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

 private:
  void require_same_field(const Scalar& other) const;

  const CyclotomicField* field_;
  Coeffs c_;
};

/// z_N^(k mod N) in canonical form.
Scalar root_of_unity(long long k, int order);
Scalar scalar_mul(const Scalar& a, const Scalar& b);
Scalar scalar_inverse(const Scalar& a);

/// Parses the scalar literal grammar:
///   literal  := [sign] term { sign term }
///   term     := rational | rational "*" "z^" integer | "z^" integer
///   rational := integer | integer "/" positive-integer
/// `z` is the primitive root of `field`. Whitespace between tokens is ignored.
Scalar parse_scalar(std::string_view text, const CyclotomicField& field);

}  // namespace fmc
