#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "fmc/cyclotomic.hpp"
#include "fmc/identities.hpp"
#include "fmc/spec_io.hpp"
#include "naive.hpp"

namespace testing {

inline fmc::Rational random_rational(std::mt19937_64& rng, long long bound = 7) {
  std::uniform_int_distribution<long long> num(-bound, bound), den(1, bound);
  return fmc::Rational(num(rng), den(rng));
}

inline fmc::Scalar random_scalar(std::mt19937_64& rng, const fmc::CyclotomicField& f) {
  fmc::Scalar::Coeffs c(static_cast<std::size_t>(f.degree()));
  for (auto& q : c) q = rng() % 3 == 0 ? fmc::Rational(0) : random_rational(rng);
  return fmc::Scalar(f, c);
}

inline std::complex<double> to_double(const fmc::Rational& q) {
  return std::stod(q.numerator_str()) / std::stod(q.denominator_str());
}

// Numerical image under z -> exp(2 pi i / N).
inline std::complex<double> embed(const fmc::Scalar& s) {
  const double t = 2 * std::numbers::pi / s.root_order();
  std::complex<double> out = 0;
  for (std::size_t k = 0; k < s.coeffs().size(); ++k) {
    out += to_double(s.coeffs()[k]) * std::polar(1.0, t * static_cast<double>(k));
  }
  return out;
}

inline bool is_zero_vec(const std::vector<fmc::Scalar>& v) {
  for (const auto& s : v) {
    if (!s.is_zero()) return false;
  }
  return true;
}

inline std::string vec_str(const std::vector<fmc::Scalar>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
  return s + "]";
}

inline fmc::AlgebraSpec to_spec(const oracle::Algebra& a) { return fmc::parse_spec(oracle::to_json(a)); }

inline fmc::Bindings oracle_bindings() { return fmc::Bindings::pair("r").with_form("B"); }

}  // namespace testing
