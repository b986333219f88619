#pragma once

// Dense, deliberately simple evaluator used as an oracle for the checker.
// It shares only the scalar type with the library.

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "fmc/cyclotomic.hpp"

namespace oracle {

using fmc::Scalar;
using Vec = std::vector<Scalar>;
using Deg = std::vector<int>;

struct Rep {
  bool self = true;
  std::size_t dim = 0;
  std::vector<Deg> degrees;
  // a[(i * dim + row) * dim + col]: coefficient of v_row in action(b_i) v_col
  std::vector<Scalar> a;
};

struct Algebra {
  std::vector<int> orders;
  int N = 1;
  std::vector<std::vector<long long>> M;
  std::size_t n = 0;
  std::vector<Deg> degrees;
  // c[(i * n + j) * n + k]
  std::map<std::string, std::vector<Scalar>> products;
  std::map<std::string, Rep> reps;
  // b[i * n + j]
  std::map<std::string, std::vector<Scalar>> forms;

  const fmc::CyclotomicField& field() const { return fmc::CyclotomicField::get(N); }
};

struct Verdict {
  bool passed = true;
  std::vector<std::size_t> indices;
  Vec defect;
  std::uint64_t tuples = 0;
};

struct Names {
  std::string rho = "r.rho";
  std::string mu = "r.mu";
  std::string form = "B";
};

/// Spec text for the library parser.
std::string to_json(const Algebra& a);

/// Defect on one basis tuple (carrier index last for representation identities).
/// Also accepts "op:P", "op:Tc", "op:F1", "op:F2" (three algebra indices) and
/// "op:R", "op:S", "op:T" (two algebra indices, then a carrier index), which
/// return the bare operator value.
Vec defect(const Algebra& a, const std::string& identity, const std::vector<std::size_t>& idx, const Names& names = {});
/// Exhaustive lexicographic scan.
Verdict check(const Algebra& a, const std::string& identity, const Names& names = {});

struct RandomOptions {
  std::size_t max_dim = 3;
  std::size_t max_carrier = 2;
  /// Probability that dot/bracket are drawn eps-symmetric / eps-skew.
  double structured = 0.6;
};

/// Random graded algebra, |G| <= 4, N <= 12, with dot, bracket, zinbiel,
/// prelie, a representation pair "r" and a form "B".
Algebra random_algebra(std::mt19937_64& rng, const RandomOptions& opt = {});

}  // namespace oracle
