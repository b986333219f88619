#include <catch_amalgamated.hpp>

#include "fmc/cyclotomic.hpp"
#include "fmc/errors.hpp"
#include "fmc/rational.hpp"
#include "support.hpp"

using fmc::CyclotomicField;
using fmc::Rational;
using fmc::Scalar;

TEST_CASE("rational normal form") {
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational(0, -5).str() == "0");
  CHECK(Rational(-6, 4).str() == "-3/2");
  CHECK(Rational::parse("-12/8") == Rational(-3, 2));
  CHECK(Rational::parse("7").is_integer());
  CHECK_THROWS_AS(Rational(1, 0), fmc::DivisionByZero);
  CHECK_THROWS_AS(Rational(0).inverse(), fmc::DivisionByZero);
  CHECK_THROWS(Rational::parse("1/"));
  CHECK_THROWS(Rational::parse("x"));
}

TEST_CASE("rational promotes past 64 bits and demotes back") {
  const Rational big = Rational(1LL << 62) * Rational(1LL << 62);
  CHECK_FALSE(big.is_small());
  CHECK(big.str() == "21267647932558653966460912964485513216");
  const Rational back = big / Rational(1LL << 62);
  CHECK(back.is_small());
  CHECK(back == Rational(1LL << 62));
  CHECK(Rational::parse("100000000000000000000000000001/3").denominator_str() == "3");
  CHECK(Rational::parse("-100000000000000000000").sign() == -1);
  CHECK(Rational(std::numeric_limits<long long>::min() + 1) - Rational(10) < Rational(0));
}

TEST_CASE("rational field laws against mpq") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 2000; ++t) {
    const Rational a = testing::random_rational(rng, 1000000007), b = testing::random_rational(rng, 1000000007);
    const mpq_class qa = a.to_mpq(), qb = b.to_mpq();
    CHECK((a + b).to_mpq() == qa + qb);
    CHECK((a * b).to_mpq() == qa * qb);
    CHECK((a - b).to_mpq() == qa - qb);
    if (!b.is_zero()) CHECK((a / b).to_mpq() == qa / qb);
  }
}

TEST_CASE("cyclotomic moduli") {
  auto modulus = [](int n) {
    std::vector<long long> out;
    for (const auto& q : CyclotomicField::get(n).modulus()) out.push_back(std::stoll(q.str()));
    return out;
  };
  CHECK(modulus(1) == std::vector<long long>{-1, 1});
  CHECK(modulus(2) == std::vector<long long>{1, 1});
  CHECK(modulus(4) == std::vector<long long>{1, 0, 1});
  CHECK(modulus(6) == std::vector<long long>{1, -1, 1});
  CHECK(modulus(12) == std::vector<long long>{1, 0, -1, 0, 1});
  CHECK(CyclotomicField::get(24).degree() == 8);
  CHECK(&CyclotomicField::get(8) == &CyclotomicField::get(8));
}

TEST_CASE("worked values") {
  const auto& f6 = CyclotomicField::get(6);
  CHECK(fmc::root_of_unity(2, 6) == fmc::parse_scalar("z^1 - 1", f6));
  CHECK(fmc::root_of_unity(3, 6) == Scalar(f6, Rational(-1)));
  CHECK(fmc::root_of_unity(-1, 6) == fmc::root_of_unity(5, 6));
  const auto& f4 = CyclotomicField::get(4);
  const Scalar a = fmc::parse_scalar("1 + z^1", f4);
  CHECK(a.inverse() == fmc::parse_scalar("1/2 - 1/2*z^1", f4));
  CHECK(fmc::root_of_unity(1, 1) == CyclotomicField::get(1).one());
  CHECK(fmc::root_of_unity(1, 2) == Scalar(CyclotomicField::get(2), Rational(-1)));
}

TEST_CASE("literal grammar") {
  const auto& f8 = CyclotomicField::get(8);
  CHECK(fmc::parse_scalar("z^8", f8).is_one());
  CHECK(fmc::parse_scalar("z^4", f8) == Scalar(f8, Rational(-1)));
  CHECK(fmc::parse_scalar(" 3/6 * z^2 - z^2 ", f8) == fmc::parse_scalar("-1/2*z^2", f8));
  CHECK(fmc::parse_scalar("-z^1", f8).str() == "-z^1");
  CHECK(fmc::parse_scalar("2*z^3", f8).str() == "2*z^3");
  CHECK(Scalar(f8).str() == "0");
  CHECK_THROWS_AS(fmc::parse_scalar("z", f8), fmc::ParseError);
  CHECK_THROWS_AS(fmc::parse_scalar("1/0", f8), fmc::Error);
  CHECK_THROWS_AS(fmc::parse_scalar("2 3", f8), fmc::ParseError);
  CHECK_THROWS_AS(fmc::parse_scalar("", f8), fmc::ParseError);
}

TEST_CASE("canonical literal round trip") {
  std::mt19937_64 rng(5);
  for (int n : {1, 2, 3, 4, 5, 6, 8, 12, 24}) {
    const auto& f = CyclotomicField::get(n);
    for (int t = 0; t < 100; ++t) {
      const Scalar s = testing::random_scalar(rng, f);
      CHECK(fmc::parse_scalar(s.str(), f) == s);
    }
  }
}

TEST_CASE("fields do not mix") {
  const Scalar a = CyclotomicField::get(3).one(), b = CyclotomicField::get(4).one();
  CHECK_THROWS_AS(a + b, fmc::ContextMismatch);
  CHECK_THROWS_AS(a * b, fmc::ContextMismatch);
  CHECK_FALSE(a == b);
  CHECK_THROWS_AS(CyclotomicField::get(5).zero().inverse(), fmc::DivisionByZero);
  CHECK_THROWS_AS(CyclotomicField::get(0), fmc::InvalidArgument);
}

TEST_CASE("arithmetic agrees with the complex embedding") {
  std::mt19937_64 rng(3);
  for (int n : {1, 2, 3, 4, 6, 8, 12, 24}) {
    const auto& f = CyclotomicField::get(n);
    for (int t = 0; t < 200; ++t) {
      const Scalar a = testing::random_scalar(rng, f), b = testing::random_scalar(rng, f);
      CHECK(std::abs(testing::embed(a * b) - testing::embed(a) * testing::embed(b)) < 1e-6);
      CHECK(std::abs(testing::embed(a + b) - testing::embed(a) - testing::embed(b)) < 1e-9);
      if (!a.is_zero()) CHECK(std::abs(testing::embed(a.inverse()) * testing::embed(a) - 1.0) < 1e-6);
    }
  }
}

TEST_CASE("field laws") {
  std::mt19937_64 rng(17);
  for (int n : {1, 2, 3, 4, 6, 8, 12, 24}) {
    const auto& f = CyclotomicField::get(n);
    for (int t = 0; t < 300; ++t) {
      const Scalar a = testing::random_scalar(rng, f), b = testing::random_scalar(rng, f),
                   c = testing::random_scalar(rng, f);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + (-a) == f.zero());
      CHECK(a * f.one() == a);
      if (!a.is_zero()) CHECK(a * a.inverse() == f.one());
      Scalar acc = a;
      acc.add_product(b, c);
      CHECK(acc == a + b * c);
    }
  }
}

TEST_CASE("roots are primitive") {
  for (int n : {1, 2, 3, 4, 6, 8, 12, 24}) {
    const auto& f = CyclotomicField::get(n);
    Scalar p = f.one();
    for (int k = 1; k <= n; ++k) {
      p *= f.root(1);
      CHECK(p == f.root(k));
      if (k < n) CHECK_FALSE(p.is_one());
    }
    CHECK(p.is_one());
  }
}
