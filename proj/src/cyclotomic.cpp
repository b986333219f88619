#include "fmc/cyclotomic.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>

#include "fmc/errors.hpp"

namespace fmc {

namespace {

using Poly = std::vector<Rational>;  // low degree first

void trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// Quotient and remainder of a / b over Q; b must be nonzero.
std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
  trim(a);
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) return {Poly{}, a};
  Poly q(a.size() - db);
  const Rational lead_inv = b.back().inverse();
  for (std::size_t i = a.size(); i-- > db;) {
    if (a[i].is_zero()) continue;
    Rational c = a[i] * lead_inv;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
    q[i - db] = std::move(c);
  }
  a.resize(db);
  trim(a);
  trim(q);
  return {q, a};
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j].add_product(a[i], b[j]);
  }
  trim(r);
  return r;
}

Poly sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

Poly cyclotomic_polynomial(int n) {
  Poly p(static_cast<std::size_t>(n) + 1);
  p[0] = Rational(-1);
  p[static_cast<std::size_t>(n)] = Rational(1);
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    auto [q, r] = divmod(p, cyclotomic_polynomial(d));
    p = std::move(q);
  }
  return p;
}

}  // namespace

// ---------------------------------------------------------------------------
// CyclotomicField

const CyclotomicField& CyclotomicField::get(int order) {
  if (order < 1) throw InvalidArgument("cyclotomic root order must be >= 1, got " + std::to_string(order));
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<CyclotomicField>> registry;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = registry.find(order);
  if (it == registry.end()) {
    it = registry.emplace(order, std::unique_ptr<CyclotomicField>(new CyclotomicField(order))).first;
  }
  return *it->second;
}

CyclotomicField::CyclotomicField(int order) : order_(order) {
  modulus_ = cyclotomic_polynomial(order);
  degree_ = static_cast<int>(modulus_.size()) - 1;
  const std::size_t phi = static_cast<std::size_t>(degree_);
  const std::size_t table = std::max<std::size_t>(static_cast<std::size_t>(order), 2 * phi);
  powers_.reserve(table);
  Poly cur(phi);
  cur[0] = Rational(1);
  for (std::size_t p = 0; p < table; ++p) {
    powers_.push_back(cur);
    // cur *= x, then reduce the overflow coefficient with the monic modulus.
    Rational top = cur[phi - 1];
    for (std::size_t i = phi - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = Rational(0);
    if (!top.is_zero()) {
      for (std::size_t i = 0; i < phi; ++i) cur[i] -= top * modulus_[i];
    }
  }
  // roots_[k] = z^k for k < N; the trailing slot holds zero.
  roots_.reserve(static_cast<std::size_t>(order) + 1);
  for (int k = 0; k < order; ++k) {
    const auto& pw = powers_[static_cast<std::size_t>(k)];
    roots_.emplace_back(*this, Scalar::Coeffs(pw.begin(), pw.end()));
  }
  roots_.emplace_back(*this);
}

const Scalar& CyclotomicField::root(long long k) const {
  long long r = k % order_;
  if (r < 0) r += order_;
  return roots_[static_cast<std::size_t>(r)];
}

const Scalar& CyclotomicField::one() const { return roots_[0]; }

const Scalar& CyclotomicField::zero() const { return roots_.back(); }

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar(const CyclotomicField& field) : field_(&field), c_(static_cast<std::size_t>(field.degree())) {}

Scalar::Scalar(const CyclotomicField& field, Rational value) : Scalar(field) { c_[0] = std::move(value); }

Scalar::Scalar(const CyclotomicField& field, Coeffs coeffs) : field_(&field), c_(std::move(coeffs)) {
  if (c_.size() != static_cast<std::size_t>(field.degree())) {
    throw InvalidArgument("coefficient vector length " + std::to_string(c_.size()) +
                          " does not match phi(N) = " + std::to_string(field.degree()));
  }
}

bool Scalar::is_zero() const noexcept {
  for (const auto& q : c_) {
    if (!q.is_zero()) return false;
  }
  return true;
}

bool Scalar::is_one() const noexcept {
  if (!c_[0].is_one()) return false;
  for (std::size_t i = 1; i < c_.size(); ++i) {
    if (!c_[i].is_zero()) return false;
  }
  return true;
}

bool Scalar::is_rational() const noexcept {
  for (std::size_t i = 1; i < c_.size(); ++i) {
    if (!c_[i].is_zero()) return false;
  }
  return true;
}

void Scalar::require_same_field(const Scalar& other) const {
  if (field_ != other.field_) {
    throw ContextMismatch("scalar arithmetic across root orders " + std::to_string(field_->order()) + " and " +
                          std::to_string(other.field_->order()));
  }
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  require_same_field(rhs);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += rhs.c_[i];
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  require_same_field(rhs);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= rhs.c_[i];
  return *this;
}

Scalar Scalar::operator-() const {
  Scalar r(*this);
  for (auto& q : r.c_) q = -q;
  return r;
}

Scalar& Scalar::add_product(const Scalar& a, const Scalar& b) {
  require_same_field(a);
  require_same_field(b);
  const std::size_t phi = c_.size();
  if (phi == 1) {
    c_[0].add_product(a.c_[0], b.c_[0]);
    return *this;
  }
  boost::container::small_vector<Rational, 8> conv(2 * phi - 1);
  bool any = false;
  for (std::size_t i = 0; i < phi; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < phi; ++j) {
      if (b.c_[j].is_zero()) continue;
      conv[i + j].add_product(a.c_[i], b.c_[j]);
      any = true;
    }
  }
  if (!any) return *this;
  for (std::size_t i = 0; i < phi; ++i) c_[i] += conv[i];
  for (std::size_t p = phi; p < conv.size(); ++p) {
    if (conv[p].is_zero()) continue;
    const auto& red = field_->power(p);
    for (std::size_t i = 0; i < phi; ++i) c_[i].add_product(conv[p], red[i]);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  *this = *this * rhs;
  return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  Scalar r(a.field());
  r.add_product(a, b);
  return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.field_ != b.field_) return false;
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (!(a.c_[i] == b.c_[i])) return false;
  }
  return true;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero scalar");
  const std::size_t phi = c_.size();
  if (phi == 1) return Scalar(*field_, c_[0].inverse());
  // Extended Euclid: maintain s with s * a == r (mod Phi).
  Poly r0 = field_->modulus();
  Poly r1(c_.begin(), c_.end());
  trim(r1);
  Poly s0;
  Poly s1{Rational(1)};
  while (r1.size() > 1) {
    auto [q, r] = divmod(r0, r1);
    Poly s = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r1 is a nonzero constant since Phi_N is irreducible.
  const Rational k = r1[0].inverse();
  auto [q, s] = divmod(s1, field_->modulus());
  Coeffs out(phi);
  for (std::size_t i = 0; i < s.size(); ++i) out[i] = s[i] * k;
  return Scalar(*field_, std::move(out));
}

std::string Scalar::str() const {
  std::string out;
  for (std::size_t p = 0; p < c_.size(); ++p) {
    const Rational& q = c_[p];
    if (q.is_zero()) continue;
    std::string term;
    if (p == 0) {
      term = q.str();
    } else if (q.is_one()) {
      term = "z^" + std::to_string(p);
    } else if (q == Rational(-1)) {
      term = "-z^" + std::to_string(p);
    } else {
      term = q.str() + "*z^" + std::to_string(p);
    }
    if (!out.empty() && term[0] != '-') out += '+';
    out += term;
  }
  return out.empty() ? "0" : out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

Scalar root_of_unity(long long k, int order) { return CyclotomicField::get(order).root(k); }

Scalar scalar_mul(const Scalar& a, const Scalar& b) { return a * b; }

Scalar scalar_inverse(const Scalar& a) { return a.inverse(); }

// ---------------------------------------------------------------------------
// Literal parsing

namespace {

class LiteralParser {
 public:
  LiteralParser(std::string_view text, const CyclotomicField& field) : text_(text), field_(field) {}

  Scalar parse() {
    Scalar acc(field_);
    skip_ws();
    if (at_end()) fail("empty scalar literal");
    bool first = true;
    while (!at_end()) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-' between terms");
      }
      Scalar term = parse_term();
      if (negative) {
        acc -= term;
      } else {
        acc += term;
      }
      first = false;
      skip_ws();
    }
    return acc;
  }

 private:
  Scalar parse_term() {
    if (peek() == 'z') return parse_power();
    Rational coeff = parse_rational();
    skip_ws();
    if (!at_end() && peek() == '*') {
      ++pos_;
      skip_ws();
      if (at_end() || peek() != 'z') fail("expected 'z^' after '*'");
      Scalar p = parse_power();
      return Scalar(field_, coeff) * p;
    }
    return Scalar(field_, coeff);
  }

  Scalar parse_power() {
    ++pos_;  // 'z'
    skip_ws();
    if (at_end() || peek() != '^') fail("expected '^' after 'z'");
    ++pos_;
    skip_ws();
    std::size_t start = pos_;
    if (!at_end() && (peek() == '-' || peek() == '+')) ++pos_;
    std::size_t digits = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == digits) fail("expected exponent after 'z^'");
    const std::string tok(text_.substr(start, pos_ - start));
    mpz_class e(tok[0] == '+' ? tok.substr(1) : tok, 10);
    mpz_class r = e % field_.order();
    if (r < 0) r += field_.order();
    return field_.root(r.get_si());
  }

  Rational parse_rational() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ == start) fail("expected a number or 'z^'");
    if (!at_end() && peek() == '/') {
      ++pos_;
      std::size_t dstart = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (pos_ == dstart) fail("expected denominator after '/'");
    }
    try {
      return Rational::parse(text_.substr(start, pos_ - start));
    } catch (const DivisionByZero&) {
      fail("zero denominator");
    }
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("scalar literal '" + std::string(text_) + "': " + msg, pos_);
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  std::string_view text_;
  const CyclotomicField& field_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(std::string_view text, const CyclotomicField& field) {
  return LiteralParser(text, field).parse();
}

}  // namespace fmc
