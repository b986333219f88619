#include "naive.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace oracle {

namespace {

struct H {
  Vec v;
  Deg d;
};

using Op = std::function<H(const H&, const H&)>;

struct Shape {
  std::size_t algebra;
  bool carrier;
};

const std::map<std::string, Shape>& shapes() {
  static const std::map<std::string, Shape> s = {
      {"eps-commutative", {2, false}}, {"associative", {3, false}},     {"lie-color-skew", {2, false}},
      {"lie-color-jacobi", {3, false}}, {"pre-lie-color", {3, false}},  {"zinbiel-color", {3, false}},
      {"hertling-manin", {4, false}},  {"assoc-rep", {2, true}},        {"lie-rep", {2, true}},
      {"fm-rep-R", {3, true}},         {"fm-rep-S", {3, true}},         {"dual-hyp-R", {3, true}},
      {"dual-hyp-T", {3, true}},       {"coherence-1", {4, false}},     {"coherence-2", {4, false}},
      {"pre-fm-1", {4, false}},        {"pre-fm-2", {4, false}},        {"form-invariance", {3, false}},
      {"form-symmetric", {2, false}},  {"p-decomposition", {3, false}}, {"form-p-adjoint", {4, false}},
      {"op:P", {3, false}},            {"op:Tc", {3, false}},           {"op:F1", {3, false}},
      {"op:F2", {3, false}},           {"op:R", {2, true}},             {"op:S", {2, true}},
      {"op:T", {2, true}},
  };
  return s;
}

class Eval {
 public:
  Eval(const Algebra& a, const Names& names) : a_(a), f_(a.field()), names_(names) {}

  Scalar zero() const { return f_.zero(); }

  Deg add(const Deg& x, const Deg& y) const {
    Deg r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = (x[i] + y[i]) % a_.orders[i];
    return r;
  }

  Scalar eps(const Deg& x, const Deg& y) const {
    long long e = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      for (std::size_t j = 0; j < y.size(); ++j) e += x[i] * a_.M[i][j] * y[j];
    }
    return fmc::root_of_unity(e, a_.N);
  }

  H basis(std::size_t i) const {
    Vec v(a_.n, zero());
    v[i] = f_.one();
    return {v, a_.degrees[i]};
  }

  H carrier_basis(const Rep& r, std::size_t i) const {
    Vec v(r.dim, zero());
    v[i] = f_.one();
    return {v, r.degrees[i]};
  }

  H lin(const std::vector<std::pair<Scalar, H>>& terms) const {
    H out{Vec(terms.front().second.v.size(), zero()), terms.front().second.d};
    for (const auto& [c, h] : terms) {
      for (std::size_t i = 0; i < h.v.size(); ++i) out.v[i] += c * h.v[i];
    }
    return out;
  }

  H product(const std::string& name, const H& x, const H& y) const {
    const auto& c = a_.products.at(name);
    const std::size_t n = a_.n;
    Vec out(n, zero());
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) out[k] += x.v[i] * y.v[j] * c[(i * n + j) * n + k];
      }
    }
    return {out, add(x.d, y.d)};
  }

  H act(const std::string& rep, const H& x, const H& v) const {
    const Rep& r = a_.reps.at(rep);
    const std::size_t m = r.dim;
    Vec out(m, zero());
    for (std::size_t i = 0; i < a_.n; ++i) {
      for (std::size_t row = 0; row < m; ++row) {
        for (std::size_t col = 0; col < m; ++col) out[row] += x.v[i] * r.a[(i * m + row) * m + col] * v.v[col];
      }
    }
    return {out, add(x.d, v.d)};
  }

  Scalar form(const H& x, const H& y) const {
    const auto& b = a_.forms.at(names_.form);
    Scalar s = zero();
    for (std::size_t i = 0; i < a_.n; ++i) {
      for (std::size_t j = 0; j < a_.n; ++j) s += x.v[i] * y.v[j] * b[i * a_.n + j];
    }
    return s;
  }

  Vec run(const std::string& id, const std::vector<std::size_t>& idx) const;
  bool nondegenerate() const;

 private:
  Scalar one() const { return f_.one(); }
  Scalar m1() const { return -f_.one(); }

  const Algebra& a_;
  const fmc::CyclotomicField& f_;
  Names names_;
};

Scalar determinant(std::vector<std::vector<Scalar>> m, const fmc::CyclotomicField& f) {
  // Laplace expansion along the first row.
  const std::size_t n = m.size();
  if (n == 0) return f.one();
  if (n == 1) return m[0][0];
  Scalar det = f.zero();
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<Scalar>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Scalar> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(m[r][k]);
      }
      minor.push_back(row);
    }
    Scalar t = m[0][c] * determinant(minor, f);
    det += (c % 2 == 0) ? t : -t;
  }
  return det;
}

bool Eval::nondegenerate() const {
  const auto& b = a_.forms.at(names_.form);
  std::vector<std::vector<Scalar>> m(a_.n, std::vector<Scalar>(a_.n, zero()));
  for (std::size_t i = 0; i < a_.n; ++i) {
    for (std::size_t j = 0; j < a_.n; ++j) m[i][j] = b[i * a_.n + j];
  }
  return !determinant(m, f_).is_zero();
}

Vec Eval::run(const std::string& id, const std::vector<std::size_t>& idx) const {
  const Shape sh = shapes().at(id);
  std::vector<H> x;
  for (std::size_t s = 0; s < sh.algebra; ++s) x.push_back(basis(idx[s]));
  const bool needs_rep = sh.carrier;
  const Rep* rep = needs_rep ? &a_.reps.at(names_.mu) : nullptr;
  H v = needs_rep ? carrier_basis(*rep, idx.back()) : H{};

  const bool derived = id == "pre-fm-1" || id == "pre-fm-2" || id == "p-decomposition" || id == "op:F1" || id == "op:F2";
  Op zin = [&](const H& p, const H& q) { return product("zinbiel", p, q); };
  Op pre = [&](const H& p, const H& q) { return product("prelie", p, q); };
  Op dot, br;
  if (derived) {
    dot = [&](const H& p, const H& q) { return lin({{one(), zin(p, q)}, {eps(p.d, q.d), zin(q, p)}}); };
    br = [&](const H& p, const H& q) { return lin({{one(), pre(p, q)}, {-eps(p.d, q.d), pre(q, p)}}); };
  } else {
    dot = [&](const H& p, const H& q) { return product("dot", p, q); };
    br = [&](const H& p, const H& q) { return product("bracket", p, q); };
  }
  auto rho = [&](const H& p, const H& w) { return act(names_.rho, p, w); };
  auto mu = [&](const H& p, const H& w) { return act(names_.mu, p, w); };
  auto e = [&](const H& p, const H& q) { return eps(p.d, q.d); };
  auto e2 = [&](const H& p, const H& q, const H& r) { return eps(p.d, add(q.d, r.d)); };

  // P_a(b,c) = [a, b.c] - [a,b].c - eps(a,b) b.[a,c]
  auto P = [&](const H& p, const H& q, const H& r) {
    return lin({{one(), br(p, dot(q, r))}, {m1(), dot(br(p, q), r)}, {-e(p, q), dot(q, br(p, r))}});
  };
  auto R = [&](const H& p, const H& q, const H& w) {
    return lin({{one(), rho(p, mu(q, w))}, {-e(p, q), mu(q, rho(p, w))}, {m1(), mu(br(p, q), w)}});
  };
  auto S = [&](const H& p, const H& q, const H& w) {
    return lin({{one(), mu(p, rho(q, w))}, {e(p, q), mu(q, rho(p, w))}, {m1(), rho(dot(p, q), w)}});
  };
  auto T = [&](const H& p, const H& q, const H& w) {
    return lin({{-e(p, q), rho(q, mu(p, w))}, {m1(), rho(p, mu(q, w))}, {one(), rho(dot(p, q), w)}});
  };
  auto Tc = [&](const H& p, const H& q, const H& w) {
    return lin({{-e(p, q), br(q, dot(p, w))}, {m1(), br(p, dot(q, w))}, {one(), br(dot(p, q), w)}});
  };
  auto F1 = [&](const H& p, const H& q, const H& r) {
    return lin({{one(), pre(p, zin(q, r))}, {-e(p, q), zin(q, pre(p, r))}, {m1(), zin(br(p, q), r)}});
  };
  auto F2 = [&](const H& p, const H& q, const H& r) {
    return lin({{one(), zin(p, pre(q, r))}, {e(p, q), zin(q, pre(p, r))}, {m1(), pre(dot(p, q), r)}});
  };
  auto Q = [&](const H& p, const H& q, const H& r) {
    return lin({{one(), F1(p, q, r)}, {e(q, r), F1(p, r, q)}, {e2(p, q, r), F2(q, r, p)}});
  };

  if (id == "op:P") return P(x[0], x[1], x[2]).v;
  if (id == "op:Tc") return Tc(x[0], x[1], x[2]).v;
  if (id == "op:F1") return F1(x[0], x[1], x[2]).v;
  if (id == "op:F2") return F2(x[0], x[1], x[2]).v;
  if (id == "op:R") return R(x[0], x[1], v).v;
  if (id == "op:S") return S(x[0], x[1], v).v;
  if (id == "op:T") return T(x[0], x[1], v).v;
  if (id == "eps-commutative") return lin({{one(), dot(x[0], x[1])}, {-e(x[0], x[1]), dot(x[1], x[0])}}).v;
  if (id == "associative") return lin({{one(), dot(dot(x[0], x[1]), x[2])}, {m1(), dot(x[0], dot(x[1], x[2]))}}).v;
  if (id == "lie-color-skew") return lin({{one(), br(x[0], x[1])}, {e(x[0], x[1]), br(x[1], x[0])}}).v;
  if (id == "lie-color-jacobi") {
    return lin({{e(x[2], x[0]), br(x[0], br(x[1], x[2]))},
                {e(x[1], x[2]), br(x[2], br(x[0], x[1]))},
                {e(x[0], x[1]), br(x[1], br(x[2], x[0]))}})
        .v;
  }
  if (id == "pre-lie-color") {
    const Scalar s = e(x[0], x[1]);
    return lin({{one(), pre(pre(x[0], x[1]), x[2])},
                {m1(), pre(x[0], pre(x[1], x[2]))},
                {-s, pre(pre(x[1], x[0]), x[2])},
                {s, pre(x[1], pre(x[0], x[2]))}})
        .v;
  }
  if (id == "zinbiel-color") {
    return lin({{one(), zin(x[0], zin(x[1], x[2]))},
                {m1(), zin(zin(x[0], x[1]), x[2])},
                {-e(x[0], x[1]), zin(zin(x[1], x[0]), x[2])}})
        .v;
  }
  if (id == "hertling-manin") {
    return lin({{one(), P(dot(x[0], x[1]), x[2], x[3])},
                {m1(), dot(x[0], P(x[1], x[2], x[3]))},
                {-e(x[0], x[1]), dot(x[1], P(x[0], x[2], x[3]))}})
        .v;
  }
  if (id == "assoc-rep") return lin({{one(), mu(dot(x[0], x[1]), v)}, {m1(), mu(x[0], mu(x[1], v))}}).v;
  if (id == "lie-rep") {
    return lin({{one(), rho(br(x[0], x[1]), v)},
                {m1(), rho(x[0], rho(x[1], v))},
                {e(x[0], x[1]), rho(x[1], rho(x[0], v))}})
        .v;
  }
  if (id == "fm-rep-R") {
    return lin({{one(), R(dot(x[0], x[1]), x[2], v)},
                {m1(), mu(x[0], R(x[1], x[2], v))},
                {-e(x[0], x[1]), mu(x[1], R(x[0], x[2], v))}})
        .v;
  }
  if (id == "fm-rep-S") {
    return lin({{one(), mu(P(x[0], x[1], x[2]), v)},
                {-e2(x[0], x[1], x[2]), S(x[1], x[2], mu(x[0], v))},
                {one(), mu(x[0], S(x[1], x[2], v))}})
        .v;
  }
  if (id == "dual-hyp-R") {
    return lin({{one(), R(dot(x[0], x[1]), x[2], v)},
                {-e2(x[0], x[1], x[2]), R(x[1], x[2], mu(x[0], v))},
                {-e(x[1], x[2]), R(x[0], x[2], mu(x[1], v))}})
        .v;
  }
  if (id == "dual-hyp-T") {
    return lin({{one(), mu(P(x[0], x[1], x[2]), v)},
                {e2(x[0], x[1], x[2]), T(x[1], x[2], mu(x[0], v))},
                {m1(), mu(x[0], T(x[1], x[2], v))}})
        .v;
  }
  if (id == "coherence-1") {
    return lin({{one(), P(dot(x[0], x[1]), x[2], x[3])},
                {-e2(x[0], x[1], x[2]), P(x[1], x[2], dot(x[0], x[3]))},
                {-e(x[1], x[2]), P(x[0], x[2], dot(x[1], x[3]))}})
        .v;
  }
  if (id == "coherence-2") {
    return lin({{one(), dot(P(x[0], x[1], x[2]), x[3])},
                {e2(x[0], x[1], x[2]), Tc(x[1], x[2], dot(x[0], x[3]))},
                {m1(), dot(x[0], Tc(x[1], x[2], x[3]))}})
        .v;
  }
  if (id == "pre-fm-1") {
    return lin({{one(), F1(dot(x[0], x[1]), x[2], x[3])},
                {m1(), zin(x[0], F1(x[1], x[2], x[3]))},
                {-e(x[0], x[1]), zin(x[1], F1(x[0], x[2], x[3]))}})
        .v;
  }
  if (id == "pre-fm-2") {
    return lin({{one(), zin(Q(x[0], x[1], x[2]), x[3])},
                {-e2(x[0], x[1], x[2]), F2(x[1], x[2], zin(x[0], x[3]))},
                {one(), zin(x[0], F2(x[1], x[2], x[3]))}})
        .v;
  }
  if (id == "p-decomposition") return lin({{one(), P(x[0], x[1], x[2])}, {m1(), Q(x[0], x[1], x[2])}}).v;
  if (id == "form-invariance") {
    return {form(dot(x[0], x[1]), x[2]) - form(x[0], dot(x[1], x[2])),
            form(br(x[0], x[1]), x[2]) - form(x[0], br(x[1], x[2]))};
  }
  if (id == "form-symmetric") return {form(x[0], x[1]) - form(x[1], x[0])};
  if (id == "form-p-adjoint") {
    return {form(P(x[0], x[1], x[2]), x[3]) -
            eps(add(x[0].d, x[1].d), x[2].d) * form(x[2], P(x[0], x[1], x[3]))};
  }
  throw std::invalid_argument("oracle: unknown identity " + id);
}

std::string degree_json(const Deg& d) {
  std::string s = "[";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + "]";
}

std::string degrees_json(const std::vector<Deg>& ds) {
  std::string s = "[";
  for (std::size_t i = 0; i < ds.size(); ++i) s += (i ? "," : "") + degree_json(ds[i]);
  return s + "]";
}

}  // namespace

std::string to_json(const Algebra& a) {
  std::ostringstream os;
  os << "{\"group\":{\"cyclic_orders\":[";
  for (std::size_t i = 0; i < a.orders.size(); ++i) os << (i ? "," : "") << a.orders[i];
  os << "]},\"bicharacter\":{\"root_order\":" << a.N << ",\"exponents\":[";
  for (std::size_t i = 0; i < a.M.size(); ++i) {
    os << (i ? "," : "") << "[";
    for (std::size_t j = 0; j < a.M[i].size(); ++j) os << (j ? "," : "") << a.M[i][j];
    os << "]";
  }
  os << "]},\"scalars\":{\"cyclotomic_order\":" << a.N << "},";
  os << "\"module\":{\"dimension\":" << a.n << ",\"degrees\":" << degrees_json(a.degrees) << "},";
  os << "\"products\":{";
  bool first = true;
  for (const auto& [name, c] : a.products) {
    os << (first ? "" : ",") << "\"" << name << "\":[";
    first = false;
    bool f2 = true;
    for (std::size_t i = 0; i < a.n; ++i) {
      for (std::size_t j = 0; j < a.n; ++j) {
        for (std::size_t k = 0; k < a.n; ++k) {
          const Scalar& s = c[(i * a.n + j) * a.n + k];
          if (s.is_zero()) continue;
          os << (f2 ? "" : ",") << "[" << i << "," << j << "," << k << ",\"" << s.str() << "\"]";
          f2 = false;
        }
      }
    }
    os << "]";
  }
  os << "},\"representations\":{";
  first = true;
  for (const auto& [name, r] : a.reps) {
    os << (first ? "" : ",") << "\"" << name << "\":{\"carrier\":";
    first = false;
    if (r.self) {
      os << "\"self\"";
    } else {
      os << "{\"dimension\":" << r.dim << ",\"degrees\":" << degrees_json(r.degrees) << "}";
    }
    os << ",\"action\":[";
    bool f2 = true;
    for (std::size_t i = 0; i < a.n; ++i) {
      for (std::size_t row = 0; row < r.dim; ++row) {
        for (std::size_t col = 0; col < r.dim; ++col) {
          const Scalar& s = r.a[(i * r.dim + row) * r.dim + col];
          if (s.is_zero()) continue;
          os << (f2 ? "" : ",") << "[" << i << "," << row << "," << col << ",\"" << s.str() << "\"]";
          f2 = false;
        }
      }
    }
    os << "]}";
  }
  os << "},\"forms\":{";
  first = true;
  for (const auto& [name, b] : a.forms) {
    os << (first ? "" : ",") << "\"" << name << "\":[";
    first = false;
    bool f2 = true;
    for (std::size_t i = 0; i < a.n; ++i) {
      for (std::size_t j = 0; j < a.n; ++j) {
        if (b[i * a.n + j].is_zero()) continue;
        os << (f2 ? "" : ",") << "[" << i << "," << j << ",\"" << b[i * a.n + j].str() << "\"]";
        f2 = false;
      }
    }
    os << "]";
  }
  os << "}}";
  return os.str();
}

Vec defect(const Algebra& a, const std::string& identity, const std::vector<std::size_t>& idx, const Names& names) {
  return Eval(a, names).run(identity, idx);
}

Verdict check(const Algebra& a, const std::string& identity, const Names& names) {
  Eval ev(a, names);
  Verdict out;
  if (identity == "form-nondegenerate") {
    out.passed = ev.nondegenerate();
    out.tuples = a.n == 0 ? 0 : 1;
    return out;
  }
  const Shape sh = shapes().at(identity);
  std::vector<std::size_t> dims(sh.algebra, a.n);
  if (sh.carrier) dims.push_back(a.reps.at(names.mu).dim);
  std::uint64_t total = 1;
  for (auto d : dims) total *= d;
  std::vector<std::size_t> idx(dims.size(), 0);
  for (std::uint64_t t = 0; t < total; ++t) {
    std::uint64_t r = t;
    for (std::size_t s = dims.size(); s-- > 0;) {
      idx[s] = r % dims[s];
      r /= dims[s];
    }
    Vec d = ev.run(identity, idx);
    bool zero = true;
    for (const auto& s : d) zero = zero && s.is_zero();
    if (!zero) {
      out.passed = false;
      out.indices = idx;
      out.defect = d;
      out.tuples = t + 1;
      return out;
    }
  }
  out.tuples = total;
  return out;
}

namespace {

const Scalar& pick(std::mt19937_64& rng, const std::vector<Scalar>& pool) { return pool[rng() % pool.size()]; }

bool coin(std::mt19937_64& rng, double p) { return std::uniform_real_distribution<double>(0, 1)(rng) < p; }

}  // namespace

Algebra random_algebra(std::mt19937_64& rng, const RandomOptions& opt) {
  static const std::vector<std::vector<int>> groups = {{}, {2}, {3}, {4}, {2, 2}};
  static const std::vector<int> roots = {1, 2, 3, 4, 6, 8, 12};
  Algebra a;
  a.orders = groups[rng() % groups.size()];
  a.N = roots[rng() % roots.size()];
  const std::size_t k = a.orders.size();
  a.M.assign(k, std::vector<long long>(k, 0));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      std::vector<long long> ok;
      for (long long m = 0; m < a.N; ++m) {
        const long long back = (a.N - m) % a.N;
        if ((m + back) % a.N != 0) continue;
        if ((a.orders[i] * m) % a.N != 0 || (a.orders[j] * m) % a.N != 0) continue;
        if (i == j && (2 * m) % a.N != 0) continue;
        ok.push_back(m);
      }
      const long long m = ok[rng() % ok.size()];
      a.M[i][j] = m;
      a.M[j][i] = (a.N - m) % a.N;
    }
  }
  a.n = 1 + rng() % opt.max_dim;
  auto random_degree = [&] {
    Deg d(k);
    for (std::size_t i = 0; i < k; ++i) d[i] = static_cast<int>(rng() % a.orders[i]);
    return d;
  };
  for (std::size_t i = 0; i < a.n; ++i) a.degrees.push_back(random_degree());

  const auto& f = a.field();
  std::vector<Scalar> pool = {f.zero(), f.zero(), f.zero(), f.one(), -f.one(), Scalar(f, fmc::Rational(2)),
                              Scalar(f, fmc::Rational(1, 2))};
  if (a.N > 2) pool.push_back(f.root(1));
  Eval ev(a, {});
  const std::size_t n = a.n;

  auto random_product = [&](int symmetry) {  // 0 free, 1 eps-symmetric, -1 eps-skew
    std::vector<Scalar> c(n * n * n, f.zero());
    if (coin(rng, 0.2)) return c;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (symmetry != 0 && j < i) continue;
        for (std::size_t t = 0; t < n; ++t) {
          if (ev.add(a.degrees[i], a.degrees[j]) != a.degrees[t]) continue;
          Scalar s = pick(rng, pool);
          if (symmetry == 0) {
            c[(i * n + j) * n + t] = s;
            continue;
          }
          const Scalar e = ev.eps(a.degrees[j], a.degrees[i]);
          if (i == j) {
            // x.x = eps(x,x) x.x and [x,x] = -eps(x,x)[x,x]
            if (symmetry == 1 && !e.is_one()) s = f.zero();
            if (symmetry == -1 && e.is_one()) s = f.zero();
            c[(i * n + j) * n + t] = s;
            continue;
          }
          c[(i * n + j) * n + t] = s;
          c[(j * n + i) * n + t] = symmetry == 1 ? e * s : -(e * s);
        }
      }
    }
    return c;
  };
  const bool structured = coin(rng, opt.structured);
  a.products["dot"] = random_product(structured ? 1 : 0);
  a.products["bracket"] = random_product(structured ? -1 : 0);
  a.products["zinbiel"] = random_product(0);
  a.products["prelie"] = random_product(0);

  auto random_rep = [&](const Rep& shape) {
    Rep r = shape;
    const std::size_t m = r.dim;
    r.a.assign(n * m * m, f.zero());
    if (coin(rng, 0.2)) return r;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t row = 0; row < m; ++row) {
        for (std::size_t col = 0; col < m; ++col) {
          if (ev.add(a.degrees[i], r.degrees[col]) == r.degrees[row]) r.a[(i * m + row) * m + col] = pick(rng, pool);
        }
      }
    }
    return r;
  };
  auto left_mult = [&](const std::string& product) {
    Rep r{true, n, a.degrees, std::vector<Scalar>(n * n * n, f.zero())};
    const auto& c = a.products[product];
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t t = 0; t < n; ++t) r.a[(i * n + t) * n + j] = c[(i * n + j) * n + t];
      }
    }
    return r;
  };
  Rep shape;
  switch (rng() % 3) {
    case 0:
      a.reps["r.rho"] = left_mult("bracket");
      a.reps["r.mu"] = left_mult("dot");
      break;
    case 1:
      shape = Rep{true, n, a.degrees, {}};
      a.reps["r.rho"] = random_rep(shape);
      a.reps["r.mu"] = random_rep(shape);
      break;
    default: {
      shape.self = false;
      shape.dim = 1 + rng() % opt.max_carrier;
      for (std::size_t i = 0; i < shape.dim; ++i) shape.degrees.push_back(random_degree());
      a.reps["r.rho"] = random_rep(shape);
      a.reps["r.mu"] = random_rep(shape);
    }
  }

  std::vector<Scalar> b(n * n, f.zero());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const Scalar s = pick(rng, pool);
      b[i * n + j] = s;
      if (coin(rng, 0.8)) b[j * n + i] = s;
    }
  }
  a.forms["B"] = b;
  return a;
}

}  // namespace oracle
