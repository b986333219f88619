#include "fmc/operators.hpp"

#include "fmc/errors.hpp"

namespace fmc {

namespace {

const Grading& grading_of(const BilinearMap& m) { return m.module().grading(); }

// Accumulates signed, epsilon-twisted terms of a fixed target degree.
class Sum {
 public:
  Sum(Element zero, GroupElement degree) : h_{std::move(zero), std::move(degree)} {}

  Sum& plus(const Hom& t, long long e = 0) {
    h_.value.add_root_scaled(t.value, e, false);
    return *this;
  }
  Sum& minus(const Hom& t, long long e = 0) {
    h_.value.add_root_scaled(t.value, e, true);
    return *this;
  }
  Hom done() { return std::move(h_); }

 private:
  Hom h_;
};

void require_same_carrier(const Representation& rho, const Representation& mu) {
  if (!(rho.carrier() == mu.carrier())) throw ContextMismatch("rho and mu act on different carriers");
  if (!(rho.algebra() == mu.algebra())) throw ContextMismatch("rho and mu act by different algebras");
}

template <class F>
Matrix operator_matrix(const Representation& rho, F&& column) {
  const GradedModule& v = rho.carrier();
  Matrix out(v.dim(), v.dim(), v.field());
  for (std::size_t j = 0; j < v.dim(); ++j) out.set_column(j, column(hom::basis(v, j)).value);
  return out;
}

}  // namespace

namespace hom {

Hom basis(const GradedModule& m, std::size_t i) { return Hom{m.basis(i), m.degree(i)}; }

Hom lift(const GradedModule& m, const Element& x) { return Hom{x, m.homogeneous_degree(x)}; }

Hom mul(const BilinearMap& m, const Hom& x, const Hom& y) {
  return Hom{m.apply(x.value, y.value), grading_of(m).add(x.degree, y.degree)};
}

Hom act(const Representation& r, const Hom& x, const Hom& v) {
  return Hom{r.act(x.value, v.value), r.algebra().grading().add(x.degree, v.degree)};
}

Hom P(const BilinearMap& dot, const BilinearMap& bracket, const Hom& x, const Hom& y, const Hom& z) {
  const Grading& g = grading_of(dot);
  Sum s(dot.module().zero(), g.add(x.degree, y.degree, z.degree));
  s.plus(mul(bracket, x, mul(dot, y, z)));
  s.minus(mul(dot, mul(bracket, x, y), z));
  s.minus(mul(dot, y, mul(bracket, x, z)), g.eps_exponent(x.degree, y.degree));
  return s.done();
}

Hom R(const Representation& rho, const Representation& mu, const BilinearMap& bracket, const Hom& x1, const Hom& x2,
      const Hom& v) {
  const Grading& g = grading_of(bracket);
  Sum s(rho.carrier().zero(), g.add(x1.degree, x2.degree, v.degree));
  s.plus(act(rho, x1, act(mu, x2, v)));
  s.minus(act(mu, x2, act(rho, x1, v)), g.eps_exponent(x1.degree, x2.degree));
  s.minus(act(mu, mul(bracket, x1, x2), v));
  return s.done();
}

Hom S(const Representation& rho, const Representation& mu, const BilinearMap& dot, const Hom& x1, const Hom& x2,
      const Hom& v) {
  const Grading& g = grading_of(dot);
  Sum s(rho.carrier().zero(), g.add(x1.degree, x2.degree, v.degree));
  s.plus(act(mu, x1, act(rho, x2, v)));
  s.plus(act(mu, x2, act(rho, x1, v)), g.eps_exponent(x1.degree, x2.degree));
  s.minus(act(rho, mul(dot, x1, x2), v));
  return s.done();
}

Hom T_rep(const Representation& rho, const Representation& mu, const BilinearMap& dot, const Hom& x, const Hom& y,
          const Hom& v) {
  const Grading& g = grading_of(dot);
  Sum s(rho.carrier().zero(), g.add(x.degree, y.degree, v.degree));
  s.minus(act(rho, y, act(mu, x, v)), g.eps_exponent(x.degree, y.degree));
  s.minus(act(rho, x, act(mu, y, v)));
  s.plus(act(rho, mul(dot, x, y), v));
  return s.done();
}

Hom T_coh(const BilinearMap& dot, const BilinearMap& bracket, const Hom& y, const Hom& z, const Hom& w) {
  const Grading& g = grading_of(dot);
  Sum s(dot.module().zero(), g.add(y.degree, z.degree, w.degree));
  s.minus(mul(bracket, z, mul(dot, y, w)), g.eps_exponent(y.degree, z.degree));
  s.minus(mul(bracket, y, mul(dot, z, w)));
  s.plus(mul(bracket, mul(dot, y, z), w));
  return s.done();
}

Hom F1(const BilinearMap& zinbiel, const BilinearMap& prelie, const BilinearMap& bracket, const Hom& x, const Hom& y,
       const Hom& z) {
  const Grading& g = grading_of(zinbiel);
  Sum s(zinbiel.module().zero(), g.add(x.degree, y.degree, z.degree));
  s.plus(mul(prelie, x, mul(zinbiel, y, z)));
  s.minus(mul(zinbiel, y, mul(prelie, x, z)), g.eps_exponent(x.degree, y.degree));
  s.minus(mul(zinbiel, mul(bracket, x, y), z));
  return s.done();
}

Hom F2(const BilinearMap& zinbiel, const BilinearMap& prelie, const BilinearMap& dot, const Hom& x, const Hom& y,
       const Hom& z) {
  const Grading& g = grading_of(zinbiel);
  Sum s(zinbiel.module().zero(), g.add(x.degree, y.degree, z.degree));
  s.plus(mul(zinbiel, x, mul(prelie, y, z)));
  s.plus(mul(zinbiel, y, mul(prelie, x, z)), g.eps_exponent(x.degree, y.degree));
  s.minus(mul(prelie, mul(dot, x, y), z));
  return s.done();
}

}  // namespace hom

BilinearMap symmetrized_product(const BilinearMap& m, std::string name) {
  const GradedModule& a = m.module();
  const Grading& g = a.grading();
  std::vector<BilinearMap::Entry> entries;
  for (const auto& e : m.entries()) {
    entries.push_back(e);
    // e contributes eps(j,i) m(b_j, b_i) to the (j, i) cell.
    entries.push_back({e.j, e.i, e.k, g.eps(a.degree(e.j), a.degree(e.i)) * e.coeff});
  }
  return BilinearMap(std::move(name), a, entries);
}

BilinearMap commutator_product(const BilinearMap& m, std::string name) {
  const GradedModule& a = m.module();
  const Grading& g = a.grading();
  std::vector<BilinearMap::Entry> entries;
  for (const auto& e : m.entries()) {
    entries.push_back(e);
    entries.push_back({e.j, e.i, e.k, -(g.eps(a.degree(e.j), a.degree(e.i)) * e.coeff)});
  }
  return BilinearMap(std::move(name), a, entries);
}

Element op_P(const BilinearMap& dot, const BilinearMap& bracket, const Element& x, const Element& y,
             const Element& z) {
  const GradedModule& a = dot.module();
  return hom::P(dot, bracket, hom::lift(a, x), hom::lift(a, y), hom::lift(a, z)).value;
}

Matrix op_R(const Representation& rho, const Representation& mu, const BilinearMap& bracket, const Element& x1,
            const Element& x2) {
  require_same_carrier(rho, mu);
  const GradedModule& a = bracket.module();
  const Hom h1 = hom::lift(a, x1), h2 = hom::lift(a, x2);
  return operator_matrix(rho, [&](const Hom& v) { return hom::R(rho, mu, bracket, h1, h2, v); });
}

Matrix op_S(const Representation& rho, const Representation& mu, const BilinearMap& dot, const Element& x1,
            const Element& x2) {
  require_same_carrier(rho, mu);
  const GradedModule& a = dot.module();
  const Hom h1 = hom::lift(a, x1), h2 = hom::lift(a, x2);
  return operator_matrix(rho, [&](const Hom& v) { return hom::S(rho, mu, dot, h1, h2, v); });
}

Matrix op_T_rep(const Representation& rho, const Representation& mu, const BilinearMap& dot, const Element& x,
                const Element& y) {
  require_same_carrier(rho, mu);
  const GradedModule& a = dot.module();
  const Hom hx = hom::lift(a, x), hy = hom::lift(a, y);
  return operator_matrix(rho, [&](const Hom& v) { return hom::T_rep(rho, mu, dot, hx, hy, v); });
}

Element op_T_coherence(const BilinearMap& dot, const BilinearMap& bracket, const Element& y, const Element& z,
                       const Element& w) {
  const GradedModule& a = dot.module();
  return hom::T_coh(dot, bracket, hom::lift(a, y), hom::lift(a, z), hom::lift(a, w)).value;
}

Element op_F1(const BilinearMap& zinbiel, const BilinearMap& prelie, const Element& x, const Element& y,
              const Element& z) {
  const GradedModule& a = zinbiel.module();
  const BilinearMap bracket = commutator_product(prelie);
  return hom::F1(zinbiel, prelie, bracket, hom::lift(a, x), hom::lift(a, y), hom::lift(a, z)).value;
}

Element op_F2(const BilinearMap& zinbiel, const BilinearMap& prelie, const Element& x, const Element& y,
              const Element& z) {
  const GradedModule& a = zinbiel.module();
  const BilinearMap dot = symmetrized_product(zinbiel);
  return hom::F2(zinbiel, prelie, dot, hom::lift(a, x), hom::lift(a, y), hom::lift(a, z)).value;
}

}  // namespace fmc
