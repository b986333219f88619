#pragma once

#include <string>

#include "fmc/graded.hpp"

namespace fmc {

// Operators on homogeneous elements. Every epsilon factor is read off the
// degrees of the arguments; the Element overloads throw NonHomogeneous when an
// argument spans several degrees.

/// P_x(y,z) = [x, y.z] - [x,y].z - eps(x,y) y.[x,z]
Element op_P(const BilinearMap& dot, const BilinearMap& bracket, const Element& x, const Element& y,
             const Element& z);
/// R(x1,x2) = rho(x1)mu(x2) - eps(x1,x2) mu(x2)rho(x1) - mu([x1,x2])
Matrix op_R(const Representation& rho, const Representation& mu, const BilinearMap& bracket, const Element& x1,
            const Element& x2);
/// S(x1,x2) = mu(x1)rho(x2) + eps(x1,x2) mu(x2)rho(x1) - rho(x1.x2)
Matrix op_S(const Representation& rho, const Representation& mu, const BilinearMap& dot, const Element& x1,
            const Element& x2);
/// T(x,y) = -eps(x,y) rho(y)mu(x) - rho(x)mu(y) + rho(x.y)
Matrix op_T_rep(const Representation& rho, const Representation& mu, const BilinearMap& dot, const Element& x,
                const Element& y);
/// T(y,z)(w) = -eps(y,z)[z, y.w] - [y, z.w] + [y.z, w]
Element op_T_coherence(const BilinearMap& dot, const BilinearMap& bracket, const Element& y, const Element& z,
                       const Element& w);
/// F1(x,y,z) = x*(y<>z) - eps(x,y) y<>(x*z) - [x,y]<>z, with [ , ] the commutator of *.
Element op_F1(const BilinearMap& zinbiel, const BilinearMap& prelie, const Element& x, const Element& y,
              const Element& z);
/// F2(x,y,z) = x<>(y*z) + eps(x,y) y<>(x*z) - (x.y)*z, with . the symmetrization of <>.
Element op_F2(const BilinearMap& zinbiel, const BilinearMap& prelie, const Element& x, const Element& y,
              const Element& z);

/// x.y = x<>y + eps(x,y) y<>x on basis vectors.
BilinearMap symmetrized_product(const BilinearMap& m, std::string name = "dot");
/// [x,y] = x*y - eps(x,y) y*x on basis vectors.
BilinearMap commutator_product(const BilinearMap& m, std::string name = "bracket");

namespace hom {

Hom basis(const GradedModule& m, std::size_t i);
/// Throws NonHomogeneous.
Hom lift(const GradedModule& m, const Element& x);

Hom mul(const BilinearMap& m, const Hom& x, const Hom& y);
Hom act(const Representation& r, const Hom& x, const Hom& v);

Hom P(const BilinearMap& dot, const BilinearMap& bracket, const Hom& x, const Hom& y, const Hom& z);
Hom R(const Representation& rho, const Representation& mu, const BilinearMap& bracket, const Hom& x1, const Hom& x2,
      const Hom& v);
Hom S(const Representation& rho, const Representation& mu, const BilinearMap& dot, const Hom& x1, const Hom& x2,
      const Hom& v);
Hom T_rep(const Representation& rho, const Representation& mu, const BilinearMap& dot, const Hom& x, const Hom& y,
          const Hom& v);
Hom T_coh(const BilinearMap& dot, const BilinearMap& bracket, const Hom& y, const Hom& z, const Hom& w);
/// `bracket` must be the commutator of `prelie`.
Hom F1(const BilinearMap& zinbiel, const BilinearMap& prelie, const BilinearMap& bracket, const Hom& x, const Hom& y,
       const Hom& z);
/// `dot` must be the symmetrization of `zinbiel`.
Hom F2(const BilinearMap& zinbiel, const BilinearMap& prelie, const BilinearMap& dot, const Hom& x, const Hom& y,
       const Hom& z);

}  // namespace hom

}  // namespace fmc
