#pragma once

#include <string>

#include "fmc/graded.hpp"
#include "fmc/identities.hpp"

namespace fmc {

// Constructions check their hypotheses first and throw PreconditionFailed,
// carrying the failing reports, when one does not hold.

/// [x,y] = x*y - eps(x,y) y*x. No precondition.
BilinearMap commutator_bracket(const BilinearMap& prelie);

/// Left multiplication x |-> (y |-> m(x,y)) as a representation on the algebra itself.
Representation left_multiplication(const BilinearMap& m, std::string name);

struct Symmetrization {
  BilinearMap dot;
  Representation frakL;
};

/// x.y = x<>y + eps(x,y) y<>x and frakL_x y = x<>y. Requires zinbiel-color.
Symmetrization symmetrize_zinbiel(const BilinearMap& zinbiel);

/// (ad, L) on A. Requires the f-manifold-color suite.
FmRepresentation adjoint_fm_representation(const AlgebraSpec& spec, const CheckOptions& options = {});

/// A + V with the A basis first. Requires f-manifold-color on A and the
/// fm-representation suite on `rep`. The result carries dot and bracket only.
AlgebraSpec semidirect_product(const AlgebraSpec& spec, const FmRepresentation& rep, const CheckOptions& options = {});

/// (V*, rho*, -mu*) with dual basis degrees negated, where
/// <mu*(x)a, v> = -eps(x, a) <a, mu(x)v> and likewise for rho*. No precondition.
FmRepresentation dual_representation(const FmRepresentation& rep);

/// As above, after confirming f-manifold-color, assoc-rep, lie-rep,
/// dual-hyp-R and dual-hyp-T for `rep` over `spec`.
FmRepresentation dual_representation_checked(const AlgebraSpec& spec, const FmRepresentation& rep,
                                             const CheckOptions& options = {});

/// Rescales basis vector i of the carrier by eps(d_i, d_i). Applied to a
/// double dual this is the canonical map V -> V**.
FmRepresentation canonical_identification(const FmRepresentation& rep);

struct Induced {
  /// Input products plus dot and bracket; the pair (L, frakL) stored as
  /// "induced.rho" / "induced.mu".
  AlgebraSpec spec;
  FmRepresentation rep;
};

/// dot = symmetrized zinbiel, bracket = commutator of prelie, L_x = x*-,
/// frakL_x = x<>-. Requires the pre-f-manifold-color suite.
Induced induce_from_pre_f(const AlgebraSpec& spec, const CheckOptions& options = {});

}  // namespace fmc
