#pragma once

#include "tauweave/module.hpp"
#include "tauweave/xi.hpp"

#include <vector>

namespace tauweave::oracle {

// True iff Hom_{K^b}(X, Y[1]) = 0: the map
// (h, h') |-> h o d_X + d_Y o h' from Hom(X^0, Y^0) + Hom(X^-1, Y^-1) onto
// Hom(X^-1, Y^0) is surjective (exact rank computation).
bool homotopy_vanishes(const FiniteDimAlgebra &A, const ConcreteTwoTerm &X,
                       const ConcreteTwoTerm &Y);

// dim_k of the chain endomorphism algebra of X modulo homotopy.
std::size_t end_dim(const FiniteDimAlgebra &A, const ConcreteTwoTerm &X);

// End_{K^b}(X) is local: dim(End / rad) = 1, radical via the trace-form
// kernel over the rationals.
bool is_local_endomorphism(const FiniteDimAlgebra &A, const ConcreteTwoTerm &X);

// The labeled complex with shortest-path differential entries: even entries
// of the index in degree -1, odd entries in degree 0, labels 0 and n+1
// dropped. Requires an algebra whose quiver has the double-line shape.
ConcreteTwoTerm realize(const FiniteDimAlgebra &A, const xi::XiIndex &i);

// M >= M' for support tau-tilting pairs, decided through the two-term
// correspondence: Hom(S(M,P), S(M',P')[1]) = 0.
struct SupportTauTiltingPair {
  RightModule module;                 // possibly zero
  std::vector<int> shifted_projectives; // labels of the projective part
};

// Validates tau-rigidity of the pair: Hom(M, tau M) = 0 (self homotopy test),
// Hom(P, M) = 0, and |M| + |P| = n where |M| counts the given indecomposable
// summands. Throws when the input is not a support tau-tilting pair.
struct PairParts {
  std::vector<const RightModule *> summands;
  std::vector<int> shifted_projectives;
};
ConcreteTwoTerm validated_pair_complex(const FiniteDimAlgebra &A,
                                       const PairParts &parts);

bool support_tau_tilting_geq(const FiniteDimAlgebra &A,
                             const ConcreteTwoTerm &SM,
                             const ConcreteTwoTerm &SM_prime);

} // namespace tauweave::oracle
