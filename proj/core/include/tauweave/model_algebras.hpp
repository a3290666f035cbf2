#pragma once

#include "tauweave/complex.hpp"
#include "tauweave/module.hpp"
#include "tauweave/permutation.hpp"

#include <map>
#include <string>
#include <vector>

namespace tauweave::models {

using oracle::FiniteDimAlgebra;
using oracle::QuiverPresentation;
using oracle::RightModule;

// Double quiver of linear A_n with the vertexwise components of the
// preprojective relation. n = 1 is the one-vertex algebra k.
QuiverPresentation preprojective(int n);

// Double line quiver with loops l_i and the loop/arrow annihilation
// relations plus l_i^m; m = 1 drops the loops.
QuiverPresentation lambda_m(int n, int m);

// The two-vertex, four-loop example with binomial commutation relations.
QuiverPresentation gamma();

// Named builtin selector: "preprojective:n", "lambda:n:m", "gamma".
QuiverPresentation builtin_algebra(const std::string &selector);

// Two-sided ideal as an exact subspace of the algebra, closed under
// multiplication by every basis class on both sides (checked).
class TwoSidedIdeal {
public:
  TwoSidedIdeal(const FiniteDimAlgebra &A, std::vector<QVec> generators);

  static TwoSidedIdeal unit(const FiniteDimAlgebra &A); // the whole algebra
  // I_i = (1 - e_i)
  static TwoSidedIdeal idempotent_complement(const FiniteDimAlgebra &A, int i);

  const FiniteDimAlgebra &algebra() const { return *A_; }
  std::size_t dim() const { return space_.rank(); }
  const RowSpace &space() const { return space_; }
  bool contains(const QVec &v) const { return space_.contains(v); }
  bool equals(const TwoSidedIdeal &other) const {
    return space_.equals(other.space_);
  }
  bool is_closed() const;

  // e_i I as a right module together with its embedding data.
  RightModule row_module(int i) const;

private:
  const FiniteDimAlgebra *A_;
  RowSpace space_;
};

// Span of pairwise products J . K (already two-sided).
TwoSidedIdeal ideal_product(const TwoSidedIdeal &J, const TwoSidedIdeal &K);

// I_w along a reduced word of w (leftmost letter's ideal multiplied first).
TwoSidedIdeal mizuno_ideal(const FiniteDimAlgebra &A,
                           const weak_order::Permutation &w);

// All reduced words of w (descent backtracking); used to assert
// reduced-word independence of I_w.
std::vector<std::vector<int>> all_reduced_words(const weak_order::Permutation &w);

struct MizunoNode {
  weak_order::Permutation w;           // the symmetric group label
  TwoSidedIdeal ideal;                 // I_{w w_0}
  std::vector<int> summand_vertices;   // i with e_i I nonzero
  std::vector<RightModule> summands;   // the nonzero e_i I
  std::vector<int> shifted_projectives;
  oracle::ConcreteTwoTerm complex;     // validated S(M, P)
};

// w |-> I_{w w_0} for all w, with every node validated as a support
// tau-tilting pair. Throws when I_w depends on the reduced word.
std::vector<MizunoNode> mizuno_map(const FiniteDimAlgebra &A, int n,
                                   bool check_all_reduced_words);

} // namespace tauweave::models
