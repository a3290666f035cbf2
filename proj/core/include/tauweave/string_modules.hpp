#pragma once

#include "tauweave/complex.hpp"
#include "tauweave/module.hpp"

#include <vector>

namespace tauweave::oracle {

// Indecomposable-module enumeration for monomial special biserial algebras
// via string combinatorics (band modules carry self-extensions, so they never
// enter tau-rigid enumeration). Every returned module is verified against the
// relations and for a local endomorphism ring. Throws when the presentation
// is not monomial special biserial or the walk budget is exceeded.
std::vector<RightModule> enumerate_string_modules(const FiniteDimAlgebra &A,
                                                  std::size_t budget = 4096);

// Brute-force support tau-tilting poset from a complete pool of
// indecomposable candidates: all subsets (M summands, P labels) that form a
// tau-rigid pair with |M| + |P| = n, ordered by the two-term homotopy test.
struct BruteForcePoset {
  struct Node {
    std::vector<std::size_t> summands; // indices into the pool
    std::vector<int> shifted_projectives;
  };
  std::vector<Node> nodes;
  std::vector<char> geq; // nodes.size()^2 order matrix
  std::vector<int> dip, dis;

  bool is_n_regular(int n) const;
};

BruteForcePoset sttilt_from_pool(const FiniteDimAlgebra &A,
                                 const std::vector<RightModule> &pool);

} // namespace tauweave::oracle
