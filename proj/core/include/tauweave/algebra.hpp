#pragma once

#include "tauweave/qmatrix.hpp"
#include "tauweave/quiver.hpp"

#include <map>
#include <string>
#include <vector>

namespace tauweave::oracle {

// Exact basis and multiplication table for kQ/I with graded admissible I.
// Basis classes are normal-form path classes graded by length; every class
// has a definite source and target vertex. Immutable once built.
class FiniteDimAlgebra {
public:
  struct BasisClass {
    int degree = 0;
    int src = 0, dst = 0;       // class lies in e_src A e_dst
    std::vector<int> rep_path;  // arrow indices; empty for idempotents
  };

  static FiniteDimAlgebra build(const QuiverPresentation &presentation,
                                int degree_cap = 32);

  const QuiverPresentation &presentation() const { return pres_; }
  int vertex_count() const { return pres_.vertex_count; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<BasisClass> &basis() const { return basis_; }
  const std::vector<int> &dims_by_degree() const { return dim_by_degree_; }
  int top_degree() const { return static_cast<int>(dim_by_degree_.size()) - 1; }

  std::size_t idempotent(int vertex) const { return idempotent_[vertex - 1]; }
  std::size_t arrow_class(int arrow_index) const {
    return arrow_class_[arrow_index];
  }

  // x * y as a coefficient vector over the basis.
  const QVec &mult(std::size_t x, std::size_t y) const {
    return table_[x * basis_.size() + y];
  }
  QVec mult_vec(const QVec &x, const QVec &y) const;

  // Class of an arbitrary arrow path (normal form); zero vector when the
  // path dies in the quotient or is not composable.
  QVec path_class(const std::vector<int> &arrow_path) const;

  // Coefficient vector with a single 1 at basis class k.
  QVec unit(std::size_t k) const;

  // Basis indices of e_a A e_b (classes from a to b); Hom(P_b, P_a) basis.
  const std::vector<std::size_t> &block(int a, int b) const {
    return blocks_[(a - 1) * pres_.vertex_count + (b - 1)];
  }

  // Monotone shortest path class between vertices of a double-line quiver;
  // the identity class when from == to. Requires unique consecutive arrows.
  QVec shortest_path_class(int from, int to) const;

  bool associativity_spot_check() const; // exhaustive on all basis triples

  // e_i (Rad A) x == x (Rad A) e_j for a non-loop arrow x : i -> j.
  bool radical_commutation_holds(int arrow_index) const;

private:
  QuiverPresentation pres_;
  std::vector<BasisClass> basis_;
  std::vector<int> dim_by_degree_;
  std::vector<std::size_t> idempotent_;
  std::vector<std::size_t> arrow_class_;
  std::vector<QVec> table_;
  std::vector<std::vector<std::size_t>> blocks_;

  // reduction data per (degree, src, dst): echelon rows of the ideal slice
  // over the path coordinates, plus the surviving (non-pivot) paths
  struct Slice {
    std::vector<std::vector<int>> paths; // all composable paths of the degree
    std::map<std::vector<int>, std::size_t> path_index;
    RowSpace ideal{0};
    std::vector<std::size_t> survivors;          // path positions kept as classes
    std::vector<std::size_t> class_of_survivor;  // global basis index
  };
  std::map<std::tuple<int, int, int>, Slice> slices_;

  QVec reduce_in_slice(const Slice &slice, QVec path_coords) const;
};

} // namespace tauweave::oracle
