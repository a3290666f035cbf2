#pragma once

#include "tauweave/algebra.hpp"

#include <optional>
#include <vector>

namespace tauweave::oracle {

// Finitely generated right module over a built algebra: exact per-vertex
// coordinate spaces M e_j together with one matrix per arrow.
// action[a] maps M e_{src(a)} -> M e_{dst(a)} (columns index the source).
class RightModule {
public:
  RightModule() = default;
  RightModule(const FiniteDimAlgebra &A, std::vector<int> dims,
              std::vector<QMat> action);

  static RightModule zero(const FiniteDimAlgebra &A);
  static RightModule projective(const FiniteDimAlgebra &A, int vertex);
  static RightModule direct_sum(const FiniteDimAlgebra &A,
                                const std::vector<const RightModule *> &parts);

  const FiniteDimAlgebra &algebra() const { return *A_; }
  int vertex_dim(int v) const { return dims_[v - 1]; }
  const std::vector<int> &dims() const { return dims_; }
  int total_dim() const;
  bool is_zero() const { return total_dim() == 0; }

  const QMat &action(int arrow) const { return action_[arrow]; }

  // Action of an arbitrary arrow path, as a map M e_src -> M e_dst.
  QMat path_action(const std::vector<int> &path, int src_vertex) const;
  // Action of an algebra element restricted to M e_a -> M e_b;
  // only classes inside e_a A e_b contribute.
  QMat element_action(const QVec &elem, int a, int b) const;

  std::vector<int> support() const; // vertices with M e_v != 0

  // every relation of the presentation must act as zero
  bool respects_relations() const;

  std::vector<int> top_dims() const; // dims of M / M rad per vertex

  // End_Lambda(M) is local (dim End/rad = 1 over the rationals);
  // the zero module returns false.
  bool has_local_endomorphism_ring() const;

  // Hom_Lambda(M, N) dimension via the intertwiner equations.
  static std::size_t hom_dim(const RightModule &M, const RightModule &N);

private:
  const FiniteDimAlgebra *A_ = nullptr;
  std::vector<int> dims_;
  std::vector<QMat> action_;
};

// The right module e_i Lambda / e_i Lambda (1 - sum_{k in kept} e_k) Lambda.
RightModule cyclic_quotient_module(const FiniteDimAlgebra &A, int i,
                                   const std::vector<int> &kept);

// Two-term complex of projectives in degrees -1, 0; entry (r, c) of the
// differential lies in e_{deg_zero[r]} A e_{deg_minus1[c]}.
struct ConcreteTwoTerm {
  std::vector<int> deg_minus1;
  std::vector<int> deg_zero;
  std::vector<std::vector<QVec>> diff; // diff[r][c]

  static ConcreteTwoTerm projective_stalk(const FiniteDimAlgebra &A, int vertex);
  static ConcreteTwoTerm shifted_projective(const FiniteDimAlgebra &A,
                                            int vertex);
  ConcreteTwoTerm direct_sum_with(const ConcreteTwoTerm &other) const;

  // add P_1 and add P_0 share no label.
  bool degreewise_disjoint() const;
};

// Minimal projective presentation [P_1 -> P_0] of a nonzero module
// (projective covers built from tops).
ConcreteTwoTerm minimal_presentation(const FiniteDimAlgebra &A,
                                     const RightModule &M);

// S(M, P): the presentation of M with P appended in degree -1.
ConcreteTwoTerm s_complex(const FiniteDimAlgebra &A, const RightModule &M,
                          const std::vector<int> &shifted_projectives);

} // namespace tauweave::oracle
