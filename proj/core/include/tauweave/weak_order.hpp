#pragma once

#include "tauweave/permutation.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace tauweave::weak_order {

// Full left weak order lattice on Sym_{n+1}. Nodes are sorted by
// (length, one-line lex); edges are covers, oriented upward:
// edge (w -> w'') means w'' covers w, i.e. w'' = s_i . w with the length
// going up by one.
class WeakOrderLattice {
public:
  static WeakOrderLattice build(int n, std::uint64_t node_budget = 40320);

  int n() const { return n_; }
  int order() const { return n_ + 1; }
  std::size_t size() const { return nodes_.size(); }

  const Permutation &node(std::size_t idx) const { return nodes_[idx]; }
  std::size_t index_of(const Permutation &w) const;

  const std::vector<std::pair<std::size_t, std::size_t>> &edges() const {
    return edges_;
  }
  const std::vector<std::vector<std::size_t>> &successors() const {
    return up_;
  }
  const std::vector<std::vector<std::size_t>> &predecessors() const {
    return down_;
  }

  bool leq_idx(std::size_t a, std::size_t b) const; // node a <= node b
  // BFS-reachability oracle over cover edges; the independent cross-check
  // for the closed-form leq.
  bool leq_bfs(std::size_t a, std::size_t b) const;

  std::size_t join_idx(const std::vector<std::size_t> &elems) const;
  std::size_t meet_idx(const std::vector<std::size_t> &elems) const;

  Permutation join(const std::vector<Permutation> &elems) const;
  Permutation meet(const std::vector<Permutation> &elems) const;

private:
  int n_ = 1;
  std::vector<Permutation> nodes_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<std::vector<std::size_t>> up_, down_;
  // up-set and down-set bitsets, one word-packed row per node
  std::vector<std::vector<std::uint64_t>> upset_, downset_;

  bool bit(const std::vector<std::uint64_t> &row, std::size_t k) const {
    return (row[k >> 6] >> (k & 63)) & 1u;
  }
};

// Longest element of the standard parabolic subgroup <s_j : j in J>.
Permutation parabolic_longest(int order, const std::set<int> &J);

// Enumerates <s_j : j in J> elementwise.
std::vector<Permutation> parabolic_subgroup(int order, const std::set<int> &J);

// True iff the interval [1, w_0(J)] equals the parabolic subgroup.
bool parabolic_interval_check(const WeakOrderLattice &lat, const std::set<int> &J);

} // namespace tauweave::weak_order
