#pragma once

#include "tauweave/permutation.hpp"
#include "tauweave/rigidity.hpp"
#include "tauweave/xi.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace tauweave::silting {

// An n-element pairwise-compatible subset of Xi; one node of the support
// tau-tilting poset. Members are kept sorted by (cardinality, lex).
struct SiltingSet {
  std::vector<xi::XiIndex> members;
  int rank = 0;

  bool operator==(const SiltingSet &) const = default;
  bool operator<(const SiltingSet &other) const;
  std::string to_string() const;
};

struct PairReadout {
  std::vector<xi::XiIndex> module_summands;
  std::vector<int> shifted_projectives; // labels k with {k} in the set
  std::vector<int> support;             // {1..n} minus shifted labels
};

PairReadout pair_readout(const SiltingSet &T);

// All maximal cliques of size n in the compatibility graph on Xi.
// Throws when a maximal clique of the wrong size is found (criterion bug) or
// when (n+1)! exceeds the node budget.
std::vector<SiltingSet> enumerate_silting(const xi::CompatibilityTable &table,
                                          std::uint64_t node_budget = 720);

// T >= T' in the silting order: Hom(a, b[1]) = 0 for all a in T, b in T'.
bool silting_geq(const xi::CompatibilityTable &table, const SiltingSet &T,
                 const SiltingSet &T_prime);

class SttiltPoset {
public:
  static SttiltPoset build(const xi::CompatibilityTable &table,
                           std::uint64_t node_budget = 720);

  int n() const { return n_; }
  std::size_t size() const { return nodes_.size(); }
  const SiltingSet &node(std::size_t k) const { return nodes_[k]; }
  std::size_t index_of(const SiltingSet &T) const;

  bool geq(std::size_t a, std::size_t b) const {
    return geq_[a * nodes_.size() + b] != 0;
  }
  // Mutation edges, oriented from larger to smaller.
  const std::vector<std::pair<std::size_t, std::size_t>> &hasse_edges() const {
    return edges_;
  }
  const std::vector<std::vector<std::size_t>> &covers_of() const {
    return dip_;
  } // direct predecessors (elements covering the node)
  const std::vector<std::vector<std::size_t>> &covered_by() const {
    return dis_;
  } // direct successors (elements the node covers)

  std::size_t maximum() const { return max_; }
  std::size_t minimum() const { return min_; }

  std::size_t join_idx(std::size_t a, std::size_t b) const;
  std::size_t meet_idx(std::size_t a, std::size_t b) const;

  // Interval [lo, hi] as node indices.
  std::vector<std::size_t> interval(std::size_t lo, std::size_t hi) const;

  // Transitive reduction of the order relation; equals hasse_edges() when the
  // mutation-edge construction is consistent (checked in tests).
  std::vector<std::pair<std::size_t, std::size_t>> transitive_reduction() const;

private:
  int n_ = 0;
  std::vector<SiltingSet> nodes_;
  std::vector<char> geq_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<std::vector<std::size_t>> dip_, dis_;
  std::size_t max_ = 0, min_ = 0;
};

// The explicit order isomorphism (Sym_{n+1}, <=) -> poset, built by length
// induction: rho(1) = minimum, rho(s_i) = {{i-1,i,i+1}} u {{k} : k != i},
// and each longer element is located either as the unique cover of rho(w)
// inside [rho(w), rho(w) v rho(w')] or as a join of two known images.
class Isomorphism {
public:
  static Isomorphism build(const SttiltPoset &poset);

  const SttiltPoset &poset() const { return *poset_; }
  std::size_t image_index(const weak_order::Permutation &w) const;
  const SiltingSet &image(const weak_order::Permutation &w) const;
  const weak_order::Permutation &label_of(std::size_t node) const;

private:
  const SttiltPoset *poset_ = nullptr;
  std::map<std::vector<int>, std::size_t> image_;   // one-line -> node index
  std::vector<weak_order::Permutation> label_;      // node index -> permutation
};

} // namespace tauweave::silting
