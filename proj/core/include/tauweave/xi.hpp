#pragma once

#include <compare>
#include <string>
#include <vector>

namespace tauweave::xi {

// Strictly increasing odd-length sequence i_0 < i_1 < ... < i_{2m} inside
// {0, ..., n+1}, excluding {0} and {n+1}. Labels one indecomposable two-term
// presilting complex: even positions sit in degree -1, odd positions in
// degree 0, and the labels 0 and n+1 stand for the zero projective.
struct XiIndex {
  std::vector<int> entries;
  int rank = 0; // n

  XiIndex() = default;
  XiIndex(std::vector<int> entries_, int rank_);

  int m() const { return (static_cast<int>(entries.size()) - 1) / 2; }

  // Sentinel-aware entry accessor:
  //   pos <= -2        -> -2
  //   pos == -1        -> -1
  //   0 <= pos <= 2m   -> entries[pos]
  //   pos == 2m+1      -> n+2
  //   pos >= 2m+2      -> n+3
  int at(int pos) const;

  // Relabeling k |-> n+1-k; reverses the sequence and keeps position parity.
  XiIndex mirrored() const;

  bool is_singleton() const { return entries.size() == 1; }

  auto operator<=>(const XiIndex &) const = default;

  std::string to_string() const;
};

// All of Xi, ordered by (cardinality, lex); |Xi| = 2^{n+1} - 2.
std::vector<XiIndex> enumerate_xi(int n);

// Degree placement of the labeled complex, zero projectives dropped.
// Arrows record the nonzero differential components (from degree -1 label to
// degree 0 label), each carried by the shortest-path map.
struct TwoTermShape {
  std::vector<int> minus_one; // labels in degree -1 (even positions, 0/n+1 dropped)
  std::vector<int> zero;      // labels in degree 0 (odd positions)
  std::vector<std::pair<int, int>> arrows; // (degree -1 label, degree 0 label)

  bool operator==(const TwoTermShape &) const = default;
};

TwoTermShape shape(const XiIndex &i);

using GVector = std::vector<int>;

// coords[k-1] = [k at an odd position] - [k at an even position].
GVector g_vector(const XiIndex &i);

} // namespace tauweave::xi
