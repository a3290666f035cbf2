#include "tauweave/xi.hpp"

#include <algorithm>
#include <stdexcept>

namespace tauweave::xi {

XiIndex::XiIndex(std::vector<int> entries_, int rank_)
    : entries(std::move(entries_)), rank(rank_) {
  if (rank < 1)
    throw std::invalid_argument("XiIndex: rank must be >= 1");
  if (entries.empty() || entries.size() % 2 == 0)
    throw std::invalid_argument("XiIndex: cardinality must be odd");
  for (std::size_t k = 0; k < entries.size(); ++k) {
    if (entries[k] < 0 || entries[k] > rank + 1)
      throw std::invalid_argument("XiIndex: entry out of range");
    if (k > 0 && entries[k - 1] >= entries[k])
      throw std::invalid_argument("XiIndex: entries must strictly increase");
  }
  if (entries.size() == 1 && (entries[0] == 0 || entries[0] == rank + 1))
    throw std::invalid_argument("XiIndex: {0} and {n+1} are excluded");
}

int XiIndex::at(int pos) const {
  if (pos <= -2)
    return -2;
  if (pos == -1)
    return -1;
  const int top = static_cast<int>(entries.size()) - 1; // 2m
  if (pos <= top)
    return entries[pos];
  if (pos == top + 1)
    return rank + 2;
  return rank + 3;
}

XiIndex XiIndex::mirrored() const {
  std::vector<int> rev(entries.size());
  for (std::size_t k = 0; k < entries.size(); ++k)
    rev[k] = rank + 1 - entries[entries.size() - 1 - k];
  return XiIndex(std::move(rev), rank);
}

std::string XiIndex::to_string() const {
  std::string s = "{";
  for (std::size_t k = 0; k < entries.size(); ++k) {
    if (k)
      s += ",";
    s += std::to_string(entries[k]);
  }
  return s + "}";
}

std::vector<XiIndex> enumerate_xi(int n) {
  if (n < 1)
    throw std::invalid_argument("enumerate_xi: n must be >= 1");
  std::vector<XiIndex> out;
  std::vector<int> current;
  for (int size = 1; size <= n + 2; size += 2) {
    current.clear();
    // lexicographic subsets of {0..n+1} of the given size
    auto rec = [&](auto &&self, int next) -> void {
      if (static_cast<int>(current.size()) == size) {
        if (size == 1 && (current[0] == 0 || current[0] == n + 1))
          return;
        out.emplace_back(current, n);
        return;
      }
      for (int v = next; v <= n + 1; ++v) {
        current.push_back(v);
        self(self, v + 1);
        current.pop_back();
      }
    };
    rec(rec, 0);
  }
  return out;
}

TwoTermShape shape(const XiIndex &i) {
  TwoTermShape s;
  const int n1 = i.rank + 1;
  for (std::size_t pos = 0; pos < i.entries.size(); ++pos) {
    const int label = i.entries[pos];
    if (pos % 2 == 1)
      s.zero.push_back(label);
    else if (label != 0 && label != n1)
      s.minus_one.push_back(label);
  }
  for (std::size_t pos = 0; pos < i.entries.size(); pos += 2) {
    const int from = i.entries[pos];
    if (from == 0 || from == n1)
      continue;
    if (pos > 0)
      s.arrows.emplace_back(from, i.entries[pos - 1]);
    if (pos + 1 < i.entries.size())
      s.arrows.emplace_back(from, i.entries[pos + 1]);
  }
  return s;
}

GVector g_vector(const XiIndex &i) {
  GVector g(i.rank, 0);
  for (std::size_t pos = 0; pos < i.entries.size(); ++pos) {
    const int label = i.entries[pos];
    if (label < 1 || label > i.rank)
      continue;
    g[label - 1] += pos % 2 == 1 ? +1 : -1;
  }
  return g;
}

} // namespace tauweave::xi
