#include "tauweave/weak_order.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace tauweave::weak_order {

namespace {

std::uint64_t factorial(int k) {
  std::uint64_t f = 1;
  for (int i = 2; i <= k; ++i)
    f *= i;
  return f;
}

} // namespace

WeakOrderLattice WeakOrderLattice::build(int n, std::uint64_t node_budget) {
  if (n < 1)
    throw std::invalid_argument("WeakOrderLattice: n must be >= 1");
  if (factorial(n + 1) > node_budget)
    throw std::runtime_error("WeakOrderLattice: enumeration budget exceeded");

  WeakOrderLattice lat;
  lat.n_ = n;

  std::vector<int> img(n + 1);
  for (int a = 0; a <= n; ++a)
    img[a] = a + 1;
  std::vector<std::pair<long, std::vector<int>>> keyed;
  do {
    Permutation w(img);
    keyed.emplace_back(inversions(w), img);
  } while (std::next_permutation(img.begin(), img.end()));
  std::sort(keyed.begin(), keyed.end());
  lat.nodes_.reserve(keyed.size());
  for (auto &[len, one_line] : keyed)
    lat.nodes_.emplace_back(one_line);

  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t k = 0; k < lat.nodes_.size(); ++k)
    index[lat.nodes_[k].images()] = k;

  const std::size_t N = lat.nodes_.size();
  lat.up_.assign(N, {});
  lat.down_.assign(N, {});
  for (std::size_t k = 0; k < N; ++k) {
    for (int i = 1; i <= n; ++i) {
      auto [next, delta] = left_multiply(i, lat.nodes_[k]);
      if (delta == +1) {
        const std::size_t j = index.at(next.images());
        lat.edges_.emplace_back(k, j);
        lat.up_[k].push_back(j);
        lat.down_[j].push_back(k);
      }
    }
  }
  std::sort(lat.edges_.begin(), lat.edges_.end());

  const std::size_t words = (N + 63) / 64;
  lat.upset_.assign(N, std::vector<std::uint64_t>(words, 0));
  lat.downset_.assign(N, std::vector<std::uint64_t>(words, 0));
  // nodes are sorted by length, so a reverse sweep closes up-sets
  for (std::size_t k = N; k-- > 0;) {
    lat.upset_[k][k >> 6] |= std::uint64_t(1) << (k & 63);
    for (std::size_t j : lat.up_[k])
      for (std::size_t wd = 0; wd < words; ++wd)
        lat.upset_[k][wd] |= lat.upset_[j][wd];
  }
  for (std::size_t k = 0; k < N; ++k) {
    lat.downset_[k][k >> 6] |= std::uint64_t(1) << (k & 63);
    for (std::size_t j : lat.down_[k])
      for (std::size_t wd = 0; wd < words; ++wd)
        lat.downset_[k][wd] |= lat.downset_[j][wd];
  }
  return lat;
}

std::size_t WeakOrderLattice::index_of(const Permutation &w) const {
  const long len = inversions(w);
  auto cmp = [this](std::size_t idx, std::pair<long, const std::vector<int> *> key) {
    const auto &node = nodes_[idx];
    const long nl = inversions(node);
    if (nl != key.first)
      return nl < key.first;
    return node.images() < *key.second;
  };
  // nodes sorted by (length, lex): binary search
  std::size_t lo = 0, hi = nodes_.size();
  std::pair<long, const std::vector<int> *> key{len, &w.images()};
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (cmp(mid, key))
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo == nodes_.size() || nodes_[lo].images() != w.images())
    throw std::out_of_range("WeakOrderLattice::index_of: not a node");
  return lo;
}

bool WeakOrderLattice::leq_idx(std::size_t a, std::size_t b) const {
  return bit(upset_[a], b);
}

bool WeakOrderLattice::leq_bfs(std::size_t a, std::size_t b) const {
  if (a == b)
    return true;
  std::deque<std::size_t> queue{a};
  std::vector<bool> seen(nodes_.size(), false);
  seen[a] = true;
  while (!queue.empty()) {
    std::size_t cur = queue.front();
    queue.pop_front();
    for (std::size_t j : up_[cur]) {
      if (j == b)
        return true;
      if (!seen[j]) {
        seen[j] = true;
        queue.push_back(j);
      }
    }
  }
  return false;
}

std::size_t WeakOrderLattice::join_idx(const std::vector<std::size_t> &elems) const {
  if (elems.empty())
    throw std::invalid_argument("join: empty set");
  const std::size_t words = upset_[0].size();
  std::vector<std::uint64_t> common(words, ~std::uint64_t(0));
  for (std::size_t e : elems)
    for (std::size_t wd = 0; wd < words; ++wd)
      common[wd] &= upset_[e][wd];
  // minimum of the common upper set; nodes are sorted by length, so the first
  // set bit is a minimal element, and lattice-ness makes it the minimum
  for (std::size_t k = 0; k < nodes_.size(); ++k)
    if (bit(common, k)) {
      for (std::size_t m = k + 1; m < nodes_.size(); ++m)
        if (bit(common, m) && !leq_idx(k, m))
          throw std::logic_error("join: upper set has no minimum");
      return k;
    }
  throw std::logic_error("join: empty upper set in a bounded lattice");
}

std::size_t WeakOrderLattice::meet_idx(const std::vector<std::size_t> &elems) const {
  if (elems.empty())
    throw std::invalid_argument("meet: empty set");
  const std::size_t words = downset_[0].size();
  std::vector<std::uint64_t> common(words, ~std::uint64_t(0));
  for (std::size_t e : elems)
    for (std::size_t wd = 0; wd < words; ++wd)
      common[wd] &= downset_[e][wd];
  for (std::size_t k = nodes_.size(); k-- > 0;)
    if (bit(common, k)) {
      for (std::size_t m = k; m-- > 0;)
        if (bit(common, m) && !leq_idx(m, k))
          throw std::logic_error("meet: lower set has no maximum");
      return k;
    }
  throw std::logic_error("meet: empty lower set in a bounded lattice");
}

Permutation WeakOrderLattice::join(const std::vector<Permutation> &elems) const {
  std::vector<std::size_t> idx;
  idx.reserve(elems.size());
  for (const auto &w : elems)
    idx.push_back(index_of(w));
  return nodes_[join_idx(idx)];
}

Permutation WeakOrderLattice::meet(const std::vector<Permutation> &elems) const {
  std::vector<std::size_t> idx;
  idx.reserve(elems.size());
  for (const auto &w : elems)
    idx.push_back(index_of(w));
  return nodes_[meet_idx(idx)];
}

std::vector<Permutation> parabolic_subgroup(int order, const std::set<int> &J) {
  std::vector<Permutation> elems{Permutation::identity(order)};
  std::set<std::vector<int>> seen{elems[0].images()};
  for (std::size_t head = 0; head < elems.size(); ++head) {
    const auto cur = elems[head];
    for (int j : J) {
      auto next = left_multiply(j, cur).first;
      if (seen.insert(next.images()).second)
        elems.push_back(std::move(next));
    }
  }
  return elems;
}

Permutation parabolic_longest(int order, const std::set<int> &J) {
  if (J.empty())
    throw std::invalid_argument("parabolic_longest: empty J");
  auto subgroup = parabolic_subgroup(order, J);
  std::size_t best = 0;
  long best_len = -1;
  for (std::size_t k = 0; k < subgroup.size(); ++k) {
    const long len = inversions(subgroup[k]);
    if (len > best_len) {
      best_len = len;
      best = k;
    }
  }
  return subgroup[best];
}

bool parabolic_interval_check(const WeakOrderLattice &lat, const std::set<int> &J) {
  const auto w0j = parabolic_longest(lat.order(), J);
  auto subgroup = parabolic_subgroup(lat.order(), J);
  std::set<std::vector<int>> subgroup_set;
  for (const auto &w : subgroup)
    subgroup_set.insert(w.images());
  const std::size_t top = lat.index_of(w0j);
  std::size_t interval_size = 0;
  for (std::size_t k = 0; k < lat.size(); ++k) {
    if (!lat.leq_idx(k, top))
      continue;
    ++interval_size;
    if (!subgroup_set.count(lat.node(k).images()))
      return false;
  }
  return interval_size == subgroup_set.size();
}

} // namespace tauweave::weak_order
