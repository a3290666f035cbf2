#include "tauweave/silting_poset.hpp"

#include <algorithm>
#include <stdexcept>

namespace tauweave::silting {

using xi::CompatibilityTable;
using xi::XiIndex;
using weak_order::Permutation;

namespace {

std::uint64_t factorial(int k) {
  std::uint64_t f = 1;
  for (int i = 2; i <= k; ++i)
    f *= i;
  return f;
}

std::pair<std::size_t, std::vector<int>> member_key(const XiIndex &x) {
  return {x.entries.size(), x.entries};
}

} // namespace

bool SiltingSet::operator<(const SiltingSet &other) const {
  std::vector<std::pair<std::size_t, std::vector<int>>> a, b;
  for (const auto &m : members)
    a.push_back(member_key(m));
  for (const auto &m : other.members)
    b.push_back(member_key(m));
  return a < b;
}

std::string SiltingSet::to_string() const {
  std::string s = "[";
  for (std::size_t k = 0; k < members.size(); ++k) {
    if (k)
      s += " ";
    s += members[k].to_string();
  }
  return s + "]";
}

PairReadout pair_readout(const SiltingSet &T) {
  PairReadout out;
  std::vector<bool> shifted(T.rank + 1, false);
  for (const auto &m : T.members) {
    if (m.is_singleton()) {
      out.shifted_projectives.push_back(m.entries[0]);
      shifted[m.entries[0]] = true;
    } else {
      out.module_summands.push_back(m);
    }
  }
  std::sort(out.shifted_projectives.begin(), out.shifted_projectives.end());
  for (int k = 1; k <= T.rank; ++k)
    if (!shifted[k])
      out.support.push_back(k);
  return out;
}

std::vector<SiltingSet> enumerate_silting(const CompatibilityTable &table,
                                          std::uint64_t node_budget) {
  const int n = table.n();
  if (factorial(n + 1) > node_budget)
    throw std::runtime_error("enumerate_silting: node budget exceeded");
  const auto &xi = table.xi();
  const std::size_t V = xi.size();

  std::vector<std::vector<char>> adj(V, std::vector<char>(V, 0));
  for (std::size_t a = 0; a < V; ++a)
    for (std::size_t b = 0; b < V; ++b)
      adj[a][b] = (a != b && table.compatible_at(a, b)) ? 1 : 0;

  std::vector<SiltingSet> cliques;
  std::vector<std::size_t> R;

  // Bron-Kerbosch with pivoting.
  auto expand = [&](auto &&self, std::vector<std::size_t> P,
                    std::vector<std::size_t> X) -> void {
    if (P.empty() && X.empty()) {
      if (R.size() != static_cast<std::size_t>(n))
        throw std::runtime_error(
            "enumerate_silting: maximal clique of size " +
            std::to_string(R.size()) + " found (criterion bug)");
      SiltingSet set;
      set.rank = n;
      for (auto v : R)
        set.members.push_back(xi[v]);
      std::sort(set.members.begin(), set.members.end(),
                [](const XiIndex &a, const XiIndex &b) {
                  return member_key(a) < member_key(b);
                });
      cliques.push_back(std::move(set));
      return;
    }
    std::size_t pivot = 0, best = 0;
    bool have = false;
    for (const auto &cand : {P, X})
      for (auto u : cand) {
        std::size_t deg = 0;
        for (auto v : P)
          if (adj[u][v])
            ++deg;
        if (!have || deg > best) {
          have = true;
          best = deg;
          pivot = u;
        }
      }
    std::vector<std::size_t> ext;
    for (auto v : P)
      if (!adj[pivot][v])
        ext.push_back(v);
    for (auto v : ext) {
      std::vector<std::size_t> P2, X2;
      for (auto u : P)
        if (adj[v][u])
          P2.push_back(u);
      for (auto u : X)
        if (adj[v][u])
          X2.push_back(u);
      R.push_back(v);
      self(self, std::move(P2), std::move(X2));
      R.pop_back();
      P.erase(std::find(P.begin(), P.end(), v));
      X.push_back(v);
    }
  };

  std::vector<std::size_t> all(V);
  for (std::size_t v = 0; v < V; ++v)
    all[v] = v;
  expand(expand, std::move(all), {});

  std::sort(cliques.begin(), cliques.end());
  return cliques;
}

bool silting_geq(const CompatibilityTable &table, const SiltingSet &T,
                 const SiltingSet &T_prime) {
  if (T.rank != T_prime.rank)
    throw std::invalid_argument("silting_geq: rank mismatch");
  for (const auto &a : T.members)
    for (const auto &b : T_prime.members)
      if (!table.hom_vanishes_at(table.index_of(a), table.index_of(b)))
        return false;
  return true;
}

SttiltPoset SttiltPoset::build(const CompatibilityTable &table,
                               std::uint64_t node_budget) {
  SttiltPoset poset;
  poset.n_ = table.n();
  poset.nodes_ = enumerate_silting(table, node_budget);
  const std::size_t N = poset.nodes_.size();

  // order matrix via the pairwise hom test, memoized through the table
  std::vector<std::vector<std::size_t>> member_ids(N);
  for (std::size_t k = 0; k < N; ++k)
    for (const auto &m : poset.nodes_[k].members)
      member_ids[k].push_back(table.index_of(m));

  poset.geq_.assign(N * N, 0);
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b) {
      bool ok = true;
      for (auto x : member_ids[a]) {
        for (auto y : member_ids[b])
          if (!table.hom_vanishes_at(x, y)) {
            ok = false;
            break;
          }
        if (!ok)
          break;
      }
      poset.geq_[a * N + b] = ok ? 1 : 0;
    }

  // mutation edges: nodes sharing exactly n-1 members, oriented by the order
  poset.dip_.assign(N, {});
  poset.dis_.assign(N, {});
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = a + 1; b < N; ++b) {
      std::size_t shared = 0;
      for (auto x : member_ids[a])
        for (auto y : member_ids[b])
          if (x == y)
            ++shared;
      if (shared + 1 != static_cast<std::size_t>(poset.n_))
        continue;
      const bool ab = poset.geq(a, b), ba = poset.geq(b, a);
      if (ab == ba)
        throw std::runtime_error(
            "SttiltPoset: mutation pair is not comparable exactly one way");
      const std::size_t big = ab ? a : b, small = ab ? b : a;
      poset.edges_.emplace_back(big, small);
      poset.dip_[small].push_back(big);
      poset.dis_[big].push_back(small);
    }
  std::sort(poset.edges_.begin(), poset.edges_.end());

  for (std::size_t k = 0; k < N; ++k) {
    if (poset.dip_[k].empty())
      poset.max_ = k;
    if (poset.dis_[k].empty())
      poset.min_ = k;
  }
  return poset;
}

std::size_t SttiltPoset::index_of(const SiltingSet &T) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), T);
  if (it == nodes_.end() || !(*it == T))
    throw std::out_of_range("SttiltPoset::index_of");
  return static_cast<std::size_t>(it - nodes_.begin());
}

std::size_t SttiltPoset::join_idx(std::size_t a, std::size_t b) const {
  const std::size_t N = nodes_.size();
  std::size_t best = N;
  for (std::size_t k = 0; k < N; ++k) {
    if (!(geq(k, a) && geq(k, b)))
      continue;
    if (best == N || geq(best, k))
      best = k;
  }
  if (best == N)
    throw std::logic_error("join_idx: no upper bound");
  for (std::size_t k = 0; k < N; ++k)
    if (geq(k, a) && geq(k, b) && !geq(k, best))
      throw std::logic_error("join_idx: upper set has no minimum");
  return best;
}

std::size_t SttiltPoset::meet_idx(std::size_t a, std::size_t b) const {
  const std::size_t N = nodes_.size();
  std::size_t best = N;
  for (std::size_t k = 0; k < N; ++k) {
    if (!(geq(a, k) && geq(b, k)))
      continue;
    if (best == N || geq(k, best))
      best = k;
  }
  if (best == N)
    throw std::logic_error("meet_idx: no lower bound");
  for (std::size_t k = 0; k < N; ++k)
    if (geq(a, k) && geq(b, k) && !geq(best, k))
      throw std::logic_error("meet_idx: lower set has no maximum");
  return best;
}

std::vector<std::size_t> SttiltPoset::interval(std::size_t lo,
                                               std::size_t hi) const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < nodes_.size(); ++k)
    if (geq(hi, k) && geq(k, lo))
      out.push_back(k);
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>>
SttiltPoset::transitive_reduction() const {
  const std::size_t N = nodes_.size();
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b) {
      if (a == b || !geq(a, b))
        continue;
      bool direct = true;
      for (std::size_t c = 0; c < N && direct; ++c)
        if (c != a && c != b && geq(a, c) && geq(c, b))
          direct = false;
      if (direct)
        covers.emplace_back(a, b);
    }
  std::sort(covers.begin(), covers.end());
  return covers;
}

Isomorphism Isomorphism::build(const SttiltPoset &poset) {
  Isomorphism iso;
  iso.poset_ = &poset;
  const int n = poset.n();
  const int order = n + 1;
  const std::size_t N = poset.size();
  iso.label_.assign(N, Permutation::identity(order));
  std::vector<bool> assigned(N, false);

  auto assign = [&](const Permutation &w, std::size_t node) {
    auto [it, fresh] = iso.image_.try_emplace(w.images(), node);
    if (!fresh) {
      if (it->second != node)
        throw std::runtime_error("Isomorphism: image not well-defined at " +
                                 w.to_string());
      return;
    }
    if (assigned[node])
      throw std::runtime_error("Isomorphism: two permutations mapped to node " +
                               poset.node(node).to_string());
    assigned[node] = true;
    iso.label_[node] = w;
  };

  assign(Permutation::identity(order), poset.minimum());

  // atoms: rho(s_i) = {{i-1,i,i+1}} u {{k} : k != i}
  for (int i = 1; i <= n; ++i) {
    SiltingSet atom;
    atom.rank = n;
    atom.members.emplace_back(std::vector<int>{i - 1, i, i + 1}, n);
    for (int k = 1; k <= n; ++k)
      if (k != i)
        atom.members.emplace_back(std::vector<int>{k}, n);
    std::sort(atom.members.begin(), atom.members.end(),
              [](const XiIndex &a, const XiIndex &b) {
                return std::make_pair(a.entries.size(), a.entries) <
                       std::make_pair(b.entries.size(), b.entries);
              });
    assign(Permutation::adjacent_transposition(order, i),
           poset.index_of(atom));
  }

  // group permutations by length and extend upward
  std::vector<std::vector<Permutation>> by_length;
  {
    std::vector<int> img(order);
    for (int a = 0; a < order; ++a)
      img[a] = a + 1;
    std::vector<Permutation> all;
    do
      all.emplace_back(img);
    while (std::next_permutation(img.begin(), img.end()));
    for (const auto &w : all) {
      const std::size_t len = static_cast<std::size_t>(inversions(w));
      if (by_length.size() <= len)
        by_length.resize(len + 1);
      by_length[len].push_back(w);
    }
  }

  for (std::size_t len = 2; len < by_length.size(); ++len) {
    for (const auto &u : by_length[len]) {
      // every descent j gives an extension step; all must agree
      for (int jgen = 1; jgen <= n; ++jgen) {
        auto [w, delta] = weak_order::left_multiply(jgen, u);
        if (delta != -1)
          continue;
        // u = s_j . w with l(w) = len - 1
        const auto word = weak_order::reduced_word(w);
        const int a = word.front();
        const auto v = weak_order::left_multiply(a, w).first; // length len-2
        const auto w_prime = weak_order::left_multiply(jgen, v).first;
        const long lw_prime = weak_order::inversions(w_prime);

        const std::size_t node_w = iso.image_.at(w.images());
        std::size_t node_u;
        if (lw_prime == static_cast<long>(len) - 1) {
          // unique cover of rho(w) inside [rho(w), rho(w) v rho(w')]
          const std::size_t node_wp = iso.image_.at(w_prime.images());
          const std::size_t top = poset.join_idx(node_w, node_wp);
          std::size_t found = N;
          for (std::size_t cand : poset.covers_of()[node_w])
            if (poset.geq(top, cand)) {
              if (found != N)
                throw std::runtime_error(
                    "Isomorphism: extension step found two candidates");
              found = cand;
            }
          if (found == N)
            throw std::runtime_error(
                "Isomorphism: extension step found no candidate");
          node_u = found;
        } else {
          // l(w') = len - 3: u = (s_a w') v (s_j w'), both of length len-2+1
          const auto left = weak_order::left_multiply(a, w_prime).first;
          const std::size_t node_left = iso.image_.at(left.images());
          const std::size_t node_v = iso.image_.at(v.images());
          node_u = poset.join_idx(node_left, node_v);
        }
        assign(u, node_u);
      }
    }
  }

  for (std::size_t k = 0; k < N; ++k)
    if (!assigned[k])
      throw std::runtime_error("Isomorphism: poset node left unlabeled");
  return iso;
}

std::size_t Isomorphism::image_index(const Permutation &w) const {
  return image_.at(w.images());
}

const SiltingSet &Isomorphism::image(const Permutation &w) const {
  return poset_->node(image_index(w));
}

const Permutation &Isomorphism::label_of(std::size_t node) const {
  return label_[node];
}

} // namespace tauweave::silting
