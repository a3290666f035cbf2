#include "tauweave/string_modules.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

namespace tauweave::oracle {

namespace {

struct Letter {
  int arrow = 0;
  bool inverse = false;

  bool operator==(const Letter &) const = default;
  bool operator<(const Letter &o) const {
    return std::tie(arrow, inverse) < std::tie(o.arrow, o.inverse);
  }
};

int letter_start(const QuiverPresentation &p, const Letter &l) {
  return l.inverse ? p.arrows[l.arrow].dst : p.arrows[l.arrow].src;
}
int letter_end(const QuiverPresentation &p, const Letter &l) {
  return l.inverse ? p.arrows[l.arrow].src : p.arrows[l.arrow].dst;
}

std::vector<Letter> inverse_word(const std::vector<Letter> &w) {
  std::vector<Letter> out;
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    out.push_back({it->arrow, !it->inverse});
  return out;
}

} // namespace

std::vector<RightModule> enumerate_string_modules(const FiniteDimAlgebra &A,
                                                  std::size_t budget) {
  const auto &p = A.presentation();

  // monomial check: every relation is a single path
  for (const auto &rel : p.relations) {
    if (rel.terms.size() != 1)
      throw std::invalid_argument(
          "enumerate_string_modules: non-monomial presentation");
  }
  auto path_alive = [&](int a, int b) {
    // composable and nonzero in the quotient
    if (p.arrows[a].dst != p.arrows[b].src)
      return false;
    return !is_zero(A.path_class({a, b}));
  };

  // special biserial shape: <= 2 arrows in/out per vertex; per arrow at most
  // one composable successor/predecessor staying nonzero
  for (int v = 1; v <= p.vertex_count; ++v) {
    int in = 0, out = 0;
    for (const auto &arrow : p.arrows) {
      if (arrow.src == v)
        ++out;
      if (arrow.dst == v)
        ++in;
    }
    if (in > 2 || out > 2)
      throw std::invalid_argument(
          "enumerate_string_modules: not special biserial (vertex degree)");
  }
  for (std::size_t b = 0; b < p.arrows.size(); ++b) {
    int succ = 0, pred = 0;
    for (std::size_t g = 0; g < p.arrows.size(); ++g) {
      if (path_alive(static_cast<int>(b), static_cast<int>(g)))
        ++succ;
      if (path_alive(static_cast<int>(g), static_cast<int>(b)))
        ++pred;
    }
    if (succ > 1 || pred > 1)
      throw std::invalid_argument(
          "enumerate_string_modules: not special biserial (arrow branching)");
  }

  // growing w by l keeps a string iff the walk composes, never backtracks,
  // and every maximal run of same-direction letters stays alive as a path
  // (monomial ideal: a path dies iff it contains a dead subpath)
  auto extension_ok = [&](const std::vector<Letter> &w, const Letter &l) {
    const Letter &x = w.back();
    if (letter_end(p, x) != letter_start(p, l))
      return false;
    if (x.arrow == l.arrow && x.inverse != l.inverse)
      return false; // c c^{-1}
    std::vector<int> run{l.arrow};
    for (auto it = w.rbegin(); it != w.rend() && it->inverse == l.inverse; ++it)
      run.push_back(it->arrow);
    if (!l.inverse)
      std::reverse(run.begin(), run.end());
    if (run.size() >= 2 && is_zero(A.path_class(run)))
      return false;
    return true;
  };

  // enumerate every string word by rightward growth (both reading
  // directions are generated, so left extensions are not lost), then dedupe
  // by w ~ w^{-1}
  std::set<std::vector<Letter>> canonical;
  std::vector<std::vector<Letter>> strings;
  auto collect = [&](const std::vector<Letter> &w) {
    const auto key = std::min(w, inverse_word(w));
    if (canonical.insert(key).second)
      strings.push_back(key);
  };

  std::vector<std::vector<Letter>> frontier;
  for (std::size_t a = 0; a < p.arrows.size(); ++a)
    for (bool inv : {false, true}) {
      std::vector<Letter> w{{static_cast<int>(a), inv}};
      collect(w);
      frontier.push_back(w);
    }
  std::size_t words_seen = frontier.size();
  while (!frontier.empty()) {
    std::vector<std::vector<Letter>> next;
    for (const auto &w : frontier)
      for (std::size_t a = 0; a < p.arrows.size(); ++a)
        for (bool inv : {false, true}) {
          Letter l{static_cast<int>(a), inv};
          if (!extension_ok(w, l))
            continue;
          auto grown = w;
          grown.push_back(l);
          collect(grown);
          next.push_back(std::move(grown));
        }
    words_seen += next.size();
    if (words_seen > budget)
      throw std::runtime_error("enumerate_string_modules: budget exceeded");
    frontier = std::move(next);
  }

  // build string modules: basis point z_0..z_k along the walk
  std::vector<RightModule> modules;
  for (int v = 1; v <= p.vertex_count; ++v) {
    // trivial string: simple module at v
    std::vector<int> dims(p.vertex_count, 0);
    dims[v - 1] = 1;
    std::vector<QMat> action;
    for (const auto &arrow : p.arrows)
      action.emplace_back(dims[arrow.dst - 1], dims[arrow.src - 1]);
    modules.emplace_back(A, std::move(dims), std::move(action));
  }
  for (const auto &w : strings) {
    std::vector<int> vertices{letter_start(p, w.front())};
    for (const auto &l : w)
      vertices.push_back(letter_end(p, l));
    const std::size_t points = vertices.size();

    std::vector<int> dims(p.vertex_count, 0);
    std::vector<std::pair<int, int>> coord(points); // (vertex, index)
    for (std::size_t z = 0; z < points; ++z) {
      coord[z] = {vertices[z], dims[vertices[z] - 1]};
      ++dims[vertices[z] - 1];
    }
    std::vector<QMat> action;
    for (std::size_t a = 0; a < p.arrows.size(); ++a) {
      const auto &arrow = p.arrows[a];
      action.emplace_back(dims[arrow.dst - 1], dims[arrow.src - 1]);
    }
    for (std::size_t step = 0; step < w.size(); ++step) {
      const Letter &l = w[step];
      // direct letter: z_step . arrow = z_{step+1}; inverse: z_{step+1} . arrow = z_step
      const std::size_t from = l.inverse ? step + 1 : step;
      const std::size_t to = l.inverse ? step : step + 1;
      action[l.arrow].at(coord[to].second, coord[from].second) = 1;
    }
    RightModule M(A, dims, std::move(action));
    if (!M.respects_relations())
      throw std::logic_error("string module violates the relations");
    modules.push_back(std::move(M));
  }

  for (const auto &M : modules)
    if (!M.has_local_endomorphism_ring())
      throw std::logic_error("string module with non-local endomorphisms");
  return modules;
}

bool BruteForcePoset::is_n_regular(int n) const {
  for (std::size_t k = 0; k < nodes.size(); ++k)
    if (dip[k] + dis[k] != n)
      return false;
  return true;
}

BruteForcePoset sttilt_from_pool(const FiniteDimAlgebra &A,
                                 const std::vector<RightModule> &pool) {
  const int n = A.vertex_count();
  BruteForcePoset poset;

  // tau-rigid candidates: Hom(S(Mi), S(Mj)[1]) = 0 both ways, all pairs
  std::vector<ConcreteTwoTerm> s_of;
  for (const auto &M : pool)
    s_of.push_back(minimal_presentation(A, M));
  const std::size_t P = pool.size();
  std::vector<char> pair_ok(P * P);
  for (std::size_t i = 0; i < P; ++i)
    for (std::size_t j = 0; j < P; ++j)
      pair_ok[i * P + j] = homotopy_vanishes(A, s_of[i], s_of[j]) ? 1 : 0;

  // subsets of the pool + projective labels
  std::vector<std::size_t> chosen;
  auto try_node = [&](const std::vector<std::size_t> &summands) {
    // supports
    std::vector<char> occupied(n + 1, 0);
    for (auto s : summands)
      for (int v : pool[s].support())
        occupied[v] = 1;
    // P = all projectives with Hom(P, M) = 0, i.e. labels outside supp(M)
    std::vector<int> proj;
    for (int v = 1; v <= n; ++v)
      if (!occupied[v])
        proj.push_back(v);
    if (summands.size() + proj.size() != static_cast<std::size_t>(n))
      return;
    BruteForcePoset::Node node;
    node.summands = summands;
    node.shifted_projectives = proj;
    poset.nodes.push_back(std::move(node));
  };

  auto rec = [&](auto &&self, std::size_t next) -> void {
    try_node(chosen);
    for (std::size_t k = next; k < P; ++k) {
      bool ok = pair_ok[k * P + k];
      for (auto c : chosen)
        ok = ok && pair_ok[c * P + k] && pair_ok[k * P + c];
      if (!ok)
        continue;
      chosen.push_back(k);
      self(self, k + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);

  // maximality filter is implicit: |M| + |P| = n forces support tau-tilting.
  // order matrix via the full pair complexes
  const std::size_t N = poset.nodes.size();
  std::vector<ConcreteTwoTerm> complexes;
  for (const auto &node : poset.nodes) {
    PairParts parts;
    for (auto s : node.summands)
      parts.summands.push_back(&pool[s]);
    parts.shifted_projectives = node.shifted_projectives;
    complexes.push_back(validated_pair_complex(A, parts));
  }
  poset.geq.assign(N * N, 0);
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b)
      poset.geq[a * N + b] =
          support_tau_tilting_geq(A, complexes[a], complexes[b]) ? 1 : 0;

  // covers for regularity readout
  poset.dip.assign(N, 0);
  poset.dis.assign(N, 0);
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b) {
      if (a == b || !poset.geq[a * N + b] || poset.geq[b * N + a])
        continue;
      bool cover = true;
      for (std::size_t c = 0; c < N && cover; ++c)
        if (c != a && c != b && poset.geq[a * N + c] && !poset.geq[c * N + a] &&
            poset.geq[c * N + b] && !poset.geq[b * N + c])
          cover = false;
      if (cover) {
        ++poset.dis[a];
        ++poset.dip[b];
      }
    }
  return poset;
}

} // namespace tauweave::oracle
