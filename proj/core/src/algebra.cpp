#include "tauweave/algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace tauweave::oracle {

namespace {

struct PathGen {
  // all composable arrow paths of a fixed length, grouped by (src, dst)
  std::map<std::pair<int, int>, std::vector<std::vector<int>>> by_block;
};

PathGen paths_of_length(const QuiverPresentation &p, int length) {
  PathGen out;
  std::vector<std::vector<int>> cur; // paths, represented by arrow lists
  std::vector<int> ends;
  for (int v = 1; v <= p.vertex_count; ++v) {
    // grow from each start vertex
    std::vector<std::pair<std::vector<int>, int>> frontier{{{}, v}};
    for (int step = 0; step < length; ++step) {
      std::vector<std::pair<std::vector<int>, int>> next;
      for (auto &[path, end] : frontier)
        for (std::size_t a = 0; a < p.arrows.size(); ++a)
          if (p.arrows[a].src == end) {
            auto grown = path;
            grown.push_back(static_cast<int>(a));
            next.emplace_back(std::move(grown), p.arrows[a].dst);
          }
      frontier = std::move(next);
    }
    for (auto &[path, end] : frontier)
      out.by_block[{v, end}].push_back(path);
  }
  return out;
}

} // namespace

FiniteDimAlgebra FiniteDimAlgebra::build(const QuiverPresentation &raw,
                                         int degree_cap) {
  if (degree_cap < 2)
    throw std::invalid_argument("build_algebra: degree_cap must be >= 2");
  FiniteDimAlgebra A;
  A.pres_ = raw.canonicalized();
  const auto &p = A.pres_;
  const int n = p.vertex_count;

  // degree 0: idempotents
  A.idempotent_.resize(n);
  for (int v = 1; v <= n; ++v) {
    A.idempotent_[v - 1] = A.basis_.size();
    A.basis_.push_back({0, v, v, {}});
  }
  A.dim_by_degree_.push_back(n);

  // relations grouped by (block, length)
  struct RelVec {
    int src, dst, length;
    std::vector<PathTerm> terms;
  };
  std::vector<RelVec> rels;
  for (const auto &rel : p.relations) {
    RelVec rv;
    rv.length = static_cast<int>(rel.terms.front().arrows.size());
    int cur = p.arrows[rel.terms.front().arrows.front()].src;
    rv.src = cur;
    for (int a : rel.terms.front().arrows)
      cur = p.arrows[a].dst;
    rv.dst = cur;
    rv.terms = rel.terms;
    rels.push_back(std::move(rv));
  }

  // degree >= 1: survivors of the ideal slice inside each path block
  for (int d = 1; d <= degree_cap; ++d) {
    auto gen = paths_of_length(p, d);
    int degree_dim = 0;
    for (auto &[block, paths] : gen.by_block) {
      if (paths.empty())
        continue;
      std::sort(paths.begin(), paths.end());
      Slice slice;
      slice.paths = paths;
      for (std::size_t k = 0; k < paths.size(); ++k)
        slice.path_index[paths[k]] = k;
      slice.ideal = RowSpace(paths.size());
      // slice of the two-sided ideal: u . rel . v with matching degrees
      for (const auto &rv : rels) {
        if (rv.length > d)
          continue;
        for (int a = 0; a + rv.length <= d; ++a) {
          const int b = d - rv.length - a;
          auto lefts = paths_of_length(p, a).by_block;
          auto rights = paths_of_length(p, b).by_block;
          for (auto &[lb, lpaths] : lefts) {
            if (lb.second != rv.src)
              continue;
            for (auto &[rb, rpaths] : rights) {
              if (rb.first != rv.dst)
                continue;
              if (lb.first != block.first || rb.second != block.second)
                continue;
              for (const auto &lp : lpaths)
                for (const auto &rp : rpaths) {
                  QVec vec(slice.paths.size(), Rational(0));
                  for (const auto &term : rv.terms) {
                    std::vector<int> full = lp;
                    full.insert(full.end(), term.arrows.begin(),
                                term.arrows.end());
                    full.insert(full.end(), rp.begin(), rp.end());
                    vec[slice.path_index.at(full)] += term.coef;
                  }
                  slice.ideal.insert(vec);
                }
            }
          }
        }
      }
      // survivors: paths whose coordinate is not a pivot
      std::vector<bool> is_pivot(slice.paths.size(), false);
      for (auto pcol : slice.ideal.pivots())
        is_pivot[pcol] = true;
      for (std::size_t k = 0; k < slice.paths.size(); ++k)
        if (!is_pivot[k])
          slice.survivors.push_back(k);
      for (auto k : slice.survivors) {
        slice.class_of_survivor.push_back(A.basis_.size());
        A.basis_.push_back({d, block.first, block.second, slice.paths[k]});
        ++degree_dim;
      }
      A.slices_[{d, block.first, block.second}] = std::move(slice);
    }
    if (degree_dim == 0)
      break; // graded ideal: once a degree dies, all higher degrees die
    A.dim_by_degree_.push_back(degree_dim);
    if (d == degree_cap)
      throw std::runtime_error(
          "build_algebra: degree cap reached with nonzero component "
          "(presentation rejected as non-nilpotent)");
  }

  // arrow classes
  A.arrow_class_.resize(p.arrows.size());
  for (std::size_t a = 0; a < p.arrows.size(); ++a) {
    QVec cls = A.path_class({static_cast<int>(a)});
    std::size_t idx = A.dim();
    for (std::size_t k = 0; k < A.dim(); ++k)
      if (cls[k] != 0) {
        if (cls[k] != 1 || idx != A.dim())
          throw std::logic_error("arrow class is not a plain basis class");
        idx = k;
      }
    if (idx == A.dim())
      throw std::runtime_error("build_algebra: an arrow dies in the quotient "
                               "(ideal not admissible)");
    A.arrow_class_[a] = idx;
  }

  // multiplication table
  const std::size_t D = A.dim();
  A.table_.assign(D * D, QVec(D, Rational(0)));
  for (std::size_t x = 0; x < D; ++x)
    for (std::size_t y = 0; y < D; ++y) {
      const auto &bx = A.basis_[x];
      const auto &by = A.basis_[y];
      if (bx.dst != by.src)
        continue;
      std::vector<int> cat = bx.rep_path;
      cat.insert(cat.end(), by.rep_path.begin(), by.rep_path.end());
      if (cat.empty()) {
        A.table_[x * D + y][A.idempotent_[bx.src - 1]] = 1;
      } else {
        A.table_[x * D + y] = A.path_class(cat);
      }
    }

  // blocks
  A.blocks_.assign(static_cast<std::size_t>(n) * n, {});
  for (std::size_t k = 0; k < D; ++k)
    A.blocks_[(A.basis_[k].src - 1) * n + (A.basis_[k].dst - 1)].push_back(k);

  return A;
}

QVec FiniteDimAlgebra::reduce_in_slice(const Slice &slice,
                                       QVec path_coords) const {
  QVec reduced = slice.ideal.reduce(path_coords);
  QVec out(dim(), Rational(0));
  for (std::size_t si = 0; si < slice.survivors.size(); ++si)
    out[slice.class_of_survivor[si]] = reduced[slice.survivors[si]];
  return out;
}

QVec FiniteDimAlgebra::path_class(const std::vector<int> &arrow_path) const {
  QVec zero(dim(), Rational(0));
  if (arrow_path.empty())
    throw std::invalid_argument("path_class: empty path (use idempotent)");
  int cur = pres_.arrows[arrow_path.front()].src;
  const int src = cur;
  for (int a : arrow_path) {
    if (pres_.arrows[a].src != cur)
      return zero;
    cur = pres_.arrows[a].dst;
  }
  const int d = static_cast<int>(arrow_path.size());
  auto it = slices_.find({d, src, cur});
  if (it == slices_.end())
    return zero;
  const Slice &slice = it->second;
  auto pit = slice.path_index.find(arrow_path);
  if (pit == slice.path_index.end())
    return zero;
  QVec coords(slice.paths.size(), Rational(0));
  coords[pit->second] = 1;
  return reduce_in_slice(slice, std::move(coords));
}

QVec FiniteDimAlgebra::unit(std::size_t k) const {
  QVec v(dim(), Rational(0));
  v[k] = 1;
  return v;
}

QVec FiniteDimAlgebra::mult_vec(const QVec &x, const QVec &y) const {
  QVec out(dim(), Rational(0));
  for (std::size_t a = 0; a < dim(); ++a) {
    if (x[a] == 0)
      continue;
    for (std::size_t b = 0; b < dim(); ++b) {
      if (y[b] == 0)
        continue;
      add_scaled(out, mult(a, b), x[a] * y[b]);
    }
  }
  return out;
}

QVec FiniteDimAlgebra::shortest_path_class(int from, int to) const {
  if (from == to)
    return unit(idempotent_[from - 1]);
  std::vector<int> arrows;
  const int step = from < to ? 1 : -1;
  for (int v = from; v != to; v += step) {
    int found = -1;
    for (std::size_t a = 0; a < pres_.arrows.size(); ++a)
      if (pres_.arrows[a].src == v && pres_.arrows[a].dst == v + step) {
        if (found != -1)
          throw std::runtime_error("shortest_path_class: multiple arrows " +
                                   std::to_string(v) + " -> " +
                                   std::to_string(v + step));
        found = static_cast<int>(a);
      }
    if (found == -1)
      throw std::runtime_error("shortest_path_class: missing arrow " +
                               std::to_string(v) + " -> " +
                               std::to_string(v + step));
    arrows.push_back(found);
  }
  return path_class(arrows);
}

bool FiniteDimAlgebra::associativity_spot_check() const {
  const std::size_t D = dim();
  for (std::size_t x = 0; x < D; ++x)
    for (std::size_t y = 0; y < D; ++y)
      for (std::size_t z = 0; z < D; ++z) {
        const QVec left = mult_vec(mult(x, y), unit(z));
        const QVec right = mult_vec(unit(x), mult(y, z));
        if (left != right)
          return false;
      }
  return true;
}

bool FiniteDimAlgebra::radical_commutation_holds(int arrow_index) const {
  const auto &alpha = pres_.arrows[arrow_index];
  if (alpha.src == alpha.dst)
    throw std::invalid_argument("radical_commutation_holds: loop arrow");
  const QVec a = unit(arrow_class_[arrow_index]);
  RowSpace left(dim()), right(dim());
  for (std::size_t k = 0; k < dim(); ++k) {
    const auto &cls = basis_[k];
    if (cls.degree == 0)
      continue;
    if (cls.src == alpha.src && cls.dst == alpha.src)
      left.insert(mult_vec(unit(k), a));
    if (cls.src == alpha.dst && cls.dst == alpha.dst)
      right.insert(mult_vec(a, unit(k)));
  }
  return left.equals(right);
}

} // namespace tauweave::oracle
