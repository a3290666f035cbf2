#include "tauweave/complex.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace tauweave::oracle {

namespace {

// flattened coordinates of a graded hom space between summand lists;
// Hom(P_b, P_a) = e_a A e_b, one coordinate per basis class of the block
struct MapSpace {
  std::vector<int> rows, cols;
  std::vector<std::vector<std::vector<std::size_t>>> classes; // [r][c]
  std::vector<std::size_t> offset;
  std::size_t dim = 0;

  MapSpace(const FiniteDimAlgebra &A, const std::vector<int> &rows_,
           const std::vector<int> &cols_)
      : rows(rows_), cols(cols_) {
    classes.assign(rows.size(), {});
    for (std::size_t r = 0; r < rows.size(); ++r) {
      classes[r].assign(cols.size(), {});
      for (std::size_t c = 0; c < cols.size(); ++c)
        classes[r][c] = A.block(rows[r], cols[c]);
    }
    offset.assign(rows.size() * cols.size() + 1, 0);
    std::size_t pos = 0;
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < cols.size(); ++c) {
        offset[r * cols.size() + c] = pos;
        pos += classes[r][c].size();
      }
    offset.back() = pos;
    dim = pos;
  }

  std::size_t entry_offset(std::size_t r, std::size_t c) const {
    return offset[r * cols.size() + c];
  }

  QVec flatten(const std::vector<std::vector<QVec>> &f) const {
    QVec flat(dim, Rational(0));
    for (std::size_t r = 0; r < rows.size() && r < f.size(); ++r)
      for (std::size_t c = 0; c < cols.size() && c < f[r].size(); ++c)
        for (std::size_t k = 0; k < classes[r][c].size(); ++k)
          flat[entry_offset(r, c) + k] += f[r][c][classes[r][c][k]];
    return flat;
  }

  std::vector<std::vector<QVec>> unflatten(const FiniteDimAlgebra &A,
                                           const QVec &flat) const {
    std::vector<std::vector<QVec>> out(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      out[r].assign(cols.size(), QVec(A.dim(), Rational(0)));
      for (std::size_t c = 0; c < cols.size(); ++c)
        for (std::size_t k = 0; k < classes[r][c].size(); ++k)
          out[r][c][classes[r][c][k]] = flat[entry_offset(r, c) + k];
    }
    return out;
  }

  std::vector<std::vector<QVec>> basis_map(const FiniteDimAlgebra &A,
                                           std::size_t flat_index) const {
    QVec flat(dim, Rational(0));
    flat[flat_index] = 1;
    return unflatten(A, flat);
  }
};

// (f o g)_{r,c} = sum_k f_{r,k} * g_{k,c}, with an explicit output shape so
// that empty middle terms yield the zero map of the right size
std::vector<std::vector<QVec>>
compose(const FiniteDimAlgebra &A, const std::vector<std::vector<QVec>> &f,
        const std::vector<std::vector<QVec>> &g, std::size_t out_rows,
        std::size_t out_cols) {
  std::vector<std::vector<QVec>> out(out_rows);
  for (auto &row : out)
    row.assign(out_cols, QVec(A.dim(), Rational(0)));
  for (std::size_t r = 0; r < f.size(); ++r)
    for (std::size_t k = 0; k < f[r].size() && k < g.size(); ++k) {
      if (is_zero(f[r][k]))
        continue;
      for (std::size_t c = 0; c < g[k].size(); ++c) {
        if (is_zero(g[k][c]))
          continue;
        add_scaled(out[r][c], A.mult_vec(f[r][k], g[k][c]), Rational(1));
      }
    }
  return out;
}

} // namespace

bool homotopy_vanishes(const FiniteDimAlgebra &A, const ConcreteTwoTerm &X,
                       const ConcreteTwoTerm &Y) {
  const MapSpace target(A, Y.deg_zero, X.deg_minus1);
  if (target.dim == 0)
    return true;
  const MapSpace h_space(A, Y.deg_zero, X.deg_zero);
  const MapSpace hp_space(A, Y.deg_minus1, X.deg_minus1);

  QMat columns(target.dim, h_space.dim + hp_space.dim);
  for (std::size_t k = 0; k < h_space.dim; ++k) {
    const auto h = h_space.basis_map(A, k);
    const QVec img = target.flatten(
        compose(A, h, X.diff, Y.deg_zero.size(), X.deg_minus1.size()));
    for (std::size_t r = 0; r < target.dim; ++r)
      columns.at(r, k) = img[r];
  }
  for (std::size_t k = 0; k < hp_space.dim; ++k) {
    const auto hp = hp_space.basis_map(A, k);
    const QVec img = target.flatten(
        compose(A, Y.diff, hp, Y.deg_zero.size(), X.deg_minus1.size()));
    for (std::size_t r = 0; r < target.dim; ++r)
      columns.at(r, h_space.dim + k) = img[r];
  }
  return columns.rank() == target.dim;
}

namespace {

struct EndData {
  MapSpace u_space, v_space;
  std::vector<QVec> reps; // flat (u|v) coordinates of a quotient basis
  QMat rep_matrix;
  RowSpace homotopy;
  std::size_t flat_dim = 0;
};

EndData end_data(const FiniteDimAlgebra &A, const ConcreteTwoTerm &X) {
  EndData data{MapSpace(A, X.deg_minus1, X.deg_minus1),
               MapSpace(A, X.deg_zero, X.deg_zero),
               {},
               QMat(),
               RowSpace(0),
               0};
  const MapSpace mixed(A, X.deg_zero, X.deg_minus1);
  data.flat_dim = data.u_space.dim + data.v_space.dim;

  // chain condition: v o d - d o u = 0 in Hom(X^-1, X^0)
  QMat eqs(mixed.dim, data.flat_dim);
  for (std::size_t k = 0; k < data.u_space.dim; ++k) {
    const auto u = data.u_space.basis_map(A, k);
    const QVec img = mixed.flatten(
        compose(A, X.diff, u, X.deg_zero.size(), X.deg_minus1.size()));
    for (std::size_t r = 0; r < mixed.dim; ++r)
      eqs.at(r, k) = -img[r];
  }
  for (std::size_t k = 0; k < data.v_space.dim; ++k) {
    const auto v = data.v_space.basis_map(A, k);
    const QVec img = mixed.flatten(
        compose(A, v, X.diff, X.deg_zero.size(), X.deg_minus1.size()));
    for (std::size_t r = 0; r < mixed.dim; ++r)
      eqs.at(r, data.u_space.dim + k) = img[r];
  }
  const std::vector<QVec> chain_maps = nullspace(eqs);

  const MapSpace h_space(A, X.deg_minus1, X.deg_zero);
  data.homotopy = RowSpace(data.flat_dim);
  for (std::size_t k = 0; k < h_space.dim; ++k) {
    const auto h = h_space.basis_map(A, k);
    QVec flat(data.flat_dim, Rational(0));
    const QVec u_img = data.u_space.flatten(
        compose(A, h, X.diff, X.deg_minus1.size(), X.deg_minus1.size()));
    const QVec v_img = data.v_space.flatten(
        compose(A, X.diff, h, X.deg_zero.size(), X.deg_zero.size()));
    for (std::size_t p = 0; p < data.u_space.dim; ++p)
      flat[p] = u_img[p];
    for (std::size_t p = 0; p < data.v_space.dim; ++p)
      flat[data.u_space.dim + p] = v_img[p];
    data.homotopy.insert(flat);
  }

  RowSpace span = data.homotopy;
  for (const auto &cm : chain_maps)
    if (span.insert(cm))
      data.reps.push_back(cm);
  data.rep_matrix = QMat(0, data.flat_dim);
  for (const auto &r : data.reps)
    data.rep_matrix.append_row(r);
  return data;
}

} // namespace

std::size_t end_dim(const FiniteDimAlgebra &A, const ConcreteTwoTerm &X) {
  return end_data(A, X).reps.size();
}

bool is_local_endomorphism(const FiniteDimAlgebra &A,
                           const ConcreteTwoTerm &X) {
  const EndData data = end_data(A, X);
  const std::size_t D = data.reps.size();
  if (D == 0)
    return false; // the zero complex

  auto quotient_coords = [&](const QVec &flat) {
    QMat mat(data.flat_dim, D + data.homotopy.rank());
    for (std::size_t k = 0; k < D; ++k)
      for (std::size_t j = 0; j < data.flat_dim; ++j)
        mat.at(j, k) = data.rep_matrix.at(k, j);
    for (std::size_t k = 0; k < data.homotopy.rank(); ++k)
      for (std::size_t j = 0; j < data.flat_dim; ++j)
        mat.at(j, D + k) = data.homotopy.basis()[k][j];
    QVec x;
    if (!solve(mat, flat, x))
      throw std::logic_error("End(X): product left the chain-map space");
    return QVec(x.begin(), x.begin() + D);
  };

  auto split_u = [&](std::size_t k) {
    return data.u_space.unflatten(
        A, QVec(data.reps[k].begin(), data.reps[k].begin() + data.u_space.dim));
  };
  auto split_v = [&](std::size_t k) {
    return data.v_space.unflatten(
        A, QVec(data.reps[k].begin() + data.u_space.dim, data.reps[k].end()));
  };

  std::vector<QMat> left(D, QMat(D, D));
  for (std::size_t x = 0; x < D; ++x) {
    const auto ux = split_u(x);
    const auto vx = split_v(x);
    for (std::size_t y = 0; y < D; ++y) {
      const auto u = compose(A, ux, split_u(y), X.deg_minus1.size(),
                             X.deg_minus1.size());
      const auto v =
          compose(A, vx, split_v(y), X.deg_zero.size(), X.deg_zero.size());
      QVec flat(data.flat_dim, Rational(0));
      const QVec fu = data.u_space.flatten(u);
      const QVec fv = data.v_space.flatten(v);
      for (std::size_t p = 0; p < data.u_space.dim; ++p)
        flat[p] = fu[p];
      for (std::size_t p = 0; p < data.v_space.dim; ++p)
        flat[data.u_space.dim + p] = fv[p];
      const QVec coords = quotient_coords(flat);
      for (std::size_t k = 0; k < D; ++k)
        left[x].at(k, y) = coords[k];
    }
  }

  // radical = kernel of the trace form tr(L_x L_y) in characteristic zero;
  // local iff End/rad is one-dimensional
  QMat trace_form(D, D);
  for (std::size_t x = 0; x < D; ++x)
    for (std::size_t y = 0; y < D; ++y) {
      Rational tr = 0;
      const QMat prod = left[x].multiplied(left[y]);
      for (std::size_t k = 0; k < D; ++k)
        tr += prod.at(k, k);
      trace_form.at(x, y) = tr;
    }
  return trace_form.rank() == 1;
}

ConcreteTwoTerm realize(const FiniteDimAlgebra &A, const xi::XiIndex &idx) {
  const int n1 = idx.rank + 1;
  if (A.vertex_count() != idx.rank)
    throw std::invalid_argument("realize: rank does not match vertex count");
  ConcreteTwoTerm out;
  std::vector<int> minus_pos, zero_pos;
  for (std::size_t pos = 0; pos < idx.entries.size(); ++pos) {
    const int label = idx.entries[pos];
    if (pos % 2 == 1) {
      out.deg_zero.push_back(label);
      zero_pos.push_back(static_cast<int>(pos));
    } else if (label != 0 && label != n1) {
      out.deg_minus1.push_back(label);
      minus_pos.push_back(static_cast<int>(pos));
    }
  }
  out.diff.assign(
      out.deg_zero.size(),
      std::vector<QVec>(out.deg_minus1.size(), QVec(A.dim(), Rational(0))));
  for (std::size_t r = 0; r < out.deg_zero.size(); ++r)
    for (std::size_t c = 0; c < out.deg_minus1.size(); ++c)
      if (std::abs(zero_pos[r] - minus_pos[c]) == 1)
        out.diff[r][c] =
            A.shortest_path_class(out.deg_zero[r], out.deg_minus1[c]);
  return out;
}

ConcreteTwoTerm validated_pair_complex(const FiniteDimAlgebra &A,
                                       const PairParts &parts) {
  const int n = A.vertex_count();
  int count = static_cast<int>(parts.shifted_projectives.size());
  std::vector<const RightModule *> nonzero;
  for (const auto *m : parts.summands) {
    if (m->is_zero())
      continue;
    ++count;
    nonzero.push_back(m);
  }
  if (count != n)
    throw std::invalid_argument("pair: |M| + |P| != n");

  RightModule sum = RightModule::direct_sum(A, nonzero);
  ConcreteTwoTerm total = s_complex(A, sum, parts.shifted_projectives);

  if (!homotopy_vanishes(A, total, total))
    throw std::invalid_argument("pair: not tau-rigid (self homotopy test)");
  for (int v : parts.shifted_projectives)
    if (sum.vertex_dim(v) != 0)
      throw std::invalid_argument("pair: Hom(P, M) != 0");
  return total;
}

bool support_tau_tilting_geq(const FiniteDimAlgebra &A,
                             const ConcreteTwoTerm &SM,
                             const ConcreteTwoTerm &SM_prime) {
  return homotopy_vanishes(A, SM, SM_prime);
}

} // namespace tauweave::oracle
