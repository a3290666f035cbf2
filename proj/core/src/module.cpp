#include "tauweave/module.hpp"

#include <algorithm>
#include <stdexcept>

namespace tauweave::oracle {

RightModule::RightModule(const FiniteDimAlgebra &A, std::vector<int> dims,
                         std::vector<QMat> action)
    : A_(&A), dims_(std::move(dims)), action_(std::move(action)) {
  if (dims_.size() != static_cast<std::size_t>(A.vertex_count()))
    throw std::invalid_argument("RightModule: dims size mismatch");
  if (action_.size() != A.presentation().arrows.size())
    throw std::invalid_argument("RightModule: action size mismatch");
  for (std::size_t a = 0; a < action_.size(); ++a) {
    const auto &arrow = A.presentation().arrows[a];
    if (action_[a].rows() != static_cast<std::size_t>(dims_[arrow.dst - 1]) ||
        action_[a].cols() != static_cast<std::size_t>(dims_[arrow.src - 1]))
      throw std::invalid_argument("RightModule: action shape mismatch");
  }
}

RightModule RightModule::zero(const FiniteDimAlgebra &A) {
  std::vector<int> dims(A.vertex_count(), 0);
  std::vector<QMat> action;
  for (const auto &arrow : A.presentation().arrows)
    action.emplace_back(0, 0);
  return RightModule(A, std::move(dims), std::move(action));
}

RightModule RightModule::projective(const FiniteDimAlgebra &A, int vertex) {
  // P_i e_j has the classes of e_i A e_j as coordinates
  std::vector<std::vector<std::size_t>> coords(A.vertex_count());
  std::vector<int> dims(A.vertex_count());
  for (int j = 1; j <= A.vertex_count(); ++j) {
    coords[j - 1] = A.block(vertex, j);
    dims[j - 1] = static_cast<int>(coords[j - 1].size());
  }
  std::vector<QMat> action;
  for (std::size_t a = 0; a < A.presentation().arrows.size(); ++a) {
    const auto &arrow = A.presentation().arrows[a];
    const auto &src = coords[arrow.src - 1];
    const auto &dst = coords[arrow.dst - 1];
    QMat m(dst.size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c) {
      const QVec prod = A.mult(src[c], A.arrow_class(static_cast<int>(a)));
      for (std::size_t r = 0; r < dst.size(); ++r)
        m.at(r, c) = prod[dst[r]];
    }
    action.push_back(std::move(m));
  }
  return RightModule(A, std::move(dims), std::move(action));
}

RightModule RightModule::direct_sum(const FiniteDimAlgebra &A,
                                    const std::vector<const RightModule *> &parts) {
  std::vector<int> dims(A.vertex_count(), 0);
  for (const auto *part : parts)
    for (int v = 1; v <= A.vertex_count(); ++v)
      dims[v - 1] += part->vertex_dim(v);
  std::vector<QMat> action;
  for (std::size_t a = 0; a < A.presentation().arrows.size(); ++a) {
    const auto &arrow = A.presentation().arrows[a];
    QMat m(dims[arrow.dst - 1], dims[arrow.src - 1]);
    std::size_t roff = 0, coff = 0;
    for (const auto *part : parts) {
      const QMat &pa = part->action(static_cast<int>(a));
      for (std::size_t r = 0; r < pa.rows(); ++r)
        for (std::size_t c = 0; c < pa.cols(); ++c)
          m.at(roff + r, coff + c) = pa.at(r, c);
      roff += pa.rows();
      coff += pa.cols();
    }
    action.push_back(std::move(m));
  }
  return RightModule(A, std::move(dims), std::move(action));
}

int RightModule::total_dim() const {
  int t = 0;
  for (int d : dims_)
    t += d;
  return t;
}

QMat RightModule::path_action(const std::vector<int> &path,
                              int src_vertex) const {
  QMat m = QMat::identity(dims_[src_vertex - 1]);
  int cur = src_vertex;
  for (int a : path) {
    const auto &arrow = A_->presentation().arrows[a];
    if (arrow.src != cur)
      throw std::invalid_argument("path_action: path not composable");
    m = action_[a].multiplied(m);
    cur = arrow.dst;
  }
  return m;
}

QMat RightModule::element_action(const QVec &elem, int a, int b) const {
  QMat out(dims_[b - 1], dims_[a - 1]);
  for (std::size_t k = 0; k < A_->dim(); ++k) {
    if (elem[k] == 0)
      continue;
    const auto &cls = A_->basis()[k];
    if (cls.src != a || cls.dst != b)
      continue;
    const QMat pa = cls.rep_path.empty() ? QMat::identity(dims_[a - 1])
                                         : path_action(cls.rep_path, a);
    for (std::size_t r = 0; r < out.rows(); ++r)
      for (std::size_t c = 0; c < out.cols(); ++c)
        out.at(r, c) += elem[k] * pa.at(r, c);
  }
  return out;
}

std::vector<int> RightModule::support() const {
  std::vector<int> out;
  for (int v = 1; v <= A_->vertex_count(); ++v)
    if (dims_[v - 1] > 0)
      out.push_back(v);
  return out;
}

bool RightModule::respects_relations() const {
  for (const auto &rel : A_->presentation().relations) {
    const int src = A_->presentation().arrows[rel.terms.front().arrows.front()].src;
    int dst = src;
    for (int a : rel.terms.front().arrows)
      dst = A_->presentation().arrows[a].dst;
    QMat sum(dims_[dst - 1], dims_[src - 1]);
    for (const auto &term : rel.terms) {
      const QMat pa = path_action(term.arrows, src);
      for (std::size_t r = 0; r < sum.rows(); ++r)
        for (std::size_t c = 0; c < sum.cols(); ++c)
          sum.at(r, c) += term.coef * pa.at(r, c);
    }
    for (std::size_t r = 0; r < sum.rows(); ++r)
      for (std::size_t c = 0; c < sum.cols(); ++c)
        if (sum.at(r, c) != 0)
          return false;
  }
  return true;
}

std::vector<int> RightModule::top_dims() const {
  // M rad = sum over arrows of the image of the arrow action, per vertex
  std::vector<int> out(A_->vertex_count());
  for (int v = 1; v <= A_->vertex_count(); ++v) {
    RowSpace image(dims_[v - 1]);
    for (std::size_t a = 0; a < action_.size(); ++a) {
      if (A_->presentation().arrows[a].dst != v)
        continue;
      const QMat &m = action_[a];
      for (std::size_t c = 0; c < m.cols(); ++c) {
        QVec col(m.rows());
        for (std::size_t r = 0; r < m.rows(); ++r)
          col[r] = m.at(r, c);
        image.insert(col);
      }
    }
    out[v - 1] = dims_[v - 1] - static_cast<int>(image.rank());
  }
  return out;
}

namespace {

// flattened hom space: block-diagonal intertwiners f_v : M e_v -> N e_v with
// f_{dst} M_a = N_a f_{src} for every arrow a
std::vector<std::vector<QMat>> hom_basis(const RightModule &M,
                                         const RightModule &N) {
  const auto &A = M.algebra();
  const int n = A.vertex_count();
  std::vector<std::size_t> offset(n + 1, 0);
  for (int v = 1; v <= n; ++v)
    offset[v] = offset[v - 1] +
                static_cast<std::size_t>(N.vertex_dim(v)) * M.vertex_dim(v);
  const std::size_t unknowns = offset[n];
  if (unknowns == 0)
    return {};

  auto var = [&](int v, std::size_t r, std::size_t c) {
    return offset[v - 1] + r * M.vertex_dim(v) + c;
  };

  QMat eqs(0, unknowns);
  for (std::size_t a = 0; a < A.presentation().arrows.size(); ++a) {
    const auto &arrow = A.presentation().arrows[a];
    const QMat &Ma = M.action(static_cast<int>(a));
    const QMat &Na = N.action(static_cast<int>(a));
    // rows: (r, c) over N e_dst x M e_src
    for (int r = 0; r < N.vertex_dim(arrow.dst); ++r)
      for (int c = 0; c < M.vertex_dim(arrow.src); ++c) {
        QVec row(unknowns, Rational(0));
        for (int k = 0; k < M.vertex_dim(arrow.dst); ++k)
          row[var(arrow.dst, r, k)] += Ma.at(k, c);
        for (int k = 0; k < N.vertex_dim(arrow.src); ++k)
          row[var(arrow.src, k, c)] -= Na.at(r, k);
        eqs.append_row(row);
      }
  }
  std::vector<QVec> flat = nullspace(eqs);

  std::vector<std::vector<QMat>> out;
  for (const auto &sol : flat) {
    std::vector<QMat> f;
    for (int v = 1; v <= n; ++v) {
      QMat m(N.vertex_dim(v), M.vertex_dim(v));
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
          m.at(r, c) = sol[var(v, r, c)];
      f.push_back(std::move(m));
    }
    out.push_back(std::move(f));
  }
  return out;
}

} // namespace

std::size_t RightModule::hom_dim(const RightModule &M, const RightModule &N) {
  return hom_basis(M, N).size();
}

bool RightModule::has_local_endomorphism_ring() const {
  if (is_zero())
    return false;
  auto basis = hom_basis(*this, *this);
  const std::size_t D = basis.size();
  const int n = A_->vertex_count();

  // structure constants of End(M) in this basis
  std::vector<std::size_t> offset(n + 1, 0);
  for (int v = 1; v <= n; ++v)
    offset[v] = offset[v - 1] +
                static_cast<std::size_t>(dims_[v - 1]) * dims_[v - 1];
  const std::size_t flat_dim = offset[n];
  auto flatten = [&](const std::vector<QMat> &f) {
    QVec out(flat_dim, Rational(0));
    std::size_t pos = 0;
    for (int v = 1; v <= n; ++v)
      for (std::size_t r = 0; r < f[v - 1].rows(); ++r)
        for (std::size_t c = 0; c < f[v - 1].cols(); ++c)
          out[pos++] = f[v - 1].at(r, c);
    return out;
  };
  QMat basis_mat(0, flat_dim);
  for (const auto &f : basis)
    basis_mat.append_row(flatten(f));

  auto coords_of = [&](const std::vector<QMat> &f) {
    QVec x;
    QMat bt(flat_dim, D);
    for (std::size_t k = 0; k < D; ++k)
      for (std::size_t j = 0; j < flat_dim; ++j)
        bt.at(j, k) = basis_mat.at(k, j);
    if (!solve(bt, flatten(f), x))
      throw std::logic_error("End(M): composition left the hom space");
    return x;
  };

  // left-multiplication matrices
  std::vector<QMat> left(D, QMat(D, D));
  for (std::size_t x = 0; x < D; ++x)
    for (std::size_t y = 0; y < D; ++y) {
      std::vector<QMat> comp;
      for (int v = 1; v <= n; ++v)
        comp.push_back(basis[x][v - 1].multiplied(basis[y][v - 1]));
      const QVec coords = coords_of(comp);
      for (std::size_t k = 0; k < D; ++k)
        left[x].at(k, y) = coords[k];
    }

  // radical via the trace form: x in rad iff tr(L_x L_y) = 0 for all y
  QMat trace_form(D, D);
  for (std::size_t x = 0; x < D; ++x)
    for (std::size_t y = 0; y < D; ++y) {
      Rational tr = 0;
      const QMat prod = left[x].multiplied(left[y]);
      for (std::size_t k = 0; k < D; ++k)
        tr += prod.at(k, k);
      trace_form.at(x, y) = tr;
    }
  const std::size_t rad_dim = D - trace_form.rank();
  return D - rad_dim == 1;
}

RightModule cyclic_quotient_module(const FiniteDimAlgebra &A, int i,
                                   const std::vector<int> &kept) {
  std::vector<bool> keep(A.vertex_count() + 1, false);
  for (int k : kept)
    keep[k] = true;

  // subspace S = sum over c not kept of e_i A e_c A, per vertex
  std::vector<RowSpace> sub;
  for (int v = 1; v <= A.vertex_count(); ++v)
    sub.emplace_back(A.block(i, v).size());
  std::vector<std::vector<std::size_t>> coords(A.vertex_count());
  for (int v = 1; v <= A.vertex_count(); ++v)
    coords[v - 1] = A.block(i, v);

  for (int c = 1; c <= A.vertex_count(); ++c) {
    if (keep[c])
      continue;
    for (std::size_t u : A.block(i, c))
      for (std::size_t w = 0; w < A.dim(); ++w) {
        if (A.basis()[w].src != c)
          continue;
        const QVec prod = A.mult(u, w);
        const int v = A.basis()[w].dst;
        QVec vec(coords[v - 1].size(), Rational(0));
        for (std::size_t p = 0; p < coords[v - 1].size(); ++p)
          vec[p] = prod[coords[v - 1][p]];
        sub[v - 1].insert(vec);
      }
  }

  // quotient bases per vertex: coordinates not pivotal in S
  std::vector<std::vector<std::size_t>> surv(A.vertex_count());
  std::vector<int> dims(A.vertex_count());
  for (int v = 1; v <= A.vertex_count(); ++v) {
    std::vector<bool> pivot(coords[v - 1].size(), false);
    for (auto p : sub[v - 1].pivots())
      pivot[p] = true;
    for (std::size_t p = 0; p < coords[v - 1].size(); ++p)
      if (!pivot[p])
        surv[v - 1].push_back(p);
    dims[v - 1] = static_cast<int>(surv[v - 1].size());
  }

  auto project = [&](int v, const QVec &full) {
    // full: coefficients over coords[v-1]; reduce mod S, read survivors
    QVec red = sub[v - 1].reduce(full);
    QVec out(surv[v - 1].size(), Rational(0));
    for (std::size_t p = 0; p < surv[v - 1].size(); ++p)
      out[p] = red[surv[v - 1][p]];
    return out;
  };

  std::vector<QMat> action;
  for (std::size_t a = 0; a < A.presentation().arrows.size(); ++a) {
    const auto &arrow = A.presentation().arrows[a];
    const auto &src_coords = coords[arrow.src - 1];
    QMat m(dims[arrow.dst - 1], dims[arrow.src - 1]);
    for (std::size_t c = 0; c < surv[arrow.src - 1].size(); ++c) {
      const std::size_t cls = src_coords[surv[arrow.src - 1][c]];
      const QVec prod = A.mult(cls, A.arrow_class(static_cast<int>(a)));
      QVec full(coords[arrow.dst - 1].size(), Rational(0));
      for (std::size_t p = 0; p < coords[arrow.dst - 1].size(); ++p)
        full[p] = prod[coords[arrow.dst - 1][p]];
      const QVec q = project(arrow.dst, full);
      for (std::size_t r = 0; r < q.size(); ++r)
        m.at(r, c) = q[r];
    }
    action.push_back(std::move(m));
  }
  return RightModule(A, std::move(dims), std::move(action));
}

ConcreteTwoTerm ConcreteTwoTerm::projective_stalk(const FiniteDimAlgebra &,
                                                  int vertex) {
  ConcreteTwoTerm t;
  t.deg_zero = {vertex};
  t.diff = {{}};
  return t;
}

ConcreteTwoTerm ConcreteTwoTerm::shifted_projective(const FiniteDimAlgebra &,
                                                    int vertex) {
  ConcreteTwoTerm t;
  t.deg_minus1 = {vertex};
  return t;
}

ConcreteTwoTerm
ConcreteTwoTerm::direct_sum_with(const ConcreteTwoTerm &other) const {
  ConcreteTwoTerm out;
  out.deg_minus1 = deg_minus1;
  out.deg_minus1.insert(out.deg_minus1.end(), other.deg_minus1.begin(),
                        other.deg_minus1.end());
  out.deg_zero = deg_zero;
  out.deg_zero.insert(out.deg_zero.end(), other.deg_zero.begin(),
                      other.deg_zero.end());
  out.diff.assign(out.deg_zero.size(),
                  std::vector<QVec>(out.deg_minus1.size()));
  for (std::size_t r = 0; r < deg_zero.size(); ++r)
    for (std::size_t c = 0; c < deg_minus1.size(); ++c)
      out.diff[r][c] = diff[r][c];
  for (std::size_t r = 0; r < other.deg_zero.size(); ++r)
    for (std::size_t c = 0; c < other.deg_minus1.size(); ++c)
      out.diff[deg_zero.size() + r][deg_minus1.size() + c] = other.diff[r][c];
  return out;
}

bool ConcreteTwoTerm::degreewise_disjoint() const {
  for (int a : deg_minus1)
    for (int b : deg_zero)
      if (a == b)
        return false;
  return true;
}

namespace {

// lifts of a basis of top(M) at each vertex: concrete element vectors of M
struct Cover {
  std::vector<int> labels;          // projective labels, with multiplicity
  std::vector<std::vector<QVec>> gens; // per label: the image of e_label
};

} // namespace

ConcreteTwoTerm minimal_presentation(const FiniteDimAlgebra &A,
                                     const RightModule &M) {
  if (M.is_zero())
    throw std::invalid_argument("minimal_presentation: zero module");

  const int n = A.vertex_count();

  // top-based projective cover P_0 -> M
  std::vector<int> p0_labels;
  std::vector<QVec> p0_gen; // generator images m in M e_label (coords of M)
  for (int v = 1; v <= n; ++v) {
    // image of rad at v
    RowSpace image(M.vertex_dim(v));
    for (std::size_t a = 0; a < A.presentation().arrows.size(); ++a) {
      if (A.presentation().arrows[a].dst != v)
        continue;
      const QMat &m = M.action(static_cast<int>(a));
      for (std::size_t c = 0; c < m.cols(); ++c) {
        QVec col(m.rows());
        for (std::size_t r = 0; r < m.rows(); ++r)
          col[r] = m.at(r, c);
        image.insert(col);
      }
    }
    RowSpace lifted = image;
    for (int k = 0; k < M.vertex_dim(v); ++k) {
      QVec e(M.vertex_dim(v), Rational(0));
      e[k] = 1;
      if (lifted.insert(e)) {
        p0_labels.push_back(v);
        p0_gen.push_back(e);
      }
    }
  }

  // kernel of P_0 -> M as a submodule, then its cover
  // coordinates of P_0 e_v: pairs (generator g, class x in e_{label_g} A e_v)
  struct P0Coord {
    std::size_t gen;
    std::size_t cls;
  };
  std::vector<std::vector<P0Coord>> p0_coords(n);
  for (int v = 1; v <= n; ++v)
    for (std::size_t g = 0; g < p0_labels.size(); ++g)
      for (std::size_t cls : A.block(p0_labels[g], v))
        p0_coords[v - 1].push_back({g, cls});

  // evaluation P_0 e_v -> M e_v
  auto evaluate = [&](int v, std::size_t coord) {
    const auto &pc = p0_coords[v - 1][coord];
    const auto &cls = A.basis()[pc.cls];
    QVec out = p0_gen[pc.gen];
    if (!cls.rep_path.empty()) {
      const QMat act = M.path_action(cls.rep_path, cls.src);
      out = act.apply(out);
    }
    return out;
  };

  std::vector<std::vector<QVec>> kernel(n); // basis per vertex, in P_0 coords
  for (int v = 1; v <= n; ++v) {
    const std::size_t dim0 = p0_coords[v - 1].size();
    if (dim0 == 0)
      continue;
    QMat eval(M.vertex_dim(v), dim0);
    for (std::size_t c = 0; c < dim0; ++c) {
      const QVec img = evaluate(v, c);
      for (std::size_t r = 0; r < img.size(); ++r)
        eval.at(r, c) = img[r];
    }
    kernel[v - 1] = nullspace(eval);
  }

  // kernel as a RightModule: vertex dims + arrow actions in the kernel basis
  std::vector<int> kdims(n);
  std::vector<RowSpace> kspace;
  for (int v = 1; v <= n; ++v) {
    kdims[v - 1] = static_cast<int>(kernel[v - 1].size());
    RowSpace sp(p0_coords[v - 1].size());
    for (const auto &b : kernel[v - 1])
      sp.insert(b);
    kspace.push_back(std::move(sp));
  }
  auto kernel_coords = [&](int v, const QVec &full) {
    // solve for coefficients in the kernel basis
    QMat mat(full.size(), kernel[v - 1].size());
    for (std::size_t c = 0; c < kernel[v - 1].size(); ++c)
      for (std::size_t r = 0; r < full.size(); ++r)
        mat.at(r, c) = kernel[v - 1][c][r];
    QVec x;
    if (!solve(mat, full, x))
      throw std::logic_error("minimal_presentation: vector not in kernel");
    return x;
  };

  std::vector<QMat> kaction;
  for (std::size_t a = 0; a < A.presentation().arrows.size(); ++a) {
    const auto &arrow = A.presentation().arrows[a];
    QMat m(kdims[arrow.dst - 1], kdims[arrow.src - 1]);
    for (std::size_t c = 0; c < kernel[arrow.src - 1].size(); ++c) {
      // apply the arrow inside P_0: coordinatewise via the mult table
      const QVec &vec = kernel[arrow.src - 1][c];
      QVec out(p0_coords[arrow.dst - 1].size(), Rational(0));
      for (std::size_t p = 0; p < vec.size(); ++p) {
        if (vec[p] == 0)
          continue;
        const auto &pc = p0_coords[arrow.src - 1][p];
        const QVec prod = A.mult(pc.cls, A.arrow_class(static_cast<int>(a)));
        for (std::size_t q = 0; q < p0_coords[arrow.dst - 1].size(); ++q) {
          const auto &qc = p0_coords[arrow.dst - 1][q];
          if (qc.gen == pc.gen)
            out[q] += vec[p] * prod[qc.cls];
        }
      }
      const QVec kc = kernel_coords(arrow.dst, out);
      for (std::size_t r = 0; r < kc.size(); ++r)
        m.at(r, c) = kc[r];
    }
    kaction.push_back(std::move(m));
  }
  RightModule K(A, kdims, std::move(kaction));

  ConcreteTwoTerm pres;
  pres.deg_zero = p0_labels;
  if (K.is_zero()) {
    pres.diff.assign(p0_labels.size(), {});
    return pres;
  }

  // cover of K: top lifts, recorded as elements of P_0
  std::vector<int> p1_labels;
  std::vector<QVec> p1_gen_in_p0; // per generator: vector over p0_coords[v]
  std::vector<int> p1_gen_vertex;
  for (int v = 1; v <= n; ++v) {
    RowSpace image(kdims[v - 1]);
    for (std::size_t a = 0; a < A.presentation().arrows.size(); ++a) {
      if (A.presentation().arrows[a].dst != v)
        continue;
      const QMat &m = K.action(static_cast<int>(a));
      for (std::size_t c = 0; c < m.cols(); ++c) {
        QVec col(m.rows());
        for (std::size_t r = 0; r < m.rows(); ++r)
          col[r] = m.at(r, c);
        image.insert(col);
      }
    }
    RowSpace lifted = image;
    for (int k = 0; k < kdims[v - 1]; ++k) {
      QVec e(kdims[v - 1], Rational(0));
      e[k] = 1;
      if (lifted.insert(e)) {
        p1_labels.push_back(v);
        p1_gen_in_p0.push_back(kernel[v - 1][k]);
        p1_gen_vertex.push_back(v);
      }
    }
  }

  // differential entries: component of generator g1 (in P_0 coords at its
  // vertex) along each degree-0 summand is an element of e_{label_r} A e_v
  pres.deg_minus1 = p1_labels;
  pres.diff.assign(p0_labels.size(), std::vector<QVec>(p1_labels.size()));
  for (std::size_t r = 0; r < p0_labels.size(); ++r)
    for (std::size_t c = 0; c < p1_labels.size(); ++c) {
      QVec elem(A.dim(), Rational(0));
      const int v = p1_gen_vertex[c];
      const QVec &vec = p1_gen_in_p0[c];
      for (std::size_t p = 0; p < p0_coords[v - 1].size(); ++p) {
        if (vec[p] == 0)
          continue;
        const auto &pc = p0_coords[v - 1][p];
        if (pc.gen == r)
          elem[pc.cls] += vec[p];
      }
      pres.diff[r][c] = std::move(elem);
    }
  return pres;
}

ConcreteTwoTerm s_complex(const FiniteDimAlgebra &A, const RightModule &M,
                          const std::vector<int> &shifted_projectives) {
  ConcreteTwoTerm out;
  if (!M.is_zero())
    out = minimal_presentation(A, M);
  else
    out.diff = {};
  for (int v : shifted_projectives)
    out = out.direct_sum_with(ConcreteTwoTerm::shifted_projective(A, v));
  return out;
}

} // namespace tauweave::oracle
