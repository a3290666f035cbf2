#include "tauweave/model_algebras.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace tauweave::models {

using oracle::Arrow;
using oracle::PathTerm;
using oracle::Relation;
using weak_order::Permutation;

QuiverPresentation preprojective(int n) {
  if (n < 1)
    throw std::invalid_argument("preprojective: n must be >= 1");
  QuiverPresentation p;
  p.vertex_count = n;
  for (int i = 1; i < n; ++i)
    p.arrows.push_back({"a" + std::to_string(i), i, i + 1});
  for (int i = 1; i < n; ++i)
    p.arrows.push_back({"b" + std::to_string(i), i + 1, i});
  auto a = [&](int i) { return i - 1; };
  auto b = [&](int i) { return n - 1 + i - 1; };
  // e_i components of sum_k (a_k b_k - b_k a_k)
  for (int i = 1; i <= n; ++i) {
    Relation rel;
    if (i < n)
      rel.terms.push_back({Rational(1), {a(i), b(i)}});
    if (i > 1)
      rel.terms.push_back({Rational(-1), {b(i - 1), a(i - 1)}});
    if (!rel.terms.empty())
      p.relations.push_back(std::move(rel));
  }
  return p;
}

QuiverPresentation lambda_m(int n, int m) {
  if (n < 1 || m < 1)
    throw std::invalid_argument("lambda_m: need n >= 1, m >= 1");
  QuiverPresentation p;
  p.vertex_count = n;
  for (int i = 1; i < n; ++i)
    p.arrows.push_back({"a" + std::to_string(i), i, i + 1});
  for (int i = 1; i < n; ++i)
    p.arrows.push_back({"b" + std::to_string(i), i + 1, i});
  auto a = [&](int i) { return i - 1; };
  auto b = [&](int i) { return n - 1 + i - 1; };
  for (int i = 1; i < n; ++i) {
    p.relations.push_back({{{Rational(1), {a(i), b(i)}}}});
    p.relations.push_back({{{Rational(1), {b(i), a(i)}}}});
  }
  if (m == 1)
    return p;
  auto l = [&](int i) { return 2 * (n - 1) + i - 1; };
  for (int i = 1; i <= n; ++i)
    p.arrows.push_back({"l" + std::to_string(i), i, i});
  for (int i = 1; i < n; ++i) {
    p.relations.push_back({{{Rational(1), {l(i), a(i)}}}});
    p.relations.push_back({{{Rational(1), {l(i + 1), b(i)}}}});
    p.relations.push_back({{{Rational(1), {a(i), l(i + 1)}}}});
    p.relations.push_back({{{Rational(1), {b(i), l(i)}}}});
  }
  for (int i = 1; i <= n; ++i) {
    PathTerm power{Rational(1), {}};
    for (int k = 0; k < m; ++k)
      power.arrows.push_back(l(i));
    p.relations.push_back({{power}});
  }
  return p;
}

QuiverPresentation gamma() {
  QuiverPresentation p;
  p.vertex_count = 2;
  p.arrows = {{"al", 1, 2}, {"be", 2, 1}, {"l1", 1, 1},
              {"m1", 1, 1}, {"l2", 2, 2}, {"m2", 2, 2}};
  const int al = 0, be = 1, l1 = 2, m1 = 3, l2 = 4, m2 = 5;
  auto mono = [&](std::vector<int> path) {
    p.relations.push_back({{{Rational(1), std::move(path)}}});
  };
  mono({al, be, al, be});
  mono({be, al, be, al});
  // l1 al - al l2 - al m2
  p.relations.push_back({{{Rational(1), {l1, al}},
                          {Rational(-1), {al, l2}},
                          {Rational(-1), {al, m2}}}});
  // m1 al - al m2
  p.relations.push_back({{{Rational(1), {m1, al}}, {Rational(-1), {al, m2}}}});
  // l2 be - be m1
  p.relations.push_back({{{Rational(1), {l2, be}}, {Rational(-1), {be, m1}}}});
  // m2 be - be l1
  p.relations.push_back({{{Rational(1), {m2, be}}, {Rational(-1), {be, l1}}}});
  for (int v : {l1, m1, l2, m2})
    mono({v, v});
  mono({l1, m1});
  mono({m1, l1});
  mono({l2, m2});
  mono({m2, l2});
  return p;
}

QuiverPresentation builtin_algebra(const std::string &selector) {
  std::vector<std::string> parts;
  std::string token;
  std::istringstream ss(selector);
  while (std::getline(ss, token, ':'))
    parts.push_back(token);
  if (parts.empty())
    throw std::invalid_argument("empty algebra selector");
  if (parts[0] == "gamma" && parts.size() == 1)
    return gamma();
  if (parts[0] == "preprojective" && parts.size() == 2)
    return preprojective(std::stoi(parts[1]));
  if (parts[0] == "lambda" && parts.size() == 3)
    return lambda_m(std::stoi(parts[1]), std::stoi(parts[2]));
  throw std::invalid_argument("unknown algebra selector: " + selector);
}

TwoSidedIdeal::TwoSidedIdeal(const FiniteDimAlgebra &A,
                             std::vector<QVec> generators)
    : A_(&A), space_(A.dim()) {
  // close the span under two-sided multiplication by basis classes
  std::vector<QVec> frontier = std::move(generators);
  for (auto &g : frontier)
    space_.insert(g);
  while (!frontier.empty()) {
    std::vector<QVec> next;
    for (const auto &g : frontier)
      for (std::size_t k = 0; k < A.dim(); ++k) {
        QVec left = A.mult_vec(A.unit(k), g);
        if (!is_zero(left) && space_.insert(left))
          next.push_back(std::move(left));
        QVec right = A.mult_vec(g, A.unit(k));
        if (!is_zero(right) && space_.insert(right))
          next.push_back(std::move(right));
      }
    frontier = std::move(next);
  }
}

TwoSidedIdeal TwoSidedIdeal::unit(const FiniteDimAlgebra &A) {
  std::vector<QVec> gens;
  for (int v = 1; v <= A.vertex_count(); ++v)
    gens.push_back(A.unit(A.idempotent(v)));
  return TwoSidedIdeal(A, std::move(gens));
}

TwoSidedIdeal TwoSidedIdeal::idempotent_complement(const FiniteDimAlgebra &A,
                                                   int i) {
  std::vector<QVec> gens;
  for (int v = 1; v <= A.vertex_count(); ++v)
    if (v != i)
      gens.push_back(A.unit(A.idempotent(v)));
  return TwoSidedIdeal(A, std::move(gens));
}

bool TwoSidedIdeal::is_closed() const {
  for (const auto &row : space_.basis())
    for (std::size_t k = 0; k < A_->dim(); ++k) {
      if (!space_.contains(A_->mult_vec(A_->unit(k), row)))
        return false;
      if (!space_.contains(A_->mult_vec(row, A_->unit(k))))
        return false;
    }
  return true;
}

RightModule TwoSidedIdeal::row_module(int i) const {
  const auto &A = *A_;
  // spans of e_i I e_v; the reduced rows double as module coordinates
  const QVec ei = A.unit(A.idempotent(i));
  std::vector<RowSpace> spans;
  for (int v = 1; v <= A.vertex_count(); ++v)
    spans.emplace_back(A.dim());
  for (const auto &row : space_.basis()) {
    const QVec projected = A.mult_vec(ei, row);
    if (is_zero(projected))
      continue;
    for (int v = 1; v <= A.vertex_count(); ++v) {
      QVec comp = A.mult_vec(projected, A.unit(A.idempotent(v)));
      if (!is_zero(comp))
        spans[v - 1].insert(comp);
    }
  }
  std::vector<int> dims(A.vertex_count());
  for (int v = 1; v <= A.vertex_count(); ++v)
    dims[v - 1] = static_cast<int>(spans[v - 1].rank());

  auto coords = [&](int v, const QVec &elem) {
    // solve for coefficients over spans[v-1].basis()
    const auto &rows = spans[v - 1].basis();
    QMat mat(A.dim(), rows.size());
    for (std::size_t c = 0; c < rows.size(); ++c)
      for (std::size_t r = 0; r < A.dim(); ++r)
        mat.at(r, c) = rows[c][r];
    QVec x;
    if (!solve(mat, elem, x))
      throw std::logic_error("row_module: element left the subspace");
    return x;
  };

  std::vector<QMat> action;
  for (std::size_t a = 0; a < A.presentation().arrows.size(); ++a) {
    const auto &arrow = A.presentation().arrows[a];
    const auto &src_rows = spans[arrow.src - 1].basis();
    QMat m(dims[arrow.dst - 1], dims[arrow.src - 1]);
    for (std::size_t c = 0; c < src_rows.size(); ++c) {
      const QVec img =
          A.mult_vec(src_rows[c], A.unit(A.arrow_class(static_cast<int>(a))));
      const QVec x = coords(arrow.dst, img);
      for (std::size_t r = 0; r < x.size(); ++r)
        m.at(r, c) = x[r];
    }
    action.push_back(std::move(m));
  }
  return RightModule(A, std::move(dims), std::move(action));
}

TwoSidedIdeal ideal_product(const TwoSidedIdeal &J, const TwoSidedIdeal &K) {
  const auto &A = J.algebra();
  std::vector<QVec> gens;
  for (const auto &x : J.space().basis())
    for (const auto &y : K.space().basis())
      gens.push_back(A.mult_vec(x, y));
  return TwoSidedIdeal(A, std::move(gens));
}

TwoSidedIdeal mizuno_ideal(const FiniteDimAlgebra &A, const Permutation &w) {
  TwoSidedIdeal result = TwoSidedIdeal::unit(A);
  const auto word = weak_order::reduced_word(w);
  for (int letter : word)
    result = ideal_product(result, TwoSidedIdeal::idempotent_complement(A, letter));
  return result;
}

std::vector<std::vector<int>> all_reduced_words(const Permutation &w) {
  std::vector<std::vector<int>> out;
  std::vector<int> word;
  auto rec = [&](auto &&self, const Permutation &cur) -> void {
    if (cur.is_identity()) {
      out.push_back(word);
      return;
    }
    for (int i = 1; i < cur.order(); ++i) {
      auto [next, delta] = weak_order::left_multiply(i, cur);
      if (delta == -1) {
        word.push_back(i);
        self(self, next);
        word.pop_back();
      }
    }
  };
  rec(rec, w);
  return out;
}

std::vector<MizunoNode> mizuno_map(const FiniteDimAlgebra &A, int n,
                                   bool check_all_reduced_words) {
  if (A.vertex_count() != n)
    throw std::invalid_argument("mizuno_map: vertex count mismatch");
  const int order = n + 1;
  const auto w0 = Permutation::longest_element(order);

  std::vector<Permutation> all;
  {
    std::vector<int> img(order);
    for (int k = 0; k < order; ++k)
      img[k] = k + 1;
    do
      all.emplace_back(img);
    while (std::next_permutation(img.begin(), img.end()));
  }

  std::vector<MizunoNode> nodes;
  for (const auto &w : all) {
    const auto u = w.compose(w0);
    TwoSidedIdeal ideal = mizuno_ideal(A, u);
    if (!ideal.is_closed())
      throw std::logic_error("mizuno_map: ideal not two-sided closed");
    if (check_all_reduced_words) {
      for (const auto &word : all_reduced_words(u)) {
        TwoSidedIdeal again = TwoSidedIdeal::unit(A);
        for (int letter : word)
          again = ideal_product(again,
                                TwoSidedIdeal::idempotent_complement(A, letter));
        if (!again.equals(ideal))
          throw std::logic_error(
              "mizuno_map: I_w depends on the reduced word at " +
              u.to_string());
      }
    }

    MizunoNode node{w, ideal, {}, {}, {}, {}};
    std::vector<char> in_support(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
      RightModule summand = ideal.row_module(i);
      if (summand.is_zero())
        continue;
      node.summand_vertices.push_back(i);
      for (int v : summand.support())
        in_support[v] = 1;
      node.summands.push_back(std::move(summand));
    }
    for (int v = 1; v <= n; ++v)
      if (!in_support[v])
        node.shifted_projectives.push_back(v);

    oracle::PairParts parts;
    for (const auto &m : node.summands)
      parts.summands.push_back(&m);
    parts.shifted_projectives = node.shifted_projectives;
    node.complex = oracle::validated_pair_complex(A, parts);
    nodes.push_back(std::move(node));
  }
  return nodes;
}

} // namespace tauweave::models
