#include "tauweave/condition_check.hpp"

#include <cstdlib>
#include <map>

namespace tauweave::oracle {

ConditionReport check_condition(const FiniteDimAlgebra &A) {
  ConditionReport report;
  const auto &p = A.presentation();
  const int n = p.vertex_count;

  // (a): after deleting loops, exactly one arrow i -> i+1 and one i+1 -> i
  std::map<std::pair<int, int>, int> count;
  for (const auto &arrow : p.arrows)
    if (arrow.src != arrow.dst)
      ++count[{arrow.src, arrow.dst}];
  bool shape_ok = true;
  for (const auto &[edge, c] : count) {
    if (std::abs(edge.first - edge.second) != 1 || c != 1)
      shape_ok = false;
  }
  for (int v = 1; v < n; ++v) {
    if (!count.count({v, v + 1}) || !count.count({v + 1, v}))
      shape_ok = false;
  }
  report.a = shape_ok;

  // unique consecutive arrows are all (c) needs; (a) may fail for other
  // reasons (extra long arrows, missing one direction) and still leave the
  // shortest paths well-defined between some pairs
  report.shortest_paths_defined = true;
  for (int v = 1; v < n && report.shortest_paths_defined; ++v)
    if (count[{v, v + 1}] != 1 || count[{v + 1, v}] != 1)
      report.shortest_paths_defined = false;

  // (b)
  report.b = true;
  for (std::size_t a = 0; a < p.arrows.size(); ++a) {
    const auto &arrow = p.arrows[a];
    if (arrow.src == arrow.dst)
      continue;
    const QVec x = A.unit(A.arrow_class(static_cast<int>(a)));
    const auto &block = A.block(arrow.src, arrow.dst);
    RowSpace full(A.dim()), left(A.dim()), right(A.dim());
    for (std::size_t cls : block)
      full.insert(A.unit(cls));
    for (std::size_t cls : A.block(arrow.dst, arrow.dst))
      left.insert(A.mult_vec(x, A.unit(cls))); // x A e_j
    for (std::size_t cls : A.block(arrow.src, arrow.src))
      right.insert(A.mult_vec(A.unit(cls), x)); // e_i A x
    if (!(full.equals(left) && full.equals(right)))
      report.b = false;
  }

  // (c)
  if (!report.shortest_paths_defined) {
    report.c = false;
    return report;
  }
  report.c = true;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (is_zero(A.shortest_path_class(i, j)))
        report.c = false;
  return report;
}

} // namespace tauweave::oracle
