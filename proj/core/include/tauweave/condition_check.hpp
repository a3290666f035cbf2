#pragma once

#include "tauweave/algebra.hpp"

namespace tauweave::oracle {

struct ConditionReport {
  bool a = false; // Q minus loops is the double line quiver on 1..n
  bool b = false; // x A e_j = e_i A e_j = e_i A x for every non-loop arrow x
  bool c = false; // every shortest path class is nonzero
  bool shortest_paths_defined = true;

  bool all() const { return a && b && c; }
};

ConditionReport check_condition(const FiniteDimAlgebra &A);

} // namespace tauweave::oracle
