#pragma once

#include "tauweave/rational.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace tauweave::oracle {

struct Arrow {
  std::string name;
  int src = 0, dst = 0; // vertices 1..n, loops allowed
};

struct PathTerm {
  Rational coef;
  std::vector<int> arrows; // indices into QuiverPresentation::arrows
};

// A homogeneous linear combination of equal-length parallel paths.
struct Relation {
  std::vector<PathTerm> terms;
};

struct QuiverPresentation {
  int vertex_count = 0;
  std::vector<Arrow> arrows;
  std::vector<Relation> relations;

  int arrow_index(const std::string &name) const;
  // Splits every relation into its (source, target) components; the two-sided
  // ideal is unchanged. Throws on length-inhomogeneous or length < 2 input.
  QuiverPresentation canonicalized() const;
};

// Line-oriented text format:
//   # comment
//   vertices N
//   arrow <name> <src> <dst>
//   relation <coef> <name>... [+ <coef> <name>...]
// with rational coefficients p/q (sign allowed).
QuiverPresentation parse_presentation(std::istream &in);
QuiverPresentation parse_presentation(const std::string &text);
std::string format_presentation(const QuiverPresentation &p);

} // namespace tauweave::oracle
