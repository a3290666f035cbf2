#include "tauweave/quiver.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace tauweave::oracle {

int QuiverPresentation::arrow_index(const std::string &name) const {
  for (std::size_t k = 0; k < arrows.size(); ++k)
    if (arrows[k].name == name)
      return static_cast<int>(k);
  throw std::invalid_argument("unknown arrow: " + name);
}

namespace {

std::pair<int, int> path_endpoints(const QuiverPresentation &p,
                                   const std::vector<int> &path) {
  int src = p.arrows[path.front()].src;
  int cur = src;
  for (int a : path) {
    if (p.arrows[a].src != cur)
      throw std::invalid_argument("relation path is not composable");
    cur = p.arrows[a].dst;
  }
  return {src, cur};
}

} // namespace

QuiverPresentation QuiverPresentation::canonicalized() const {
  QuiverPresentation out;
  out.vertex_count = vertex_count;
  out.arrows = arrows;
  for (const auto &rel : relations) {
    if (rel.terms.empty())
      continue;
    const std::size_t len = rel.terms.front().arrows.size();
    std::map<std::pair<int, int>, Relation> split;
    for (const auto &term : rel.terms) {
      if (term.arrows.size() != len)
        throw std::invalid_argument(
            "relation is not homogeneous in path length");
      if (term.arrows.size() < 2)
        throw std::invalid_argument("relation path of length < 2 (ideal not "
                                    "admissible)");
      split[path_endpoints(*this, term.arrows)].terms.push_back(term);
    }
    for (auto &[key, component] : split)
      out.relations.push_back(std::move(component));
  }
  return out;
}

QuiverPresentation parse_presentation(std::istream &in) {
  QuiverPresentation p;
  std::string line;
  int lineno = 0;
  bool have_vertices = false;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos)
      line.erase(hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head))
      continue;
    auto fail = [&](const std::string &msg) -> void {
      throw std::invalid_argument("presentation line " + std::to_string(lineno) +
                                  ": " + msg);
    };
    if (head == "vertices") {
      if (!(ls >> p.vertex_count) || p.vertex_count < 1)
        fail("expected positive vertex count");
      have_vertices = true;
    } else if (head == "arrow") {
      if (!have_vertices)
        fail("arrow before vertices");
      Arrow a;
      if (!(ls >> a.name >> a.src >> a.dst))
        fail("expected: arrow <name> <src> <dst>");
      if (a.src < 1 || a.src > p.vertex_count || a.dst < 1 ||
          a.dst > p.vertex_count)
        fail("arrow endpoint out of range");
      for (const auto &other : p.arrows)
        if (other.name == a.name)
          fail("duplicate arrow name " + a.name);
      p.arrows.push_back(std::move(a));
    } else if (head == "relation") {
      if (!have_vertices)
        fail("relation before vertices");
      Relation rel;
      std::string tok;
      if (!(ls >> tok))
        fail("empty relation");
      while (true) {
        PathTerm term;
        try {
          term.coef = Rational(tok);
        } catch (const std::exception &) {
          fail("expected rational coefficient, got " + tok);
        }
        bool more = false;
        while (ls >> tok) {
          if (tok == "+") {
            if (!(ls >> tok))
              fail("dangling +");
            more = true;
            break;
          }
          term.arrows.push_back(p.arrow_index(tok));
        }
        if (term.arrows.empty())
          fail("relation term without a path");
        rel.terms.push_back(std::move(term));
        if (!more)
          break;
      }
      p.relations.push_back(std::move(rel));
    } else {
      fail("unknown directive " + head);
    }
  }
  if (!have_vertices)
    throw std::invalid_argument("presentation: missing vertices line");
  return p;
}

QuiverPresentation parse_presentation(const std::string &text) {
  std::istringstream in(text);
  return parse_presentation(in);
}

std::string format_presentation(const QuiverPresentation &p) {
  std::ostringstream out;
  out << "vertices " << p.vertex_count << "\n";
  for (const auto &a : p.arrows)
    out << "arrow " << a.name << " " << a.src << " " << a.dst << "\n";
  for (const auto &rel : p.relations) {
    out << "relation";
    for (std::size_t k = 0; k < rel.terms.size(); ++k) {
      if (k)
        out << " +";
      out << " " << rel.terms[k].coef.str();
      for (int a : rel.terms[k].arrows)
        out << " " << p.arrows[a].name;
    }
    out << "\n";
  }
  return out.str();
}

} // namespace tauweave::oracle
