#include "tauweave/exports.hpp"

#include <json.hpp>

#include <sstream>

namespace tauweave::exports {

using nlohmann::json;

std::string lattice_json(const weak_order::WeakOrderLattice &lat) {
  json nodes = json::array();
  long current_length = -1;
  json group = json::array();
  for (std::size_t k = 0; k < lat.size(); ++k) {
    const long len = weak_order::inversions(lat.node(k));
    if (len != current_length) {
      if (!group.empty())
        nodes.push_back(group);
      group = json::array();
      current_length = len;
    }
    group.push_back(lat.node(k).images());
  }
  if (!group.empty())
    nodes.push_back(group);

  json edges = json::array();
  for (const auto &[from, to] : lat.edges())
    edges.push_back({from, to});

  json out;
  out["order"] = lat.order();
  out["nodes"] = nodes;
  out["edges"] = edges;
  return out.dump(2) + "\n";
}

std::string lattice_dot(const weak_order::WeakOrderLattice &lat) {
  std::ostringstream out;
  out << "digraph weak_order {\n  rankdir=BT;\n";
  long current_length = -1;
  bool open = false;
  for (std::size_t k = 0; k < lat.size(); ++k) {
    const long len = weak_order::inversions(lat.node(k));
    if (len != current_length) {
      if (open)
        out << "  }\n";
      out << "  { rank = same;\n";
      open = true;
      current_length = len;
    }
    out << "    n" << k << " [label=\"" << lat.node(k).to_string() << "\"];\n";
  }
  if (open)
    out << "  }\n";
  for (const auto &[from, to] : lat.edges())
    out << "  n" << from << " -> n" << to << ";\n";
  out << "}\n";
  return out.str();
}

std::string xi_gvector_tsv(int n) {
  std::ostringstream out;
  out << "entries\tg_vector\n";
  for (const auto &i : xi::enumerate_xi(n)) {
    for (std::size_t k = 0; k < i.entries.size(); ++k)
      out << (k ? " " : "") << i.entries[k];
    out << "\t";
    const auto g = xi::g_vector(i);
    for (std::size_t k = 0; k < g.size(); ++k)
      out << (k ? " " : "") << g[k];
    out << "\n";
  }
  return out.str();
}

std::string xi_compatibility_json(const xi::CompatibilityTable &table) {
  json xis = json::array();
  for (const auto &i : table.xi())
    xis.push_back(i.entries);
  json hom = json::array(), comp = json::array();
  const std::size_t V = table.xi().size();
  for (std::size_t a = 0; a < V; ++a) {
    json hrow = json::array(), crow = json::array();
    for (std::size_t b = 0; b < V; ++b) {
      hrow.push_back(table.hom_vanishes_at(a, b));
      crow.push_back(table.compatible_at(a, b));
    }
    hom.push_back(hrow);
    comp.push_back(crow);
  }
  json out;
  out["n"] = table.n();
  out["xi"] = xis;
  out["hom_vanishes"] = hom;
  out["compatible"] = comp;
  return out.dump(2) + "\n";
}

namespace {

json silting_node_json(const silting::SiltingSet &set) {
  json members = json::array();
  for (const auto &m : set.members)
    members.push_back(m.entries);
  return members;
}

} // namespace

std::string sttilt_json(const silting::SttiltPoset &poset,
                        const silting::Isomorphism &iso) {
  json nodes = json::array(), labels = json::array(), edges = json::array();
  for (std::size_t k = 0; k < poset.size(); ++k) {
    nodes.push_back(silting_node_json(poset.node(k)));
    labels.push_back(iso.label_of(k).images());
  }
  for (const auto &[big, small] : poset.hasse_edges())
    edges.push_back({big, small});
  json out;
  out["n"] = poset.n();
  out["nodes"] = nodes;
  out["labels"] = labels;
  out["edges"] = edges;
  return out.dump(2) + "\n";
}

std::string sttilt_dot(const silting::SttiltPoset &poset,
                       const silting::Isomorphism &iso) {
  std::ostringstream out;
  out << "digraph sttilt {\n  rankdir=TB;\n";
  std::vector<std::vector<std::size_t>> by_length;
  for (std::size_t k = 0; k < poset.size(); ++k) {
    const std::size_t len = static_cast<std::size_t>(
        weak_order::inversions(iso.label_of(k)));
    if (by_length.size() <= len)
      by_length.resize(len + 1);
    by_length[len].push_back(k);
  }
  for (std::size_t len = by_length.size(); len-- > 0;) {
    out << "  { rank = same;\n";
    for (std::size_t k : by_length[len])
      out << "    n" << k << " [label=\"" << poset.node(k).to_string()
          << "\\n" << iso.label_of(k).to_string() << "\"];\n";
    out << "  }\n";
  }
  for (const auto &[big, small] : poset.hasse_edges())
    out << "  n" << big << " -> n" << small << ";\n";
  out << "}\n";
  return out.str();
}

} // namespace tauweave::exports
