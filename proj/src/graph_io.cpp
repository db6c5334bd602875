#include <fstream>
#include <sstream>

#include "hyperbernardi/graph.hpp"

namespace hb {

namespace {

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

RibbonGraph parse_graph(const std::string& document) {
  std::istringstream in(document);
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& msg) -> InputError {
    return InputError("line " + std::to_string(lineno) + ": " + msg);
  };

  std::vector<std::string> lines;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    lines.push_back(trim(line));
  }

  size_t i = 0;
  while (i < lines.size() && lines[i].empty()) ++i;
  lineno = static_cast<int>(i) + 1;
  if (i == lines.size() || split_ws(lines[i]) != std::vector<std::string>{"hyperbernardi-graph", "v1"})
    throw fail("missing header 'hyperbernardi-graph v1'");
  ++i;

  std::vector<std::string> emerald, violet, vertices;
  bool have_colors = false, have_vertices = false;
  struct EdgeLine {
    std::string id, a, b;
    int line;
  };
  std::vector<EdgeLine> edges;
  struct RotLine {
    std::string node;
    std::vector<std::string> ids;
    int line;
  };
  std::vector<RotLine> rotations;
  std::string base_node, base_edge;
  int base_line = 0;

  enum class Section { None, Edges, Rotations } section = Section::None;
  for (; i < lines.size(); ++i) {
    lineno = static_cast<int>(i) + 1;
    const std::string& l = lines[i];
    if (l.empty()) continue;
    auto colon = l.find(':');
    std::string key = colon == std::string::npos ? "" : trim(l.substr(0, colon));
    std::string rest = colon == std::string::npos ? "" : l.substr(colon + 1);
    if (key == "emerald" || key == "violet") {
      (key == "emerald" ? emerald : violet) = split_ws(rest);
      have_colors = true;
      section = Section::None;
    } else if (key == "vertices") {
      vertices = split_ws(rest);
      have_vertices = true;
      section = Section::None;
    } else if (key == "edges") {
      if (!trim(rest).empty()) throw fail("'edges:' takes no inline values");
      section = Section::Edges;
    } else if (key == "rotations") {
      if (!trim(rest).empty()) throw fail("'rotations:' takes no inline values");
      section = Section::Rotations;
    } else if (key == "base") {
      auto w = split_ws(rest);
      if (w.size() != 2) throw fail("base line must be 'base: node edge'");
      base_node = w[0];
      base_edge = w[1];
      base_line = lineno;
      section = Section::None;
    } else if (section == Section::Edges) {
      auto w = split_ws(l);
      if (w.size() != 3) throw fail("edge line must be 'id end end'");
      edges.push_back({w[0], w[1], w[2], lineno});
    } else if (section == Section::Rotations && colon != std::string::npos) {
      rotations.push_back({key, split_ws(rest), lineno});
    } else {
      throw fail("unexpected line '" + l + "'");
    }
  }

  if (have_colors == have_vertices) throw InputError("document needs either emerald:/violet: or vertices:");
  RibbonGraph g(have_colors);
  try {
    if (have_colors) {
      for (auto& n : emerald) g.add_node(n, Color::Emerald);
      for (auto& n : violet) g.add_node(n, Color::Violet);
    } else {
      for (auto& n : vertices) g.add_node(n);
    }
  } catch (const InputError& e) {
    throw InputError(std::string("node list: ") + e.what());
  }
  for (auto& el : edges) {
    lineno = el.line;
    int a = g.find_node(el.a), b = g.find_node(el.b);
    if (a < 0 || b < 0) throw fail("unknown node in edge '" + el.id + "'");
    try {
      g.add_edge(el.id, a, b);
    } catch (const InputError& e) {
      throw fail(e.what());
    }
  }
  for (auto& r : rotations) {
    lineno = r.line;
    int x = g.find_node(r.node);
    if (x < 0) throw fail("rotation for unknown node '" + r.node + "'");
    std::vector<int> ids;
    for (auto& s : r.ids) {
      int e = g.find_edge(s);
      if (e < 0) throw fail("rotation mentions unknown edge '" + s + "'");
      ids.push_back(e);
    }
    if (ids.empty()) throw fail("empty rotation");
    g.set_rotation(x, ids);
  }
  if (!base_node.empty()) {
    lineno = base_line;
    int x = g.find_node(base_node), e = g.find_edge(base_edge);
    if (x < 0 || e < 0) throw fail("unknown base node or edge");
    g.set_base(x, e);
  }
  g.finalize();
  return g;
}

RibbonGraph load_graph(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_graph(ss.str());
}

std::string write_graph(const RibbonGraph& g) {
  std::ostringstream out;
  out << "hyperbernardi-graph v1\n";
  auto names = [&](const std::vector<int>& xs) {
    for (int x : xs) out << ' ' << g.node_name(x);
    out << '\n';
  };
  if (g.colored()) {
    out << "emerald:";
    names(g.class_nodes(Color::Emerald));
    out << "violet:";
    names(g.class_nodes(Color::Violet));
  } else {
    out << "vertices:";
    std::vector<int> all(g.node_count());
    for (int x = 0; x < g.node_count(); ++x) all[x] = x;
    names(all);
  }
  out << "edges:\n";
  for (int e = 0; e < g.edge_count(); ++e)
    out << g.edge_name(e) << ' ' << g.node_name(g.ends(e)[0]) << ' ' << g.node_name(g.ends(e)[1]) << '\n';
  out << "rotations:\n";
  for (int x = 0; x < g.node_count(); ++x) {
    out << g.node_name(x) << ':';
    for (int e : g.rotation(x)) out << ' ' << g.edge_name(e);
    out << '\n';
  }
  out << "base: " << g.node_name(g.base_node()) << ' ' << g.edge_name(g.base_edge()) << '\n';
  return out.str();
}

}  // namespace hb
