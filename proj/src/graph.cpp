#include "hkdim/graph.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "hkdim/errors.hpp"

namespace hkdim {

namespace {

bool valid_name(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
              (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return true;
}

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

std::optional<int> OrientedGraph::try_index(std::string_view name) const {
  for (int v = 0; v < vertex_count(); ++v) {
    if (names_[v] == name) return v;
  }
  return std::nullopt;
}

int OrientedGraph::index(std::string_view name) const {
  if (auto v = try_index(name)) return *v;
  throw Error("unknown vertex '" + std::string(name) + "'");
}

void OrientedGraph::add_arc_checked(int from, int to, int line) {
  auto fail = [&](const std::string& what) {
    if (line > 0) throw ParseError(what, line);
    throw Error(what);
  };
  const std::string arc = names_[from] + "->" + names_[to];
  if (from == to) fail("self-loop " + arc);
  if (out_mask_[from].contains(to)) fail("duplicate arc " + arc);
  if (out_mask_[to].contains(from))
    fail("2-cycle: both " + arc + " and " + names_[to] + "->" + names_[from]);
  out_mask_[from].add(to);
  in_mask_[to].add(from);
  arc_list_.emplace_back(from, to);
}

void OrientedGraph::finalize() {
  const int n = vertex_count();
  std::sort(arc_list_.begin(), arc_list_.end());
  out_.assign(n, {});
  in_.assign(n, {});
  nbr_mask_.assign(n, IndexSet(n));
  for (auto [u, v] : arc_list_) {
    out_[u].push_back(v);
    in_[v].push_back(u);
    nbr_mask_[u].add(v);
    nbr_mask_[v].add(u);
  }
}

OrientedGraph OrientedGraph::parse(std::string_view text) {
  OrientedGraph g;
  std::unordered_map<std::string, int> seen;
  bool have_vertices = false;
  int line_no = 0;
  std::size_t pos = 0;

  std::vector<std::tuple<int, std::string, std::string>> pending_arcs;

  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? text.size() - pos
                                                       : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    auto tokens = split_ws(line);
    if (tokens.empty() || tokens[0][0] == '#') continue;

    if (tokens[0] == "vertices:") {
      if (have_vertices)
        throw ParseError("second vertices line", line_no);
      have_vertices = true;
      for (std::size_t t = 1; t < tokens.size(); ++t) {
        if (!valid_name(tokens[t]))
          throw ParseError("invalid vertex name '" + tokens[t] + "'", line_no);
        if (seen.count(tokens[t]))
          throw ParseError("vertex '" + tokens[t] + "' declared twice",
                           line_no);
        seen.emplace(tokens[t], static_cast<int>(g.names_.size()));
        g.names_.push_back(tokens[t]);
      }
    } else if (tokens[0] == "edges:") {
      if (!have_vertices)
        throw ParseError("edges line before vertices line", line_no);
      for (std::size_t t = 1; t < tokens.size(); ++t) {
        const std::string& tok = tokens[t];
        std::size_t arrow = tok.find("->");
        if (arrow == std::string::npos || arrow == 0 ||
            arrow + 2 >= tok.size())
          throw ParseError("malformed arc '" + tok + "' (expected a->b)",
                           line_no);
        pending_arcs.emplace_back(line_no, tok.substr(0, arrow),
                                  tok.substr(arrow + 2));
      }
    } else {
      throw ParseError("unrecognized line '" + std::string(line) + "'",
                       line_no);
    }
  }

  if (!have_vertices) throw ParseError("missing vertices line", 0);

  const int n = g.vertex_count();
  g.out_mask_.assign(n, IndexSet(n));
  g.in_mask_.assign(n, IndexSet(n));
  for (auto& [line, from, to] : pending_arcs) {
    auto it_from = seen.find(from);
    auto it_to = seen.find(to);
    if (it_from == seen.end())
      throw ParseError("undeclared vertex '" + from + "' in arc", line);
    if (it_to == seen.end())
      throw ParseError("undeclared vertex '" + to + "' in arc", line);
    g.add_arc_checked(it_from->second, it_to->second, line);
  }
  g.finalize();
  return g;
}

OrientedGraph OrientedGraph::from_lists(
    std::vector<std::string> vertices,
    const std::vector<std::pair<std::string, std::string>>& arcs) {
  OrientedGraph g;
  for (auto& name : vertices) {
    if (!valid_name(name)) throw Error("invalid vertex name '" + name + "'");
    if (g.try_index(name)) throw Error("vertex '" + name + "' declared twice");
    g.names_.push_back(std::move(name));
  }
  const int n = g.vertex_count();
  g.out_mask_.assign(n, IndexSet(n));
  g.in_mask_.assign(n, IndexSet(n));
  for (auto& [from, to] : arcs) {
    g.add_arc_checked(g.index(from), g.index(to), 0);
  }
  g.finalize();
  return g;
}

OrientedGraph OrientedGraph::reversed() const {
  std::vector<std::pair<std::string, std::string>> arcs;
  arcs.reserve(arc_list_.size());
  for (auto [u, v] : arc_list_) arcs.emplace_back(names_[v], names_[u]);
  return from_lists(names_, arcs);
}

std::string OrientedGraph::to_text() const {
  std::ostringstream out;
  out << "vertices:";
  for (const auto& name : names_) out << ' ' << name;
  out << '\n' << "edges:";
  for (auto [u, v] : arc_list_) out << ' ' << names_[u] << "->" << names_[v];
  out << '\n';
  return out.str();
}

}  // namespace hkdim
