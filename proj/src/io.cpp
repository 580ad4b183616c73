#include "lapgraph/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "lapgraph/error.hpp"

namespace lapgraph {

namespace {

struct Token {
  std::string text;
  int column;
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

long parse_long(const Token& t, int line) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(t.text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != t.text.size()) throw ParseError(line, t.column, "expected an integer, got '" + t.text + "'");
  return v;
}

struct RotLine {
  int line;
  std::size_t vertex;
  std::vector<Token> ends;
};

}  // namespace

PlaneGraph GraphFile::plane() const {
  if (!rotation) throw Error("graph file has no rotation system");
  return PlaneGraph(graph, *rotation);
}

GraphFile parse_graph_file(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  bool header = false;
  int rank = 0;
  bool rank_seen = false;
  FiniteGraph g;
  std::vector<Voltage> volts;
  std::vector<RotLine> rots;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw.substr(0, raw.find('#'));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    const std::string& key = tokens[0].text;
    if (!header) {
      if (tokens.size() != 2 || key != "lapgraph" || tokens[1].text != "v1")
        throw ParseError(line_no, tokens[0].column, "expected header 'lapgraph v1'");
      header = true;
      continue;
    }
    if (key == "d") {
      if (tokens.size() != 2) throw ParseError(line_no, tokens[0].column, "expected 'd RANK'");
      if (rank_seen) throw ParseError(line_no, tokens[0].column, "duplicate 'd' line");
      if (g.edge_count() > 0)
        throw ParseError(line_no, tokens[0].column, "'d' must precede the edge lines");
      long d = parse_long(tokens[1], line_no);
      if (d < 0 || d > 2) throw ParseError(line_no, tokens[1].column, "rank must be 0, 1 or 2");
      rank = static_cast<int>(d);
      rank_seen = true;
    } else if (key == "vertex") {
      if (tokens.size() != 2) throw ParseError(line_no, tokens[0].column, "expected 'vertex NAME'");
      if (g.find_vertex(tokens[1].text))
        throw ParseError(line_no, tokens[1].column, "duplicate vertex '" + tokens[1].text + "'");
      g.add_vertex(tokens[1].text);
    } else if (key == "edge") {
      if (tokens.size() < 4)
        throw ParseError(line_no, tokens[0].column, "expected 'edge NAME TAIL HEAD [VOLTAGE]'");
      const Token& name = tokens[1];
      if (name.text.find('.') != std::string::npos)
        throw ParseError(line_no, name.column, "edge names may not contain '.'");
      if (g.find_edge(name.text))
        throw ParseError(line_no, name.column, "duplicate edge '" + name.text + "'");
      std::size_t ends[2];
      for (int k = 0; k < 2; ++k) {
        const Token& t = tokens[2 + static_cast<std::size_t>(k)];
        auto v = g.find_vertex(t.text);
        if (!v) throw ParseError(line_no, t.column, "unknown vertex '" + t.text + "'");
        ends[k] = *v;
      }
      const std::size_t given = tokens.size() - 4;
      if (given != 0 && given != static_cast<std::size_t>(rank))
        throw ParseError(line_no, tokens[4 < tokens.size() ? 4 : 0].column,
                         "voltage has " + std::to_string(given) + " entries but d = " +
                             std::to_string(rank));
      Voltage s{0, 0};
      for (std::size_t k = 0; k < given; ++k) s[k] = parse_long(tokens[4 + k], line_no);
      g.add_edge(name.text, ends[0], ends[1]);
      volts.push_back(s);
    } else if (key == "rot") {
      if (tokens.size() < 2) throw ParseError(line_no, tokens[0].column, "expected 'rot VERTEX: ENDS'");
      Token vt = tokens[1];
      std::vector<Token> rest(tokens.begin() + 2, tokens.end());
      if (!vt.text.empty() && vt.text.back() == ':') {
        vt.text.pop_back();
      } else if (!rest.empty() && rest.front().text == ":") {
        rest.erase(rest.begin());
      } else {
        throw ParseError(line_no, vt.column, "expected ':' after the rotation vertex");
      }
      auto v = g.find_vertex(vt.text);
      if (!v) throw ParseError(line_no, vt.column, "unknown vertex '" + vt.text + "'");
      for (const auto& r : rots)
        if (r.vertex == *v)
          throw ParseError(line_no, vt.column, "second rotation for vertex '" + vt.text + "'");
      rots.push_back({line_no, *v, rest});
    } else {
      throw ParseError(line_no, tokens[0].column, "unknown directive '" + key + "'");
    }
  }
  if (!header) throw ParseError(line_no == 0 ? 1 : line_no, 1, "missing header 'lapgraph v1'");

  GraphFile file;
  file.graph = VoltageGraph(std::move(g), rank, std::move(volts));
  if (rots.empty()) return file;

  const FiniteGraph& base = file.graph.base();
  if (rank > 1) throw ParseError(rots.front().line, 1, "rotation systems need d <= 1");
  Rotation rot(base.vertex_count());
  std::vector<int> seen(2 * base.edge_count(), 0);
  for (const auto& r : rots) {
    for (const auto& t : r.ends) {
      auto dot = t.text.rfind('.');
      if (dot == std::string::npos)
        throw ParseError(r.line, t.column, "expected an edge end 'edge.t' or 'edge.h'");
      std::string edge_name = t.text.substr(0, dot);
      std::string side = t.text.substr(dot + 1);
      auto e = base.find_edge(edge_name);
      if (!e) throw ParseError(r.line, t.column, "unknown edge '" + edge_name + "'");
      if (side != "t" && side != "h")
        throw ParseError(r.line, t.column, "edge end must be '.t' or '.h'");
      std::size_t dart = side == "t" ? tail_dart(*e) : head_dart(*e);
      std::size_t at = side == "t" ? base.edge(*e).tail : base.edge(*e).head;
      if (at != r.vertex)
        throw ParseError(r.line, t.column, "edge end '" + t.text + "' is not at vertex '" +
                                               base.vertex_name(r.vertex) + "'");
      if (seen[dart]) throw ParseError(r.line, t.column, "edge end '" + t.text + "' listed twice");
      seen[dart] = 1;
      rot[r.vertex].push_back(dart);
    }
  }
  for (std::size_t d = 0; d < seen.size(); ++d)
    if (!seen[d]) {
      const Edge& e = base.edge(dart_edge(d));
      throw ParseError(line_no, 1, "rotation is missing edge end '" + e.name +
                                        ((d & 1U) ? ".h'" : ".t'"));
    }
  file.rotation = std::move(rot);
  return file;
}

GraphFile read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_graph_file(ss.str());
}

std::string format_graph_file(const GraphFile& file) {
  const VoltageGraph& vg = file.graph;
  const FiniteGraph& g = vg.base();
  std::ostringstream out;
  out << "lapgraph v1\n";
  out << "d " << vg.rank() << "\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v) out << "vertex " << g.vertex_name(v) << "\n";
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    out << "edge " << edge.name << " " << g.vertex_name(edge.tail) << " "
        << g.vertex_name(edge.head);
    for (int k = 0; k < vg.rank(); ++k) out << " " << vg.voltage(e)[static_cast<std::size_t>(k)];
    out << "\n";
  }
  if (file.rotation) {
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      if ((*file.rotation)[v].empty()) continue;
      out << "rot " << g.vertex_name(v) << ":";
      for (std::size_t d : (*file.rotation)[v])
        out << " " << g.edge(dart_edge(d)).name << ((d & 1U) ? ".h" : ".t");
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace lapgraph
