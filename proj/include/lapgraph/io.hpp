#pragma once

#include <optional>
#include <string>

#include "lapgraph/graph.hpp"
#include "lapgraph/planar.hpp"

namespace lapgraph {

/// Contents of a `lapgraph v1` file. A rotation is present iff the file has
/// `rot` lines; rank 0 files describe plain finite graphs.
struct GraphFile {
  VoltageGraph graph;
  std::optional<Rotation> rotation;

  bool is_plane() const { return rotation.has_value(); }
  PlaneGraph plane() const;
};

/// Parses the text format; errors carry 1-based line and column.
GraphFile parse_graph_file(const std::string& text);
GraphFile read_graph_file(const std::string& path);

/// Writes a graph (and rotation, if any) back in the same format.
std::string format_graph_file(const GraphFile& file);

}  // namespace lapgraph
