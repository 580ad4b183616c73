#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "lapgraph/colorings.hpp"
#include "lapgraph/graph.hpp"

namespace lapgraph {

// Edge-ends ("darts") are numbered 2*e for the tail end of edge e and 2*e + 1
// for its head end.
inline std::size_t tail_dart(std::size_t e) { return 2 * e; }
inline std::size_t head_dart(std::size_t e) { return 2 * e + 1; }
inline std::size_t dart_edge(std::size_t d) { return d / 2; }

/// Counterclockwise cyclic order of darts around each vertex.
using Rotation = std::vector<std::vector<std::size_t>>;

/// Graph with a rotation system. Rank 0 describes a plane graph; rank 1
/// describes a quotient embedded in an annulus whose lift is a plane graph.
class PlaneGraph {
 public:
  PlaneGraph(VoltageGraph graph, Rotation rotation);

  const VoltageGraph& graph() const { return graph_; }
  const FiniteGraph& base() const { return graph_.base(); }
  const Rotation& rotation() const { return rotation_; }

  std::size_t dart_count() const { return 2 * base().edge_count(); }
  std::size_t vertex_of(std::size_t dart) const;
  /// The other end of the same edge.
  std::size_t opposite(std::size_t dart) const { return dart ^ 1U; }
  /// Counterclockwise successor / predecessor around the dart's vertex.
  std::size_t next_ccw(std::size_t dart) const { return next_[dart]; }
  std::size_t prev_ccw(std::size_t dart) const { return prev_[dart]; }
  /// Voltage gained when travelling along the edge away from this end.
  long dart_voltage(std::size_t dart) const;
  /// "edge.t" / "edge.h".
  std::string dart_name(std::size_t dart) const;

 private:
  VoltageGraph graph_;
  Rotation rotation_;
  std::vector<std::size_t> next_;
  std::vector<std::size_t> prev_;
};

/// Face boundary as the cyclic list of darts whose left corner lies in it.
/// The corner of dart a sits between a and next_ccw(a).
struct Face {
  std::vector<std::size_t> darts;
};

/// Faces traced by a -> opposite(next_ccw(a)), ordered by least dart. Needs a
/// connected graph; for rank 0 the Euler formula is checked.
std::vector<Face> faces(const PlaneGraph& pg);
/// Face index of the corner of every dart.
std::vector<std::size_t> face_of_corner(const PlaneGraph& pg, const std::vector<Face>& fs);

/// Vertex and face colors with the base face colored zero.
struct DehnColoring {
  CoeffField field = CoeffField::rationals();
  VertexColoring vertex;
  std::vector<mpq_class> face;
  std::size_t base_face = 0;
};

/// Whether alpha(u) + gamma(right face) = alpha(w) + gamma(left face) holds
/// for every edge u -> w.
bool satisfies_dehn_condition(const PlaneGraph& pg, const DehnColoring& dc);

/// Integrates a conservative vertex coloring across edges, starting from the
/// base face. Throws if alpha is not conservative.
DehnColoring dehn_extend(const PlaneGraph& pg, const VertexColoring& alpha,
                         std::size_t base_face, const CoeffField& field);
VertexColoring dehn_restrict(const DehnColoring& dc);

/// One straight-ahead closed curve of the medial graph.
struct MedialComponent {
  /// Edges in the order they are crossed along one traversal.
  std::vector<std::size_t> crossings;
  /// Corners (dart indices) traversed, in order.
  std::vector<std::size_t> corners;
  /// Edges crossed exactly once, as a 0/1 vector over the edges.
  std::vector<int> residue;
  /// Net voltage along one traversal of the quotient trace (rank 1 only).
  long winding = 0;
};

/// Medial components traced through the rotation system, ordered by residue
/// (lexicographically, as 0/1 vectors) and then by least traversal state. Rank-1 input is traced in the quotient.
std::vector<MedialComponent> medial_components(const PlaneGraph& pg);

struct VoltageMedial {
  std::vector<MedialComponent> traces;
  /// Sum of |winding| over the quotient traces.
  std::size_t noncompact = 0;
  /// Quotient traces with zero winding: Z-orbits of closed components.
  std::size_t compact_orbits = 0;
};

VoltageMedial medial_components_voltage(const PlaneGraph& pg);

/// Residues of all components except `base_component`, as GF(2) columns.
/// Throws if they fail to form a basis of the GF(2) bicycle space.
ColoringBasis shank_basis(const PlaneGraph& pg, std::size_t base_component);

/// GF(2) Dehn coloring obtained by flipping color each time the given
/// component is crossed on a path from the base face.
DehnColoring component_coloring(const PlaneGraph& pg, const MedialComponent& component,
                                std::size_t base_face);

}  // namespace lapgraph
