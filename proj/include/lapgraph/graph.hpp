#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "lapgraph/laurent.hpp"
#include "lapgraph/matrix.hpp"

namespace lapgraph {

struct Edge {
  std::string name;
  std::size_t tail;
  std::size_t head;

  bool is_loop() const { return tail == head; }
};

/// Finite multigraph with named vertices and oriented, named edges. Loops
/// and parallel edges are allowed. Vertex and edge order is insertion order.
class FiniteGraph {
 public:
  FiniteGraph() = default;

  /// Builds the graph with vertices named by `prefix` + index.
  static FiniteGraph with_vertices(std::size_t n, const std::string& prefix = "v");

  std::size_t add_vertex(std::string name);
  std::size_t add_edge(std::string name, std::size_t tail, std::size_t head);
  /// Adds an edge with a generated name "e<index>".
  std::size_t add_edge(std::size_t tail, std::size_t head);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::string& vertex_name(std::size_t v) const { return vertices_.at(v); }
  const Edge& edge(std::size_t e) const { return edges_.at(e); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::optional<std::size_t> find_vertex(const std::string& name) const;
  std::optional<std::size_t> find_edge(const std::string& name) const;

  /// Degree with loops counted twice.
  std::size_t degree(std::size_t v) const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, std::size_t> vertex_index_;
  std::unordered_map<std::string, std::size_t> edge_index_;
};

/// Element of Z^d stored in two slots; slots beyond the rank are zero.
using Voltage = std::array<long, 2>;

/// Quotient of a graph with cofinite free Z^d symmetry (d in {0, 1, 2}).
/// Edge j with voltage s runs from v_{tail,0} to v_{head,s}.
class VoltageGraph {
 public:
  VoltageGraph() = default;
  VoltageGraph(FiniteGraph base, int rank, std::vector<Voltage> voltages);
  /// Rank-0 wrapper around a finite graph.
  static VoltageGraph finite(FiniteGraph base);

  const FiniteGraph& base() const { return base_; }
  int rank() const { return rank_; }
  const Voltage& voltage(std::size_t e) const { return voltages_.at(e); }
  const std::vector<Voltage>& voltages() const { return voltages_; }

  /// Same periodic graph with edge e stored in the opposite orientation.
  VoltageGraph with_edge_reversed(std::size_t e) const;

 private:
  FiniteGraph base_;
  int rank_ = 0;
  std::vector<Voltage> voltages_;
};

/// Finite-index subgroup Lambda of Z^d with canonical coset representatives.
class Sublattice {
 public:
  /// Lambda = nZ.
  static Sublattice cyclic(long n);
  /// Lambda generated by the columns of [[m00, m01], [m10, m11]].
  static Sublattice planar(std::array<long, 4> row_major);
  /// n x n square sublattice (nZ)^2.
  static Sublattice square(long n) { return planar({n, 0, 0, n}); }

  int rank() const { return rank_; }
  /// Index r = |Z^d / Lambda|.
  std::size_t index() const { return static_cast<std::size_t>(a_ * c_); }
  /// Coset representatives in lexicographic order.
  std::vector<Voltage> representatives() const;
  /// Position of the coset of v within representatives().
  std::size_t coset_of(const Voltage& v) const;
  std::string label(std::size_t coset) const;

 private:
  // Hermite basis: columns (a, b) and (0, c) with a, c > 0 and 0 <= b < c.
  // For rank 1 only a is used (c = 1).
  int rank_ = 1;
  long a_ = 1;
  long b_ = 0;
  long c_ = 1;
};

/// Box of translates [0, n_0 - 1] x [0, n_1 - 1] (one extent per dimension).
struct RectangleSpec {
  std::vector<long> extents;

  std::size_t size() const;
};

IntMatrix incidence_matrix(const FiniteGraph& g);
IntMatrix laplacian_finite(const FiniteGraph& g);
/// L(x) = D - A(x) (or L(x, y)); loops contribute 2 - x^s - x^-s.
LaurentMatrix voltage_laplacian(const VoltageGraph& vg);
/// Constant Laplacian of a finite graph as a Laurent matrix.
LaurentMatrix constant_laplacian(const FiniteGraph& g);

/// The r-sheeted cover G_Lambda. Vertex v_i on coset c has index c * n + i.
FiniteGraph cover_graph(const VoltageGraph& vg, const Sublattice& lattice);
/// Full subgraph of the periodic graph on the translates in the box.
FiniteGraph restriction_subgraph(const VoltageGraph& vg, const RectangleSpec& rect);
/// Edges of the periodic graph starting in the box whose other end leaves it.
std::size_t wrapping_edge_count(const VoltageGraph& vg, const RectangleSpec& rect);

/// Connected components, each sorted, ordered by least vertex index.
std::vector<std::vector<std::size_t>> connected_components(const FiniteGraph& g);
bool is_connected(const FiniteGraph& g);

/// Subgraph with the listed vertices (and their edges) removed; voltages kept.
VoltageGraph delete_vertices(const VoltageGraph& vg, const std::vector<std::size_t>& vertices);

}  // namespace lapgraph
