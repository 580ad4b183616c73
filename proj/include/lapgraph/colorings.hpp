#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "lapgraph/field.hpp"
#include "lapgraph/graph.hpp"
#include "lapgraph/linalg.hpp"

namespace lapgraph {

/// Basis of a coloring space; each column is one coloring.
using ColoringBasis = FieldMatrix;
using VertexColoring = std::vector<mpq_class>;
using EdgeColoring = std::vector<mpq_class>;

/// Basis of ker L: vertex colorings satisfying the Laplacian vertex condition.
ColoringBasis conservative_vertex_basis(const FiniteGraph& g, const CoeffField& field);

/// Conservative colorings vanishing at `base`. Throws on disconnected input.
ColoringBasis based_vertex_basis(const FiniteGraph& g, const CoeffField& field,
                                 std::size_t base);

/// beta = Q^T alpha: an edge from u to w gets alpha(w) - alpha(u).
EdgeColoring edge_from_vertex(const FiniteGraph& g, const VertexColoring& alpha,
                              const CoeffField& field);

enum class EdgeCondition { kConservative, kFailsCycle, kFailsKirchhoff };

/// Cycle condition on a fundamental cycle basis, then Kirchhoff at every
/// vertex. When both fail the cycle failure is reported.
EdgeCondition is_conservative_edge(const FiniteGraph& g, const EdgeColoring& beta,
                                   const CoeffField& field);

/// Bicycle space W ∩ W^⊥ as a canonical (row-reduced) basis. Computed as the
/// image of ker L under Q^T and, independently, as the intersection of the
/// cut space with ker Q; throws if the two disagree.
ColoringBasis bicycle_basis(const FiniteGraph& g, const CoeffField& field);

/// The two routes used by bicycle_basis, exposed for testing.
ColoringBasis bicycle_basis_by_image(const FiniteGraph& g, const CoeffField& field);
ColoringBasis bicycle_basis_by_intersection(const FiniteGraph& g, const CoeffField& field);

/// Column j of a basis as a coloring vector.
std::vector<mpq_class> basis_column(const ColoringBasis& b, std::size_t j);

}  // namespace lapgraph
