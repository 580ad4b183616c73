#include "lapgraph/colorings.hpp"

#include <queue>

namespace lapgraph {

namespace {

CoeffField linear_field(const CoeffField& f) {
  return f.kind() == CoeffField::Kind::kIntegers ? CoeffField::rationals() : f;
}

}  // namespace

std::vector<mpq_class> basis_column(const ColoringBasis& b, std::size_t j) {
  std::vector<mpq_class> v(b.rows());
  for (std::size_t i = 0; i < b.rows(); ++i) v[i] = b.entries(i, j);
  return v;
}

ColoringBasis conservative_vertex_basis(const FiniteGraph& g, const CoeffField& field) {
  return nullspace(to_field(laplacian_finite(g), field));
}

ColoringBasis based_vertex_basis(const FiniteGraph& g, const CoeffField& field,
                                 std::size_t base) {
  if (base >= g.vertex_count()) throw Error("base vertex out of range");
  if (!is_connected(g)) throw Error("based colorings need a connected graph");
  IntMatrix l = laplacian_finite(g);
  const std::size_t n = g.vertex_count();
  IntMatrix aug(n + 1, n, mpz_class(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = l(i, j);
  aug(n, base) = 1;
  return nullspace(to_field(aug, field));
}

EdgeColoring edge_from_vertex(const FiniteGraph& g, const VertexColoring& alpha,
                              const CoeffField& field) {
  if (alpha.size() != g.vertex_count()) throw Error("vertex coloring has the wrong length");
  CoeffField f = linear_field(field);
  EdgeColoring beta(g.edge_count());
  for (std::size_t j = 0; j < g.edge_count(); ++j) {
    const Edge& e = g.edge(j);
    beta[j] = f.reduce(mpq_class(alpha[e.head] - alpha[e.tail]));
  }
  return beta;
}

EdgeCondition is_conservative_edge(const FiniteGraph& g, const EdgeColoring& beta,
                                   const CoeffField& field) {
  if (beta.size() != g.edge_count()) throw Error("edge coloring has the wrong length");
  CoeffField f = linear_field(field);
  const std::size_t n = g.vertex_count();
  // Integrate beta along a spanning forest; every non-tree edge then closes
  // exactly one fundamental cycle.
  std::vector<std::vector<std::size_t>> incident(n);
  for (std::size_t j = 0; j < g.edge_count(); ++j) {
    incident[g.edge(j).tail].push_back(j);
    if (!g.edge(j).is_loop()) incident[g.edge(j).head].push_back(j);
  }
  std::vector<bool> seen(n, false);
  std::vector<bool> tree_edge(g.edge_count(), false);
  std::vector<mpq_class> potential(n, mpq_class(0));
  for (std::size_t root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    std::queue<std::size_t> q;
    q.push(root);
    while (!q.empty()) {
      std::size_t v = q.front();
      q.pop();
      for (std::size_t j : incident[v]) {
        const Edge& e = g.edge(j);
        std::size_t w = e.tail == v ? e.head : e.tail;
        if (seen[w]) continue;
        seen[w] = true;
        tree_edge[j] = true;
        potential[w] = e.tail == v ? f.reduce(mpq_class(potential[v] + beta[j]))
                                   : f.reduce(mpq_class(potential[v] - beta[j]));
        q.push(w);
      }
    }
  }
  for (std::size_t j = 0; j < g.edge_count(); ++j) {
    if (tree_edge[j]) continue;
    const Edge& e = g.edge(j);
    mpq_class expected = f.reduce(mpq_class(potential[e.head] - potential[e.tail]));
    if (f.reduce(beta[j]) != expected) return EdgeCondition::kFailsCycle;
  }
  std::vector<mpq_class> net(n, mpq_class(0));
  for (std::size_t j = 0; j < g.edge_count(); ++j) {
    const Edge& e = g.edge(j);
    net[e.head] += beta[j];
    net[e.tail] -= beta[j];
  }
  for (const auto& v : net)
    if (f.reduce(v) != 0) return EdgeCondition::kFailsKirchhoff;
  return EdgeCondition::kConservative;
}

ColoringBasis bicycle_basis_by_image(const FiniteGraph& g, const CoeffField& field) {
  ColoringBasis kernel = conservative_vertex_basis(g, field);
  FieldMatrix qt = to_field(incidence_matrix(g).transpose(), field);
  return column_span_basis(multiply(qt, kernel));
}

ColoringBasis bicycle_basis_by_intersection(const FiniteGraph& g, const CoeffField& field) {
  FieldMatrix q = to_field(incidence_matrix(g), field);
  FieldMatrix cut = column_span_basis(FieldMatrix{q.field, q.entries.transpose()});
  FieldMatrix coefficients = nullspace(multiply(q, cut));
  return column_span_basis(multiply(cut, coefficients));
}

ColoringBasis bicycle_basis(const FiniteGraph& g, const CoeffField& field) {
  ColoringBasis a = bicycle_basis_by_image(g, field);
  ColoringBasis b = bicycle_basis_by_intersection(g, field);
  if (!(a.entries == b.entries)) throw Error("bicycle space routes disagree");
  return a;
}

}  // namespace lapgraph
