#include "lapgraph/planar.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>

namespace lapgraph {

PlaneGraph::PlaneGraph(VoltageGraph graph, Rotation rotation)
    : graph_(std::move(graph)), rotation_(std::move(rotation)) {
  if (graph_.rank() > 1) throw Error("rotation systems are supported for d <= 1");
  const FiniteGraph& g = graph_.base();
  if (rotation_.size() != g.vertex_count())
    throw Error("rotation system needs one cyclic order per vertex");
  const std::size_t darts = 2 * g.edge_count();
  next_.assign(darts, darts);
  prev_.assign(darts, darts);
  std::vector<bool> seen(darts, false);
  for (std::size_t v = 0; v < rotation_.size(); ++v) {
    const auto& cyc = rotation_[v];
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      std::size_t d = cyc[k];
      if (d >= darts) throw Error("rotation names a missing edge end");
      if (seen[d]) throw Error("edge end " + dart_name(d) + " appears twice in the rotation");
      seen[d] = true;
      if (vertex_of(d) != v)
        throw Error("edge end " + dart_name(d) + " is not incident to " + g.vertex_name(v));
      std::size_t nd = cyc[(k + 1) % cyc.size()];
      next_[d] = nd;
      prev_[nd] = d;
    }
  }
  for (std::size_t d = 0; d < darts; ++d)
    if (!seen[d]) throw Error("edge end " + dart_name(d) + " is missing from the rotation");
}

std::size_t PlaneGraph::vertex_of(std::size_t dart) const {
  const Edge& e = base().edge(dart_edge(dart));
  return (dart & 1U) ? e.head : e.tail;
}

long PlaneGraph::dart_voltage(std::size_t dart) const {
  if (graph_.rank() == 0) return 0;
  long s = graph_.voltage(dart_edge(dart))[0];
  return (dart & 1U) ? -s : s;
}

std::string PlaneGraph::dart_name(std::size_t dart) const {
  return base().edge(dart_edge(dart)).name + ((dart & 1U) ? ".h" : ".t");
}

std::vector<Face> faces(const PlaneGraph& pg) {
  const FiniteGraph& g = pg.base();
  if (!is_connected(g)) throw Error("faces need a connected graph");
  std::vector<Face> out;
  const std::size_t darts = pg.dart_count();
  if (darts == 0) {
    out.push_back(Face{});
    return out;
  }
  std::vector<bool> seen(darts, false);
  for (std::size_t start = 0; start < darts; ++start) {
    if (seen[start]) continue;
    Face f;
    std::size_t d = start;
    do {
      seen[d] = true;
      f.darts.push_back(d);
      d = pg.opposite(pg.next_ccw(d));
    } while (d != start);
    out.push_back(std::move(f));
  }
  if (pg.graph().rank() == 0) {
    long euler = static_cast<long>(g.vertex_count()) - static_cast<long>(g.edge_count()) +
                 static_cast<long>(out.size());
    if (euler != 2) throw Error("rotation system is not planar (Euler characteristic " +
                                std::to_string(euler) + ")");
  }
  return out;
}

std::vector<std::size_t> face_of_corner(const PlaneGraph& pg, const std::vector<Face>& fs) {
  std::vector<std::size_t> owner(pg.dart_count(), 0);
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t d : fs[i].darts) owner[d] = i;
  return owner;
}

bool satisfies_dehn_condition(const PlaneGraph& pg, const DehnColoring& dc) {
  const CoeffField& f = dc.field;
  if (dc.face.empty() || f.reduce(dc.face.at(dc.base_face)) != 0) return false;
  auto fs = faces(pg);
  auto owner = face_of_corner(pg, fs);
  for (std::size_t e = 0; e < pg.base().edge_count(); ++e) {
    std::size_t a = tail_dart(e);
    std::size_t u = pg.vertex_of(a);
    std::size_t w = pg.vertex_of(pg.opposite(a));
    const mpq_class& left = dc.face[owner[a]];
    const mpq_class& right = dc.face[owner[pg.prev_ccw(a)]];
    if (f.reduce(mpq_class(dc.vertex[u] + right - dc.vertex[w] - left)) != 0) return false;
  }
  return true;
}

DehnColoring dehn_extend(const PlaneGraph& pg, const VertexColoring& alpha,
                         std::size_t base_face, const CoeffField& field) {
  const FiniteGraph& g = pg.base();
  if (alpha.size() != g.vertex_count()) throw Error("vertex coloring has the wrong length");
  CoeffField f = field.kind() == CoeffField::Kind::kIntegers ? CoeffField::rationals() : field;
  FieldMatrix l = to_field(laplacian_finite(g), f);
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    mpq_class s = 0;
    for (std::size_t j = 0; j < g.vertex_count(); ++j) s += l.entries(i, j) * alpha[j];
    if (f.reduce(s) != 0) throw Error("vertex coloring is not conservative");
  }
  auto fs = faces(pg);
  if (base_face >= fs.size()) throw Error("base face out of range");
  auto owner = face_of_corner(pg, fs);

  // Crossing dart a from its right face to its left face adds alpha(u) - alpha(w).
  struct Step {
    std::size_t to;
    mpq_class delta;
  };
  std::vector<std::vector<Step>> dual(fs.size());
  for (std::size_t a = 0; a < pg.dart_count(); ++a) {
    std::size_t u = pg.vertex_of(a);
    std::size_t w = pg.vertex_of(pg.opposite(a));
    std::size_t left = owner[a];
    std::size_t right = owner[pg.prev_ccw(a)];
    mpq_class delta = f.reduce(mpq_class(alpha[u] - alpha[w]));
    dual[right].push_back({left, delta});
  }
  DehnColoring dc;
  dc.field = f;
  dc.vertex.resize(alpha.size());
  for (std::size_t i = 0; i < alpha.size(); ++i) dc.vertex[i] = f.reduce(alpha[i]);
  dc.face.assign(fs.size(), mpq_class(0));
  dc.base_face = base_face;
  std::vector<bool> done(fs.size(), false);
  std::queue<std::size_t> q;
  q.push(base_face);
  done[base_face] = true;
  while (!q.empty()) {
    std::size_t r = q.front();
    q.pop();
    for (const auto& step : dual[r]) {
      if (done[step.to]) continue;
      done[step.to] = true;
      dc.face[step.to] = f.reduce(mpq_class(dc.face[r] + step.delta));
      q.push(step.to);
    }
  }
  if (!satisfies_dehn_condition(pg, dc)) throw Error("face integration is path dependent");
  return dc;
}

VertexColoring dehn_restrict(const DehnColoring& dc) { return dc.vertex; }

namespace {

// Traversal states: 2*a is corner(a) walked counterclockwise (from edge(a)
// towards edge(next_ccw(a))), 2*a + 1 the same corner walked backwards.
struct Step {
  std::size_t next;
  std::size_t crossed_edge;
  long voltage;
};

Step advance(const PlaneGraph& pg, std::size_t state) {
  std::size_t a = state / 2;
  if (state % 2 == 0) {
    std::size_t b = pg.next_ccw(a);
    std::size_t a1 = pg.prev_ccw(pg.opposite(b));
    return {2 * a1 + 1, dart_edge(b), pg.dart_voltage(b)};
  }
  return {2 * pg.opposite(a), dart_edge(a), pg.dart_voltage(a)};
}

std::size_t reverse_state(std::size_t state) { return state ^ 1U; }

}  // namespace

std::vector<MedialComponent> medial_components(const PlaneGraph& pg) {
  const std::size_t m = pg.base().edge_count();
  const std::size_t states = 2 * pg.dart_count();
  std::vector<bool> visited(states, false);
  std::vector<MedialComponent> out;
  for (std::size_t start = 0; start < states; ++start) {
    if (visited[start]) continue;
    MedialComponent comp;
    comp.residue.assign(m, 0);
    std::vector<int> count(m, 0);
    std::size_t s = start;
    do {
      visited[s] = true;
      visited[reverse_state(s)] = true;
      comp.corners.push_back(s / 2);
      Step step = advance(pg, s);
      comp.crossings.push_back(step.crossed_edge);
      ++count[step.crossed_edge];
      comp.winding += step.voltage;
      s = step.next;
    } while (s != start);
    for (std::size_t e = 0; e < m; ++e) comp.residue[e] = count[e] == 1 ? 1 : 0;
    out.push_back(std::move(comp));
  }
  std::stable_sort(out.begin(), out.end(), [](const MedialComponent& a, const MedialComponent& b) {
    return a.residue < b.residue;
  });
  return out;
}

VoltageMedial medial_components_voltage(const PlaneGraph& pg) {
  if (pg.graph().rank() != 1) throw Error("voltage medial tracing needs d = 1");
  VoltageMedial vm;
  vm.traces = medial_components(pg);
  for (const auto& c : vm.traces) {
    if (c.winding == 0) ++vm.compact_orbits;
    else vm.noncompact += static_cast<std::size_t>(std::labs(c.winding));
  }
  return vm;
}

ColoringBasis shank_basis(const PlaneGraph& pg, std::size_t base_component) {
  if (pg.graph().rank() != 0) throw Error("Shank basis needs a finite plane graph");
  if (!is_connected(pg.base())) throw Error("Shank basis needs a connected graph");
  auto comps = medial_components(pg);
  if (base_component >= comps.size()) throw Error("base component out of range");
  const CoeffField gf2 = CoeffField::prime(2);
  const std::size_t m = pg.base().edge_count();
  ColoringBasis residues{gf2, Matrix<mpq_class>(m, comps.size() - 1, mpq_class(0))};
  std::size_t col = 0;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    if (c == base_component) continue;
    for (std::size_t e = 0; e < m; ++e) residues.entries(e, col) = comps[c].residue[e];
    ++col;
  }
  ColoringBasis bicycles = bicycle_basis(pg.base(), gf2);
  if (rank(residues) != residues.cols() || !same_column_span(residues, bicycles))
    throw Error("medial residues do not form a basis of the bicycle space");
  return residues;
}

DehnColoring component_coloring(const PlaneGraph& pg, const MedialComponent& component,
                                std::size_t base_face) {
  const FiniteGraph& g = pg.base();
  auto fs = faces(pg);
  if (base_face >= fs.size()) throw Error("base face out of range");
  auto owner = face_of_corner(pg, fs);
  std::vector<int> on_curve(pg.dart_count(), 0);
  for (std::size_t a : component.corners) on_curve[a] = 1;
  // Regions: vertices first, then faces. Corner a separates vertex_of(a)
  // from the face owning it.
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::pair<std::size_t, int>>> adj(n + fs.size());
  for (std::size_t a = 0; a < pg.dart_count(); ++a) {
    std::size_t v = pg.vertex_of(a);
    std::size_t r = n + owner[a];
    adj[v].push_back({r, on_curve[a]});
    adj[r].push_back({v, on_curve[a]});
  }
  std::vector<int> color(n + fs.size(), -1);
  std::queue<std::size_t> q;
  color[n + base_face] = 0;
  q.push(n + base_face);
  while (!q.empty()) {
    std::size_t r = q.front();
    q.pop();
    for (auto [t, flip] : adj[r]) {
      int c = color[r] ^ flip;
      if (color[t] < 0) {
        color[t] = c;
        q.push(t);
      } else if (color[t] != c) {
        throw Error("component coloring is inconsistent");
      }
    }
  }
  DehnColoring dc;
  dc.field = CoeffField::prime(2);
  dc.base_face = base_face;
  for (std::size_t v = 0; v < n; ++v) dc.vertex.push_back(color[v] < 0 ? 0 : color[v]);
  for (std::size_t f = 0; f < fs.size(); ++f) dc.face.push_back(color[n + f] < 0 ? 0 : color[n + f]);
  return dc;
}

}  // namespace lapgraph
