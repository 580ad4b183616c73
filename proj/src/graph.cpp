#include "lapgraph/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <tuple>

namespace lapgraph {

// ---------------------------------------------------------------------------
// FiniteGraph

FiniteGraph FiniteGraph::with_vertices(std::size_t n, const std::string& prefix) {
  FiniteGraph g;
  for (std::size_t i = 0; i < n; ++i) g.add_vertex(prefix + std::to_string(i));
  return g;
}

std::size_t FiniteGraph::add_vertex(std::string name) {
  if (vertex_index_.count(name)) throw Error("duplicate vertex '" + name + "'");
  vertex_index_.emplace(name, vertices_.size());
  vertices_.push_back(std::move(name));
  return vertices_.size() - 1;
}

std::size_t FiniteGraph::add_edge(std::string name, std::size_t tail, std::size_t head) {
  if (tail >= vertices_.size() || head >= vertices_.size())
    throw Error("edge '" + name + "' names a missing vertex");
  if (edge_index_.count(name)) throw Error("duplicate edge '" + name + "'");
  edge_index_.emplace(name, edges_.size());
  edges_.push_back(Edge{std::move(name), tail, head});
  return edges_.size() - 1;
}

std::size_t FiniteGraph::add_edge(std::size_t tail, std::size_t head) {
  return add_edge("e" + std::to_string(edges_.size()), tail, head);
}

std::optional<std::size_t> FiniteGraph::find_vertex(const std::string& name) const {
  auto it = vertex_index_.find(name);
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> FiniteGraph::find_edge(const std::string& name) const {
  auto it = edge_index_.find(name);
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

std::size_t FiniteGraph::degree(std::size_t v) const {
  std::size_t d = 0;
  for (const auto& e : edges_) {
    if (e.tail == v) ++d;
    if (e.head == v) ++d;
  }
  return d;
}

// ---------------------------------------------------------------------------
// VoltageGraph

VoltageGraph::VoltageGraph(FiniteGraph base, int rank, std::vector<Voltage> voltages)
    : base_(std::move(base)), rank_(rank), voltages_(std::move(voltages)) {
  if (rank_ < 0 || rank_ > 2) throw Error("voltage rank must be 0, 1 or 2");
  if (voltages_.size() != base_.edge_count()) throw Error("one voltage per edge required");
  for (const auto& v : voltages_) {
    for (int k = rank_; k < 2; ++k)
      if (v[static_cast<std::size_t>(k)] != 0) throw Error("voltage exceeds the rank");
  }
}

VoltageGraph VoltageGraph::finite(FiniteGraph base) {
  std::vector<Voltage> zeros(base.edge_count(), Voltage{0, 0});
  return VoltageGraph(std::move(base), 0, std::move(zeros));
}

VoltageGraph VoltageGraph::with_edge_reversed(std::size_t e) const {
  FiniteGraph g;
  for (std::size_t v = 0; v < base_.vertex_count(); ++v) g.add_vertex(base_.vertex_name(v));
  std::vector<Voltage> volts = voltages_;
  for (std::size_t j = 0; j < base_.edge_count(); ++j) {
    const Edge& ed = base_.edge(j);
    if (j == e) {
      g.add_edge(ed.name, ed.head, ed.tail);
      volts[j] = {-volts[j][0], -volts[j][1]};
    } else {
      g.add_edge(ed.name, ed.tail, ed.head);
    }
  }
  return VoltageGraph(std::move(g), rank_, std::move(volts));
}

// ---------------------------------------------------------------------------
// Sublattice

namespace {

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long floor_mod(long a, long b) { return a - floor_div(a, b) * b; }

// Returns g = gcd(a, b) >= 0 with a*u + b*v = g.
long ext_gcd(long a, long b, long& u, long& v) {
  long old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    long q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
    std::tie(old_t, t) = std::make_pair(t, old_t - q * t);
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  u = old_s;
  v = old_t;
  return old_r;
}

}  // namespace

Sublattice Sublattice::cyclic(long n) {
  if (n == 0) throw Error("sublattice of infinite index");
  Sublattice s;
  s.rank_ = 1;
  s.a_ = n < 0 ? -n : n;
  return s;
}

Sublattice Sublattice::planar(std::array<long, 4> m) {
  // Columns (m0, m2) and (m1, m3).
  long det = m[0] * m[3] - m[1] * m[2];
  if (det == 0) throw Error("sublattice of infinite index");
  long u = 0, v = 0;
  long g = ext_gcd(m[0], m[1], u, v);
  // Unimodular column operation: col1' = u*c1 + v*c2 has top entry g, and
  // col2' = (-m1/g)*c1 + (m0/g)*c2 has top entry 0.
  long f = u * m[2] + v * m[3];
  long e = (-m[1] / g) * m[2] + (m[0] / g) * m[3];
  if (e < 0) e = -e;
  Sublattice s;
  s.rank_ = 2;
  s.a_ = g;
  s.c_ = e;
  s.b_ = floor_mod(f, e);
  return s;
}

std::vector<Voltage> Sublattice::representatives() const {
  std::vector<Voltage> reps;
  if (rank_ == 1) {
    for (long i = 0; i < a_; ++i) reps.push_back({i, 0});
    return reps;
  }
  for (long i = 0; i < a_; ++i)
    for (long j = 0; j < c_; ++j) reps.push_back({i, j});
  return reps;
}

std::size_t Sublattice::coset_of(const Voltage& v) const {
  if (rank_ == 1) return static_cast<std::size_t>(floor_mod(v[0], a_));
  long k = floor_div(v[0], a_);
  long i = v[0] - k * a_;
  long j = floor_mod(v[1] - k * b_, c_);
  return static_cast<std::size_t>(i * c_ + j);
}

std::string Sublattice::label(std::size_t coset) const {
  if (coset >= index()) throw Error("coset index out of range");
  const long k = static_cast<long>(coset);
  if (rank_ == 1) return std::to_string(k);
  return "(" + std::to_string(k / c_) + "," + std::to_string(k % c_) + ")";
}

std::size_t RectangleSpec::size() const {
  std::size_t s = 1;
  for (long n : extents) s *= static_cast<std::size_t>(n);
  return s;
}

// ---------------------------------------------------------------------------
// Matrices

IntMatrix incidence_matrix(const FiniteGraph& g) {
  IntMatrix q(g.vertex_count(), g.edge_count(), mpz_class(0));
  for (std::size_t j = 0; j < g.edge_count(); ++j) {
    const Edge& e = g.edge(j);
    if (e.is_loop()) continue;
    q(e.head, j) += 1;
    q(e.tail, j) -= 1;
  }
  return q;
}

IntMatrix laplacian_finite(const FiniteGraph& g) {
  const std::size_t n = g.vertex_count();
  IntMatrix l(n, n, mpz_class(0));
  for (const auto& e : g.edges()) {
    l(e.tail, e.tail) += 1;
    l(e.head, e.head) += 1;
    if (e.is_loop()) {
      l(e.tail, e.tail) -= 2;
    } else {
      l(e.tail, e.head) -= 1;
      l(e.head, e.tail) -= 1;
    }
  }
  return l;
}

LaurentMatrix voltage_laplacian(const VoltageGraph& vg) {
  if (vg.rank() == 0) throw Error("voltage_laplacian needs d >= 1; use laplacian_finite");
  const int nvars = vg.rank();
  const FiniteGraph& g = vg.base();
  const std::size_t n = g.vertex_count();
  LaurentMatrix l(n, n, LaurentPoly(nvars));
  for (std::size_t j = 0; j < g.edge_count(); ++j) {
    const Edge& e = g.edge(j);
    const Voltage& s = vg.voltage(j);
    l(e.tail, e.tail).add_term({0, 0}, 1);
    l(e.head, e.head).add_term({0, 0}, 1);
    l(e.tail, e.head).add_term({s[0], s[1]}, -1);
    l(e.head, e.tail).add_term({-s[0], -s[1]}, -1);
  }
  return l;
}

LaurentMatrix constant_laplacian(const FiniteGraph& g) {
  IntMatrix l = laplacian_finite(g);
  LaurentMatrix r(l.rows(), l.cols(), LaurentPoly(1));
  for (std::size_t i = 0; i < l.rows(); ++i)
    for (std::size_t j = 0; j < l.cols(); ++j) r(i, j) = LaurentPoly::constant(l(i, j));
  return r;
}

// ---------------------------------------------------------------------------
// Covers and restrictions

FiniteGraph cover_graph(const VoltageGraph& vg, const Sublattice& lattice) {
  if (vg.rank() != lattice.rank()) throw Error("sublattice rank differs from the voltage rank");
  const FiniteGraph& g = vg.base();
  const std::size_t n = g.vertex_count();
  const auto reps = lattice.representatives();
  FiniteGraph cover;
  for (std::size_t c = 0; c < reps.size(); ++c)
    for (std::size_t i = 0; i < n; ++i)
      cover.add_vertex(g.vertex_name(i) + "@" + lattice.label(c));
  for (std::size_t c = 0; c < reps.size(); ++c) {
    for (std::size_t j = 0; j < g.edge_count(); ++j) {
      const Edge& e = g.edge(j);
      const Voltage& s = vg.voltage(j);
      Voltage target{reps[c][0] + s[0], reps[c][1] + s[1]};
      std::size_t c2 = lattice.coset_of(target);
      cover.add_edge(e.name + "@" + lattice.label(c), c * n + e.tail, c2 * n + e.head);
    }
  }
  return cover;
}

namespace {

// Enumerates the box in lexicographic order.
std::vector<Voltage> box_points(const RectangleSpec& rect, int rank) {
  if (static_cast<int>(rect.extents.size()) != rank)
    throw Error("rectangle dimension differs from the voltage rank");
  for (long n : rect.extents)
    if (n < 1) throw Error("empty rectangle");
  std::vector<Voltage> pts;
  if (rank == 1) {
    for (long i = 0; i < rect.extents[0]; ++i) pts.push_back({i, 0});
  } else {
    for (long i = 0; i < rect.extents[0]; ++i)
      for (long j = 0; j < rect.extents[1]; ++j) pts.push_back({i, j});
  }
  return pts;
}

std::optional<std::size_t> box_index(const RectangleSpec& rect, const Voltage& v) {
  for (std::size_t k = 0; k < rect.extents.size(); ++k)
    if (v[k] < 0 || v[k] >= rect.extents[k]) return std::nullopt;
  if (rect.extents.size() == 1) return static_cast<std::size_t>(v[0]);
  return static_cast<std::size_t>(v[0] * rect.extents[1] + v[1]);
}

std::string point_label(const Voltage& p, int rank) {
  if (rank == 1) return std::to_string(p[0]);
  return "(" + std::to_string(p[0]) + "," + std::to_string(p[1]) + ")";
}

}  // namespace

FiniteGraph restriction_subgraph(const VoltageGraph& vg, const RectangleSpec& rect) {
  if (vg.rank() == 0) throw Error("restriction needs a periodic graph");
  const FiniteGraph& g = vg.base();
  const std::size_t n = g.vertex_count();
  const auto pts = box_points(rect, vg.rank());
  FiniteGraph sub;
  for (const auto& p : pts)
    for (std::size_t i = 0; i < n; ++i)
      sub.add_vertex(g.vertex_name(i) + "@" + point_label(p, vg.rank()));
  for (std::size_t c = 0; c < pts.size(); ++c) {
    for (std::size_t j = 0; j < g.edge_count(); ++j) {
      const Edge& e = g.edge(j);
      const Voltage& s = vg.voltage(j);
      auto c2 = box_index(rect, {pts[c][0] + s[0], pts[c][1] + s[1]});
      if (!c2) continue;
      sub.add_edge(e.name + "@" + point_label(pts[c], vg.rank()), c * n + e.tail,
                   *c2 * n + e.head);
    }
  }
  return sub;
}

std::size_t wrapping_edge_count(const VoltageGraph& vg, const RectangleSpec& rect) {
  const auto pts = box_points(rect, vg.rank());
  std::size_t count = 0;
  for (const auto& p : pts)
    for (std::size_t j = 0; j < vg.base().edge_count(); ++j) {
      const Voltage& s = vg.voltage(j);
      if (!box_index(rect, {p[0] + s[0], p[1] + s[1]})) ++count;
    }
  return count;
}

std::vector<std::vector<std::size_t>> connected_components(const FiniteGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& e : g.edges()) {
    adj[e.tail].push_back(e.head);
    adj[e.head].push_back(e.tail);
  }
  std::vector<bool> seen(n, false);
  std::vector<std::vector<std::size_t>> comps;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> comp;
    std::queue<std::size_t> q;
    q.push(s);
    seen[s] = true;
    while (!q.empty()) {
      std::size_t v = q.front();
      q.pop();
      comp.push_back(v);
      for (std::size_t w : adj[v]) {
        if (!seen[w]) {
          seen[w] = true;
          q.push(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const FiniteGraph& g) { return connected_components(g).size() <= 1; }

VoltageGraph delete_vertices(const VoltageGraph& vg, const std::vector<std::size_t>& vertices) {
  const FiniteGraph& g = vg.base();
  std::vector<bool> removed(g.vertex_count(), false);
  for (auto v : vertices) removed.at(v) = true;
  std::vector<std::size_t> remap(g.vertex_count(), 0);
  FiniteGraph h;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (removed[v]) continue;
    remap[v] = h.add_vertex(g.vertex_name(v));
  }
  std::vector<Voltage> volts;
  for (std::size_t j = 0; j < g.edge_count(); ++j) {
    const Edge& e = g.edge(j);
    if (removed[e.tail] || removed[e.head]) continue;
    h.add_edge(e.name, remap[e.tail], remap[e.head]);
    volts.push_back(vg.voltage(j));
  }
  return VoltageGraph(std::move(h), vg.rank(), std::move(volts));
}

}  // namespace lapgraph
