#pragma once

// Independent reference implementations and random instance generators used
// only by the tests.

#include <gmpxx.h>

#include <algorithm>
#include <numeric>
#include <queue>
#include <random>
#include <string>
#include <vector>

#include "lapgraph/graph.hpp"
#include "lapgraph/laurent.hpp"
#include "lapgraph/planar.hpp"

namespace oracle {

using namespace lapgraph;

#ifndef LAPGRAPH_DATA_DIR
#define LAPGRAPH_DATA_DIR "data"
#endif

inline std::string data_path(const std::string& name) {
  return std::string(LAPGRAPH_DATA_DIR) + "/" + name;
}

struct Dsu {
  std::vector<std::size_t> p;
  explicit Dsu(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  std::size_t find(std::size_t v) { return p[v] == v ? v : p[v] = find(p[v]); }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    p[a] = b;
    return true;
  }
};

/// Spanning trees by enumerating all (n-1)-edge subsets.
inline mpz_class tree_count_by_subsets(const FiniteGraph& g) {
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  if (n <= 1) return 1;
  mpz_class count = 0;
  for (unsigned mask = 0; mask < (1U << m); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != n - 1) continue;
    Dsu d(n);
    bool ok = true;
    for (std::size_t e = 0; e < m && ok; ++e)
      if (mask & (1U << e)) ok = d.unite(g.edge(e).tail, g.edge(e).head);
    if (ok) ++count;
  }
  return count;
}

/// Connected components by breadth-first search, as a component label per vertex.
inline std::vector<std::size_t> bfs_labels(const FiniteGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& e : g.edges()) {
    adj[e.tail].push_back(e.head);
    adj[e.head].push_back(e.tail);
  }
  std::vector<std::size_t> label(n, n);
  std::size_t next = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (label[s] != n) continue;
    std::queue<std::size_t> q;
    q.push(s);
    label[s] = next;
    while (!q.empty()) {
      std::size_t u = q.front();
      q.pop();
      for (std::size_t w : adj[u])
        if (label[w] == n) {
          label[w] = next;
          q.push(w);
        }
    }
    ++next;
  }
  return label;
}

/// Determinant by Laplace expansion along the first row.
inline mpz_class cofactor_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  mpz_class det = 0;
  std::vector<std::size_t> rows;
  for (std::size_t i = 1; i < n; ++i) rows.push_back(i);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::size_t> cols;
    for (std::size_t c = 0; c < n; ++c)
      if (c != j) cols.push_back(c);
    mpz_class t = m(0, j) * cofactor_det(m.select(rows, cols));
    det += (j % 2 == 0) ? t : mpz_class(-t);
  }
  return det;
}

/// Determinant of a Laurent matrix by the Leibniz permutation sum.
inline LaurentPoly leibniz_det(const LaurentMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  LaurentPoly det(m(0, 0).nvars(), m(0, 0).field());
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    LaurentPoly t = LaurentPoly::constant(inversions % 2 ? -1 : 1, m(0, 0).nvars(), m(0, 0).field());
    for (std::size_t i = 0; i < n; ++i) t *= m(i, perm[i]);
    det += t;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

/// gcd of all k x k minors by explicit enumeration; zero if all vanish.
inline LaurentPoly brute_minor_gcd(const LaurentMatrix& m, std::size_t size) {
  const std::size_t n = m.rows();
  LaurentPoly g(m(0, 0).nvars(), m(0, 0).field());
  std::vector<std::size_t> rows, cols;
  for (unsigned rm = 0; rm < (1U << n); ++rm) {
    if (static_cast<std::size_t>(__builtin_popcount(rm)) != size) continue;
    for (unsigned cm = 0; cm < (1U << n); ++cm) {
      if (static_cast<std::size_t>(__builtin_popcount(cm)) != size) continue;
      rows.clear();
      cols.clear();
      for (std::size_t i = 0; i < n; ++i) {
        if (rm & (1U << i)) rows.push_back(i);
        if (cm & (1U << i)) cols.push_back(i);
      }
      g = gcd(g, leibniz_det(m.select(rows, cols)));
    }
  }
  return g;
}

/// Degree sequence plus sorted neighbour-degree lists.
inline std::vector<std::vector<std::size_t>> degree_certificate(const FiniteGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::size_t>> nbr(n);
  for (const auto& e : g.edges()) {
    nbr[e.tail].push_back(g.degree(e.head));
    nbr[e.head].push_back(g.degree(e.tail));
  }
  std::vector<std::vector<std::size_t>> cert;
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(nbr[v].begin(), nbr[v].end());
    std::vector<std::size_t> row{g.degree(v)};
    row.insert(row.end(), nbr[v].begin(), nbr[v].end());
    cert.push_back(row);
  }
  std::sort(cert.begin(), cert.end());
  return cert;
}

inline FiniteGraph random_multigraph(std::mt19937_64& rng, std::size_t n, std::size_t m,
                                     bool loops = true) {
  FiniteGraph g = FiniteGraph::with_vertices(n);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::size_t e = 0; e < m; ++e) {
    std::size_t a = pick(rng);
    std::size_t b = pick(rng);
    if (!loops)
      while (n > 1 && b == a) b = pick(rng);
    g.add_edge(a, b);
  }
  return g;
}

/// Random connected multigraph: a random tree plus extra random edges.
inline FiniteGraph random_connected(std::mt19937_64& rng, std::size_t n, std::size_t m,
                                    bool loops = true) {
  FiniteGraph g = FiniteGraph::with_vertices(n);
  for (std::size_t v = 1; v < n; ++v) {
    std::uniform_int_distribution<std::size_t> pick(0, v - 1);
    std::size_t u = pick(rng);
    if (rng() % 2) g.add_edge(u, v);
    else g.add_edge(v, u);
  }
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  while (g.edge_count() < m) {
    std::size_t a = pick(rng);
    std::size_t b = pick(rng);
    if (!loops && a == b) continue;
    g.add_edge(a, b);
  }
  return g;
}

struct MapBuilder {
  FiniteGraph graph;
  Rotation rotation;

  // Inserts `dart` immediately after `after` in the rotation at v.
  void insert_after(std::size_t v, std::size_t after, std::size_t dart) {
    auto& r = rotation[v];
    auto it = std::find(r.begin(), r.end(), after);
    r.insert(it + 1, dart);
  }
};

/// Random connected plane map grown by pendant edges and face-splitting
/// edges (loops and parallel edges included). Edge orientations are random.
inline PlaneGraph random_plane_map(std::mt19937_64& rng, std::size_t max_vertices,
                                   std::size_t edges) {
  MapBuilder b;
  b.graph.add_vertex("v0");
  b.rotation.emplace_back();
  while (b.graph.edge_count() < edges) {
    const std::size_t e = b.graph.edge_count();
    bool pendant = b.graph.vertex_count() < max_vertices && (rng() % 2 == 0);
    if (b.graph.edge_count() == 0) {
      if (pendant || max_vertices > 1) {
        std::size_t w = b.graph.add_vertex("v1");
        b.rotation.emplace_back();
        bool out = rng() % 2;
        b.graph.add_edge("e0", out ? 0 : w, out ? w : 0);
        b.rotation[0].push_back(out ? tail_dart(0) : head_dart(0));
        b.rotation[w].push_back(out ? head_dart(0) : tail_dart(0));
      } else {
        b.graph.add_edge("e0", 0, 0);
        b.rotation[0] = {tail_dart(0), head_dart(0)};
      }
      continue;
    }
    PlaneGraph pg(VoltageGraph::finite(b.graph), b.rotation);
    std::uniform_int_distribution<std::size_t> dart_pick(0, pg.dart_count() - 1);
    if (pendant) {
      std::size_t a = dart_pick(rng);
      std::size_t u = pg.vertex_of(a);
      std::size_t w = b.graph.add_vertex("v" + std::to_string(b.graph.vertex_count()));
      b.rotation.emplace_back();
      bool out = rng() % 2;
      b.graph.add_edge("e" + std::to_string(e), out ? u : w, out ? w : u);
      std::size_t at_u = out ? tail_dart(e) : head_dart(e);
      b.insert_after(u, a, at_u);
      b.rotation[w].push_back(at_u ^ 1U);
      continue;
    }
    auto fs = faces(pg);
    std::uniform_int_distribution<std::size_t> face_pick(0, fs.size() - 1);
    const Face& f = fs[face_pick(rng)];
    std::uniform_int_distribution<std::size_t> corner_pick(0, f.darts.size() - 1);
    std::size_t a = f.darts[corner_pick(rng)];
    std::size_t c = f.darts[corner_pick(rng)];
    std::size_t u = pg.vertex_of(a);
    std::size_t w = pg.vertex_of(c);
    bool flip = rng() % 2;
    b.graph.add_edge("e" + std::to_string(e), flip ? w : u, flip ? u : w);
    std::size_t at_u = flip ? head_dart(e) : tail_dart(e);
    std::size_t at_w = at_u ^ 1U;
    if (a == c) {
      b.insert_after(u, a, at_u);
      b.insert_after(u, at_u, at_w);
    } else {
      b.insert_after(u, a, at_u);
      b.insert_after(w, c, at_w);
    }
  }
  return PlaneGraph(VoltageGraph::finite(b.graph), b.rotation);
}

/// Annulus quotient: a random plane map with two distinct faces removed.
/// Voltages count signed crossings of a dual path between the two holes, so
/// the Z-cover is the universal cover of the annulus and is planar.
/// Returns false if the map has a single face.
inline bool random_annulus_quotient(std::mt19937_64& rng, std::size_t max_vertices,
                                    std::size_t edges, PlaneGraph& out) {
  PlaneGraph pg = random_plane_map(rng, max_vertices, edges);
  auto fs = faces(pg);
  if (fs.size() < 2) return false;
  auto owner = face_of_corner(pg, fs);
  std::uniform_int_distribution<std::size_t> pick(0, fs.size() - 1);
  std::size_t s = pick(rng);
  std::size_t t = pick(rng);
  while (t == s) t = pick(rng);
  // Dual BFS. Crossing edge e from the right of its tail dart to the left
  // adds +1 to its voltage.
  const std::size_t m = pg.base().edge_count();
  std::vector<std::vector<std::pair<std::size_t, std::pair<std::size_t, int>>>> dual(fs.size());
  for (std::size_t e = 0; e < m; ++e) {
    std::size_t a = tail_dart(e);
    std::size_t left = owner[a];
    std::size_t right = owner[pg.prev_ccw(a)];
    dual[right].push_back({left, {e, +1}});
    dual[left].push_back({right, {e, -1}});
  }
  std::vector<long> from_edge(fs.size(), -1);
  std::vector<int> from_sign(fs.size(), 0);
  std::vector<std::size_t> from_face(fs.size(), fs.size());
  std::vector<bool> seen(fs.size(), false);
  std::queue<std::size_t> q;
  q.push(s);
  seen[s] = true;
  while (!q.empty()) {
    std::size_t f = q.front();
    q.pop();
    for (const auto& [g, es] : dual[f]) {
      if (seen[g]) continue;
      seen[g] = true;
      from_face[g] = f;
      from_edge[g] = static_cast<long>(es.first);
      from_sign[g] = es.second;
      q.push(g);
    }
  }
  std::vector<Voltage> volts(m, Voltage{0, 0});
  for (std::size_t f = t; f != s; f = from_face[f])
    volts[static_cast<std::size_t>(from_edge[f])][0] += from_sign[f];
  out = PlaneGraph(VoltageGraph(pg.base(), 1, volts), pg.rotation());
  return true;
}

/// Random d = 1 or d = 2 voltage graph (no planarity assumed).
inline VoltageGraph random_voltage_graph(std::mt19937_64& rng, std::size_t n, std::size_t m,
                                         int rank, long spread = 2) {
  FiniteGraph g = random_connected(rng, n, m);
  std::uniform_int_distribution<long> v(-spread, spread);
  std::vector<Voltage> volts;
  for (std::size_t e = 0; e < g.edge_count(); ++e) volts.push_back({v(rng), rank == 2 ? v(rng) : 0});
  return VoltageGraph(g, rank, volts);
}

inline LaurentPoly random_laurent(std::mt19937_64& rng, int nvars, const CoeffField& field,
                                  int terms = 3, long span = 2, long coeff = 3) {
  LaurentPoly p(nvars, field);
  std::uniform_int_distribution<long> ex(-span, span);
  std::uniform_int_distribution<long> co(-coeff, coeff);
  for (int i = 0; i < terms; ++i) p.add_term({ex(rng), nvars == 2 ? ex(rng) : 0}, co(rng));
  return p;
}

}  // namespace oracle
