#include "lapgraph/spanning.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <queue>

#include "lapgraph/error.hpp"
#include "lapgraph/linalg.hpp"
#include "lapgraph/mahler.hpp"

namespace lapgraph {

namespace {

double log_mpz(const mpz_class& v) {
  if (v <= 0) return -INFINITY;
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp) * std::log(2.0);
}

// Union-find that tracks the voltage of every vertex relative to its root.
class PotentialForest {
 public:
  explicit PotentialForest(std::size_t n) : parent_(n), offset_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  // Voltage of v relative to its root.
  long potential(std::size_t v) const {
    long p = 0;
    while (parent_[v] != v) {
      p += offset_[v];
      v = parent_[v];
    }
    return p;
  }

  std::size_t root(std::size_t v) const {
    while (parent_[v] != v) v = parent_[v];
    return v;
  }

  // Joins tail and head along an edge of voltage s. Returns the winding of
  // the closed cycle when both were already connected, otherwise nullopt.
  std::optional<long> join(std::size_t tail, std::size_t head, long s) {
    std::size_t rt = root(tail);
    std::size_t rh = root(head);
    long pt = potential(tail);
    long ph = potential(head);
    if (rt == rh) return pt + s - ph;
    // pot(head) must equal pot(tail) + s.
    parent_[rh] = rt;
    offset_[rh] = pt + s - ph;
    return std::nullopt;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<long> offset_;
};

LaurentPoly cycle_weight(long w) {
  LaurentPoly p = LaurentPoly::constant(2);
  p.add_term({w, 0}, -1);
  p.add_term({-w, 0}, -1);
  return p;
}

void require_rank_one(const VoltageGraph& vg, const char* what) {
  if (vg.rank() != 1) throw Error(std::string(what) + " needs a d = 1 quotient");
}

}  // namespace

mpz_class tree_count(const FiniteGraph& g, std::size_t skip) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw Error("tree count of the empty graph");
  if (skip >= n) throw Error("deleted row out of range");
  if (!is_connected(g)) throw Error("tree count needs a connected graph");
  IntMatrix l = laplacian_finite(g);
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < n; ++i)
    if (i != skip) keep.push_back(i);
  mpz_class d = int_det(l.select(keep, keep));
  return abs(d);
}

mpz_class tree_count(const FiniteGraph& g) {
  if (g.vertex_count() == 0) throw Error("tree count of the empty graph");
  return tree_count(g, g.vertex_count() - 1);
}

mpz_class complexity(const FiniteGraph& g) {
  mpz_class total = 1;
  IntMatrix l = laplacian_finite(g);
  for (const auto& comp : connected_components(g)) {
    std::vector<std::size_t> keep(comp.begin(), comp.end() - 1);
    total *= abs(int_det(l.select(keep, keep)));
  }
  return total;
}

CrsfReport crsf_coefficients(const VoltageGraph& vg) {
  require_rank_one(vg, "CRSF enumeration");
  const FiniteGraph& g = vg.base();
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  if (m > kCrsfEdgeLimit)
    throw Error("CRSF enumeration is limited to " + std::to_string(kCrsfEdgeLimit) + " edges");
  CrsfReport report;
  report.coefficients.assign(n, 0);
  report.reconstruction = LaurentPoly(1);
  for (std::uint32_t mask = 0; mask < (1U << m); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != n) continue;
    PotentialForest forest(n);
    std::vector<long> winding;
    std::vector<std::size_t> cycle_root;
    bool ok = true;
    for (std::size_t e = 0; e < m && ok; ++e) {
      if (!(mask & (1U << e))) continue;
      const Edge& edge = g.edge(e);
      auto w = forest.join(edge.tail, edge.head, vg.voltage(e)[0]);
      if (w) {
        if (*w == 0) ok = false;
        winding.push_back(*w);
        cycle_root.push_back(edge.tail);
      }
    }
    if (!ok) continue;
    // |S| = |V| with one cycle per component: each root carries one cycle.
    std::vector<int> cycles(n, 0);
    for (std::size_t v : cycle_root) ++cycles[forest.root(v)];
    for (std::size_t v = 0; v < n && ok; ++v)
      if (forest.root(v) == v && cycles[v] != 1) ok = false;
    if (!ok) continue;
    const std::size_t k = winding.size();
    ++report.coefficients[k - 1];
    LaurentPoly term = LaurentPoly::constant(1);
    for (long w : winding) {
      if (std::labs(w) != 1) report.unit_windings = false;
      term *= cycle_weight(w);
    }
    report.reconstruction += term;
  }
  while (!report.coefficients.empty() && report.coefficients.back() == 0)
    report.coefficients.pop_back();
  report.unit_reconstruction = LaurentPoly(1);
  const LaurentPoly base = cycle_weight(1);
  for (std::size_t k = 0; k < report.coefficients.size(); ++k)
    report.unit_reconstruction += base.pow(static_cast<unsigned>(k + 1)).scaled(report.coefficients[k]);
  return report;
}

bool has_essential_cycle(const VoltageGraph& vg) {
  require_rank_one(vg, "essential cycle test");
  PotentialForest forest(vg.base().vertex_count());
  for (std::size_t e = 0; e < vg.base().edge_count(); ++e) {
    const Edge& edge = vg.base().edge(e);
    auto w = forest.join(edge.tail, edge.head, vg.voltage(e)[0]);
    if (w && *w != 0) return true;
  }
  return false;
}

std::vector<std::size_t> annular_cut_set(const VoltageGraph& vg) {
  require_rank_one(vg, "annular connectivity");
  const std::size_t n = vg.base().vertex_count();
  for (std::size_t k = 0; k <= n; ++k)
    for (const auto& subset : combinations(n, k))
      if (!has_essential_cycle(delete_vertices(vg, subset))) return subset;
  throw Error("no annular cut set found");
}

std::size_t annular_connectivity(const VoltageGraph& vg) { return annular_cut_set(vg).size(); }

FiniteGraph kappa_one_split(const VoltageGraph& vg, std::size_t cut_vertex) {
  require_rank_one(vg, "vertex split");
  const FiniteGraph& g = vg.base();
  const std::size_t n = g.vertex_count();
  if (cut_vertex >= n) throw Error("cut vertex out of range");

  // Potentials on each component of the quotient minus v.
  std::vector<long> pot(n, 0);
  std::vector<std::size_t> comp(n, n);
  std::vector<std::vector<std::pair<std::size_t, long>>> adj(n);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    if (edge.tail == cut_vertex || edge.head == cut_vertex) continue;
    long s = vg.voltage(e)[0];
    adj[edge.tail].push_back({edge.head, s});
    adj[edge.head].push_back({edge.tail, -s});
  }
  for (std::size_t start = 0; start < n; ++start) {
    if (start == cut_vertex || comp[start] != n) continue;
    comp[start] = start;
    std::queue<std::size_t> q;
    q.push(start);
    while (!q.empty()) {
      std::size_t u = q.front();
      q.pop();
      for (auto [w, s] : adj[u]) {
        if (comp[w] == n) {
          comp[w] = start;
          pot[w] = pot[u] + s;
          q.push(w);
        } else if (pot[w] != pot[u] + s) {
          throw Error("vertex " + g.vertex_name(cut_vertex) + " is not an annular cut set");
        }
      }
    }
  }

  // Sheet of each edge joining v to a component.
  std::vector<long> sheet(g.edge_count(), 0);
  std::map<std::size_t, std::pair<long, long>> span;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    if (edge.is_loop() || (edge.tail != cut_vertex && edge.head != cut_vertex)) continue;
    long s = vg.voltage(e)[0];
    std::size_t u = edge.tail == cut_vertex ? edge.head : edge.tail;
    sheet[e] = edge.tail == cut_vertex ? s - pot[u] : -s - pot[u];
    auto [it, fresh] = span.try_emplace(comp[u], sheet[e], sheet[e]);
    if (!fresh) {
      it->second.first = std::min(it->second.first, sheet[e]);
      it->second.second = std::max(it->second.second, sheet[e]);
    }
  }
  for (const auto& [c, range] : span)
    if (range.second - range.first > 1)
      throw Error("component of " + g.vertex_name(c) + " spans more than two sheets");

  FiniteGraph h;
  std::vector<std::size_t> index(n, 0);
  for (std::size_t v = 0; v < n; ++v)
    if (v != cut_vertex) index[v] = h.add_vertex(g.vertex_name(v));
  const std::size_t upper = h.add_vertex(g.vertex_name(cut_vertex) + "'");
  const std::size_t lower = h.add_vertex(g.vertex_name(cut_vertex) + "''");
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const Edge& edge = g.edge(e);
    long s = vg.voltage(e)[0];
    if (edge.is_loop() && edge.tail == cut_vertex) {
      if (s == 0) continue;
      if (std::labs(s) != 1) throw Error("loop " + edge.name + " winds more than once");
      h.add_edge(edge.name, upper, lower);
    } else if (edge.tail == cut_vertex || edge.head == cut_vertex) {
      std::size_t u = edge.tail == cut_vertex ? edge.head : edge.tail;
      std::size_t end = sheet[e] == span.at(comp[u]).first ? lower : upper;
      h.add_edge(edge.name, end, index[u]);
    } else {
      h.add_edge(edge.name, index[edge.tail], index[edge.head]);
    }
  }
  return h;
}

std::vector<long> doubling_schedule(long max_n, long start) {
  if (max_n < 1 || start < 1) throw Error("schedule bounds must be positive");
  std::vector<long> out;
  long n = start;
  for (; n < max_n; n *= 2) out.push_back(n);
  out.push_back(max_n);
  return out;
}

LaurentPoly laplacian_delta0(const VoltageGraph& vg) {
  if (vg.rank() == 0) throw Error("Delta_0 needs d >= 1");
  LaurentPoly d = det_laurent(voltage_laplacian(vg));
  if (d.is_zero()) return d;
  return normalize(d);
}

double delta0_mahler(const VoltageGraph& vg, long fibers) {
  LaurentPoly d = laplacian_delta0(vg);
  if (d.is_zero()) throw Error("Delta_0 vanishes; Mahler measure undefined");
  return mahler(d, fibers).value;
}

namespace {

GrowthRow cover_row(const VoltageGraph& vg, long n) {
  Sublattice lattice = vg.rank() == 1 ? Sublattice::cyclic(n) : Sublattice::square(n);
  mpz_class t = complexity(cover_graph(vg, lattice));
  std::size_t r = lattice.index();
  return {r, t, log_mpz(t) / static_cast<double>(r)};
}

GrowthReport covers_impl(const VoltageGraph& vg, const std::vector<long>& schedule,
                         long fibers, bool parallel) {
  if (vg.rank() == 0) throw Error("growth needs d >= 1");
  GrowthReport report;
  report.mode = GrowthReport::Mode::kCovers;
  report.rows.resize(schedule.size());
  const long count = static_cast<long>(schedule.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (long i = 0; i < count; ++i) report.rows[static_cast<std::size_t>(i)] = cover_row(vg, schedule[static_cast<std::size_t>(i)]);
  report.reference = delta0_mahler(vg, fibers);
  return report;
}

}  // namespace

GrowthReport growth_covers(const VoltageGraph& vg, const std::vector<long>& schedule,
                           long fibers) {
  return covers_impl(vg, schedule, fibers, true);
}

GrowthReport growth_covers_serial(const VoltageGraph& vg, const std::vector<long>& schedule,
                                  long fibers) {
  return covers_impl(vg, schedule, fibers, false);
}

GrowthReport growth_restrictions(const VoltageGraph& vg, const std::vector<long>& schedule,
                                 long fibers) {
  if (vg.rank() == 0) throw Error("growth needs d >= 1");
  GrowthReport report;
  report.mode = GrowthReport::Mode::kRestrictions;
  report.rows.resize(schedule.size());
  const long count = static_cast<long>(schedule.size());
  std::vector<int> disconnected(schedule.size(), 0);
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    const long n = schedule[static_cast<std::size_t>(i)];
    RectangleSpec rect;
    rect.extents.assign(static_cast<std::size_t>(vg.rank()), n);
    FiniteGraph sub = restriction_subgraph(vg, rect);
    if (!is_connected(sub)) {
      disconnected[static_cast<std::size_t>(i)] = 1;
      continue;
    }
    mpz_class t = tree_count(sub);
    std::size_t s = sub.vertex_count();
    report.rows[static_cast<std::size_t>(i)] = {s, t, log_mpz(t) / static_cast<double>(s)};
  }
  for (std::size_t i = 0; i < schedule.size(); ++i)
    if (disconnected[i])
      throw Error("restriction of size " + std::to_string(schedule[i]) + " is disconnected");
  report.reference =
      delta0_mahler(vg, fibers) / static_cast<double>(vg.base().vertex_count());
  return report;
}

double grimmett_bound(const VoltageGraph& vg) {
  const double v = static_cast<double>(vg.base().vertex_count());
  const double e = static_cast<double>(vg.base().edge_count());
  if (v == 0) throw Error("Grimmett bound of the empty graph");
  return v * std::log(2.0 * e / v);
}

std::string to_string(GrowthReport::Mode mode) {
  return mode == GrowthReport::Mode::kCovers ? "covers" : "restrictions";
}

}  // namespace lapgraph
