#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "lapgraph/graph.hpp"
#include "lapgraph/laurent.hpp"

namespace lapgraph {

/// Number of spanning trees (deletes the last row and column of L).
/// Throws on disconnected input.
mpz_class tree_count(const FiniteGraph& g);
/// Same count with row/column `skip` deleted instead.
mpz_class tree_count(const FiniteGraph& g, std::size_t skip);
/// Product of tree counts over connected components.
mpz_class complexity(const FiniteGraph& g);

/// Cycle-rooted spanning forests of a d = 1 quotient whose cycles all have
/// nonzero winding.
struct CrsfReport {
  /// coefficients[k - 1] = C_k, the number of such forests with k components.
  std::vector<mpz_class> coefficients;
  /// Sum over forests of prod over cycles (2 - x^w - x^-w).
  LaurentPoly reconstruction;
  /// Sum over k of C_k (2 - x - x^-1)^k.
  LaurentPoly unit_reconstruction;
  /// Whether every counted cycle winds exactly once; then both sums agree.
  bool unit_windings = true;
};

constexpr std::size_t kCrsfEdgeLimit = 16;

CrsfReport crsf_coefficients(const VoltageGraph& vg);

/// Whether some cycle of a d = 1 quotient has nonzero net voltage.
bool has_essential_cycle(const VoltageGraph& vg);

/// Smallest number of vertices whose deletion leaves no essential cycle.
std::size_t annular_connectivity(const VoltageGraph& vg);
/// One minimal annular cut set (vertex indices, lexicographically least).
std::vector<std::size_t> annular_cut_set(const VoltageGraph& vg);

/// For a quotient with annular connectivity 1 and cut vertex v: the finite
/// graph H obtained by cutting the periodic graph at two consecutive lifts
/// v' = v_0 and v'' = v_1 of v. Each component of the quotient minus v lifts
/// to finite pieces; the piece between v_0 and v_1 meets them through edges
/// whose sheet values span at most two consecutive integers. The lower sheet
/// is joined to v'', the upper to v'. Loops at v of voltage +-1 become
/// v'-v'' edges and voltage-0 loops are dropped.
FiniteGraph kappa_one_split(const VoltageGraph& vg, std::size_t cut_vertex);

struct GrowthRow {
  std::size_t index;
  mpz_class count;
  double normalized;
};

struct GrowthReport {
  enum class Mode { kCovers, kRestrictions };
  Mode mode = Mode::kCovers;
  std::vector<GrowthRow> rows;
  double reference = 0.0;
};

/// n = 2, 4, 8, ... below max_n, then max_n itself.
std::vector<long> doubling_schedule(long max_n, long start = 2);

/// Complexity of the covers for Lambda = nZ (d = 1) or n x n squares
/// (d = 2). Rows are computed in parallel. Reference is m(Delta_0).
GrowthReport growth_covers(const VoltageGraph& vg, const std::vector<long>& schedule,
                           long fibers = 1024);
GrowthReport growth_covers_serial(const VoltageGraph& vg, const std::vector<long>& schedule,
                                  long fibers = 1024);

/// Tree counts of boxes [0, n-1] (or squares); rows use the vertex count.
/// Reference is m(Delta_0) / |V|. Throws if a restriction is disconnected.
GrowthReport growth_restrictions(const VoltageGraph& vg, const std::vector<long>& schedule,
                                 long fibers = 1024);

/// |V| log(2|E| / |V|) for the quotient.
double grimmett_bound(const VoltageGraph& vg);

/// Delta_0 over the integers (determinant of L(x), normalized).
LaurentPoly laplacian_delta0(const VoltageGraph& vg);
/// m(Delta_0) by the one- or two-variable Mahler routine.
double delta0_mahler(const VoltageGraph& vg, long fibers = 1024);

std::string to_string(GrowthReport::Mode mode);

}  // namespace lapgraph
