#include "lapgraph/verify.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "lapgraph/colorings.hpp"
#include "lapgraph/error.hpp"
#include "lapgraph/linalg.hpp"
#include "lapgraph/mahler.hpp"
#include "lapgraph/spanning.hpp"

namespace lapgraph {

namespace {

using Status = Check::Status;

class Recorder {
 public:
  explicit Recorder(VerifyReport& report) : report_(report) {}

  // fn returns the detail text and sets `pass`.
  void run(const std::string& name, const std::function<std::string(bool&)>& fn) {
    Check c;
    c.name = name;
    try {
      bool pass = true;
      c.detail = fn(pass);
      c.status = pass ? Status::kPass : Status::kFail;
    } catch (const std::exception& e) {
      c.status = Status::kFail;
      c.detail = std::string("error: ") + e.what();
    }
    report_.checks.push_back(std::move(c));
  }

  void skip(const std::string& name, const std::string& why) {
    report_.checks.push_back({name, Status::kSkip, why});
  }

 private:
  VerifyReport& report_;
};

std::string fmt(double v) {
  std::ostringstream out;
  out.precision(10);
  out << v;
  return out.str();
}

LaurentMatrix inverted(const LaurentMatrix& m) {
  LaurentMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).inverted();
  return r;
}

std::string poly_text(const LaurentPoly& p) { return p.is_zero() ? "0" : p.to_string(); }

void finite_checks(Recorder& rec, const GraphFile& file) {
  const FiniteGraph& g = file.graph.base();
  rec.run("laplacian", [&](bool& pass) {
    IntMatrix l = laplacian_finite(g);
    bool loops = false;
    for (const auto& e : g.edges()) loops = loops || e.is_loop();
    for (std::size_t i = 0; i < l.rows(); ++i) {
      mpz_class s = 0;
      for (std::size_t j = 0; j < l.cols(); ++j) {
        s += l(i, j);
        if (l(i, j) != l(j, i)) pass = false;
      }
      if (s != 0) pass = false;
    }
    if (!loops) {
      IntMatrix q = incidence_matrix(g);
      pass = pass && (q * q.transpose() == l);
      return std::string(pass ? "symmetric, zero row sums, L = QQ^T" : "mismatch");
    }
    return std::string(pass ? "symmetric, zero row sums" : "mismatch");
  });
  for (const auto& field : {CoeffField::prime(2), CoeffField::prime(3), CoeffField::rationals()}) {
    rec.run("bicycle two-method " + field.to_string(), [&](bool& pass) {
      auto a = bicycle_basis_by_image(g, field);
      auto b = bicycle_basis_by_intersection(g, field);
      pass = same_column_span(a, b);
      return "dimension " + std::to_string(a.cols());
    });
  }
  if (is_connected(g)) {
    rec.run("tree count", [&](bool& pass) {
      mpz_class t = tree_count(g);
      pass = t == tree_count(g, 0);
      return "tau = " + t.get_str();
    });
  }
  if (!file.is_plane()) {
    rec.skip("shank basis", "no rotation system");
    rec.skip("dehn roundtrip", "no rotation system");
    return;
  }
  PlaneGraph pg = file.plane();
  const CoeffField gf2 = CoeffField::prime(2);
  rec.run("medial components", [&](bool& pass) {
    auto comps = medial_components(pg);
    std::vector<int> crossed(g.edge_count(), 0);
    for (const auto& c : comps)
      for (std::size_t e : c.crossings) ++crossed[e];
    for (int c : crossed) pass = pass && c == 2;
    std::size_t dim = conservative_vertex_basis(g, gf2).cols();
    pass = pass && comps.size() == dim;
    return std::to_string(comps.size()) + " components, dim GF(2) ker L = " + std::to_string(dim);
  });
  rec.run("residues are bicycles", [&](bool& pass) {
    for (const auto& c : medial_components(pg)) {
      EdgeColoring beta(c.residue.begin(), c.residue.end());
      pass = pass && is_conservative_edge(g, beta, gf2) == EdgeCondition::kConservative;
    }
    return std::string(pass ? "all residues conservative over GF(2)" : "a residue fails");
  });
  rec.run("shank basis", [&](bool& pass) {
    auto comps = medial_components(pg);
    for (std::size_t b = 0; b < comps.size(); ++b) {
      auto basis = shank_basis(pg, b);
      pass = pass && same_column_span(basis, bicycle_basis(g, gf2));
    }
    return "every base component, bicycle dimension " + std::to_string(comps.size() - 1);
  });
  rec.run("dehn roundtrip", [&](bool& pass) {
    std::size_t count = 0;
    for (const auto& field : {gf2, CoeffField::prime(5), CoeffField::rationals()}) {
      auto basis = conservative_vertex_basis(g, field);
      for (std::size_t j = 0; j < basis.cols(); ++j) {
        VertexColoring alpha = basis_column(basis, j);
        DehnColoring dc = dehn_extend(pg, alpha, 0, field);
        pass = pass && satisfies_dehn_condition(pg, dc) && dehn_restrict(dc) == alpha;
        ++count;
      }
    }
    return std::to_string(count) + " basis colorings";
  });
}

void periodic_checks(Recorder& rec, const GraphFile& file, const VerifyOptions& opt) {
  const VoltageGraph& vg = file.graph;
  const FiniteGraph& g = vg.base();
  const std::size_t n = g.vertex_count();
  LaurentMatrix l = voltage_laplacian(vg);
  rec.run("L(x^-1) = L(x)^T", [&](bool& pass) {
    pass = inverted(l) == l.transpose();
    return std::string(pass ? "holds" : "fails");
  });
  rec.run("L(1) = D - A", [&](bool& pass) {
    pass = value_at_one(l) == laplacian_finite(g);
    return std::string(pass ? "holds" : "fails");
  });
  LaurentPoly delta0 = laplacian_delta0(vg);
  rec.run("delta_0", [&](bool&) { return poly_text(delta0); });
  rec.run("delta_0 over GF(2)", [&](bool&) {
    LaurentPoly d2 = elementary_divisor(l, 0, CoeffField::prime(2));
    return d2.is_zero() ? std::string("delta_0 = 0 mod 2") : poly_text(d2);
  });
  rec.run("reciprocity", [&](bool& pass) {
    LaurentMatrix li = inverted(l);
    for (std::size_t k = 0; k < n; ++k) {
      LaurentPoly a = elementary_divisor(l, k, CoeffField::integers());
      LaurentPoly b = elementary_divisor(li, k, CoeffField::integers());
      pass = pass && a == b;
    }
    return "delta_k(x) = delta_k(x^-1) for k < " + std::to_string(n);
  });
  rec.run("divisor chain", [&](bool& pass) {
    for (std::size_t k = 0; k + 1 < n; ++k) {
      LaurentPoly a = elementary_divisor(l, k, CoeffField::integers());
      LaurentPoly b = elementary_divisor(l, k + 1, CoeffField::integers());
      if (b.is_zero()) pass = pass && a.is_zero();
      else pass = pass && divides(b, a);
    }
    return std::string("delta_{k+1} | delta_k");
  });
  if (delta0.is_zero()) {
    rec.skip("(x-1)^2 divides delta_0", "delta_0 = 0");
  } else if (vg.rank() == 1) {
    rec.run("(x-1)^2 divides delta_0", [&](bool& pass) {
      int j = x_minus_one_multiplicity(delta0);
      pass = j >= 2;
      return "multiplicity " + std::to_string(j);
    });
  } else {
    rec.run("delta_0(1,1) = 0", [&](bool& pass) {
      pass = delta0.value_at_one() == 0;
      return "value " + delta0.value_at_one().get_str();
    });
  }

  double m0 = NAN;
  if (!delta0.is_zero()) {
    rec.run("grimmett bound", [&](bool& pass) {
      m0 = mahler(delta0, opt.fibers).value;
      double bound = grimmett_bound(vg);
      pass = bound >= m0;
      return "bound " + fmt(bound) + " >= m(delta_0) " + fmt(m0);
    });
  }

  if (vg.rank() == 1) {
    if (g.edge_count() <= kCrsfEdgeLimit && !delta0.is_zero()) {
      rec.run("forman reconstruction", [&](bool& pass) {
        CrsfReport r = crsf_coefficients(vg);
        pass = !r.reconstruction.is_zero() && normalize(r.reconstruction) == delta0;
        std::string cs;
        for (std::size_t k = 0; k < r.coefficients.size(); ++k)
          cs += (k ? ", " : "") + std::string("C_") + std::to_string(k + 1) + " = " +
                r.coefficients[k].get_str();
        if (r.unit_windings)
          pass = pass && normalize(r.unit_reconstruction) == delta0;
        else
          cs += " (windings beyond 1: weighted form)";
        return cs;
      });
    } else {
      rec.skip("forman reconstruction", "too many edges or delta_0 = 0");
    }
    if (file.is_plane() && !delta0.is_zero()) {
      rec.run("deg delta_0 = 2 kappa", [&](bool& pass) {
        long deg = degree_span(delta0.over(CoeffField::rationals()))[0];
        std::size_t kappa = annular_connectivity(vg);
        pass = deg == 2 * static_cast<long>(kappa);
        return "deg " + std::to_string(deg) + ", kappa " + std::to_string(kappa);
      });
    } else {
      rec.skip("deg delta_0 = 2 kappa", "needs an annulus rotation system");
    }
    if (file.is_plane()) {
      rec.run("noncompact medial count", [&](bool& pass) {
        VoltageMedial vm = medial_components_voltage(file.plane());
        FirstDivisor fd = first_nonzero_divisor(l, CoeffField::prime(2));
        long deg = degree_span(fd.value)[0];
        pass = deg == static_cast<long>(vm.noncompact) && fd.index == vm.compact_orbits;
        return "noncompact " + std::to_string(vm.noncompact) + " vs deg GF(2) delta_" +
               std::to_string(fd.index) + " = " + std::to_string(deg) + "; closed orbits " +
               std::to_string(vm.compact_orbits);
      });
    } else {
      rec.skip("noncompact medial count", "needs an annulus rotation system");
    }
  } else {
    rec.skip("forman reconstruction", "d = 1 only");
    rec.skip("deg delta_0 = 2 kappa", "d = 1 only");
    rec.skip("noncompact medial count", "d = 1 only");
  }

  if (!delta0.is_zero() && is_connected(g)) {
    long max_n = opt.max_cover > 0 ? opt.max_cover : (vg.rank() == 1 ? 64 : 8);
    rec.run("growth vs mahler", [&](bool& pass) {
      GrowthReport r = growth_covers(vg, {max_n}, opt.fibers);
      double gap = std::abs(r.rows.back().normalized - r.reference);
      pass = gap < opt.growth_tolerance;
      return "n = " + std::to_string(max_n) + ": (1/r) log T = " + fmt(r.rows.back().normalized) +
             ", m(delta_0) = " + fmt(r.reference) + ", gap " + fmt(gap);
    });
  } else {
    rec.skip("growth vs mahler", "delta_0 = 0 or disconnected quotient");
  }
}

}  // namespace

bool VerifyReport::ok() const {
  for (const auto& c : checks)
    if (c.status == Status::kFail) return false;
  return true;
}

VerifyReport run_verify(const GraphFile& file, const VerifyOptions& options) {
  VerifyReport report;
  Recorder rec(report);
  if (file.graph.rank() == 0) finite_checks(rec, file);
  else periodic_checks(rec, file, options);
  return report;
}

std::string to_string(Check::Status status) {
  switch (status) {
    case Status::kPass: return "PASS";
    case Status::kFail: return "FAIL";
    case Status::kSkip: return "SKIP";
  }
  return "?";
}

}  // namespace lapgraph
