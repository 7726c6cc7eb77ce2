#include "dbcohom/wilson.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseLU>

#include <cmath>

#include "dbcohom/mesh_builders.hpp"

namespace dbcohom {

Subcomplex inner_ring(const SimplicialComplex& annulus) {
  StructuredGrid grid = grid_of(annulus);
  std::vector<SimplexIndex> edges;
  for (SimplexIndex e = 0; e < annulus.count(1); ++e) {
    const auto& verts = annulus.simplex(1, e).vertices;
    if (verts[0] < grid.n_theta && verts[1] < grid.n_theta) {
      edges.push_back(e);
    }
  }
  return Subcomplex::from_simplices(annulus, 1, edges);
}

Subcomplex outer_ring(const SimplicialComplex& annulus) {
  StructuredGrid grid = grid_of(annulus);
  VertexId first = grid.n_r * grid.n_theta;
  std::vector<SimplexIndex> edges;
  for (SimplexIndex e = 0; e < annulus.count(1); ++e) {
    const auto& verts = annulus.simplex(1, e).vertices;
    if (verts[0] >= first && verts[1] >= first) {
      edges.push_back(e);
    }
  }
  return Subcomplex::from_simplices(annulus, 1, edges);
}

Chain<double> ring_cycle(const SimplicialComplex& annulus,
                         const Subcomplex& ring) {
  StructuredGrid grid = grid_of(annulus);
  Chain<double> out;
  out.complex = &annulus;
  out.degree = 1;
  for (SimplexIndex e : ring.members(1)) {
    const auto& verts = annulus.simplex(1, e).vertices;
    int col0 = verts[0] % grid.n_theta;
    int col1 = verts[1] % grid.n_theta;
    int dc = col1 - col0;
    if (dc > grid.n_theta / 2) dc -= grid.n_theta;
    if (dc < -grid.n_theta / 2) dc += grid.n_theta;
    out.add(e, static_cast<double>(dc));  // +1 along +theta, -1 against
  }
  return out;
}

namespace {

double ring_period(const SimplicialComplex& annulus, const Subcomplex& ring,
                   const Cochain<double>& omega) {
  return integrate(omega, ring_cycle(annulus, ring));
}

// Least-squares vector reconstruction of a 1-cochain at a vertex from the
// incident edge values; returns the component along the radial direction.
// This is the pointwise normal part of omega at a boundary vertex, a finer
// diagnostic than the lumped flux pinned by the constraint.
double normal_component_at(const SimplicialComplex& complex,
                           const Cochain<double>& omega, VertexId v) {
  const auto& xv = complex.coordinate(v);
  double m00 = 0, m01 = 0, m11 = 0, r0 = 0, r1 = 0;
  for (SimplexIndex e = 0; e < complex.count(1); ++e) {
    const auto& verts = complex.simplex(1, e).vertices;
    if (verts[0] != v && verts[1] != v) continue;
    VertexId other = (verts[0] == v) ? verts[1] : verts[0];
    const auto& xo = complex.coordinate(other);
    double dx = xo[0] - xv[0], dy = xo[1] - xv[1];
    double val = omega.at_parent(e) * ((verts[0] == v) ? 1.0 : -1.0);
    m00 += dx * dx;
    m01 += dx * dy;
    m11 += dy * dy;
    r0 += dx * val;
    r1 += dy * val;
  }
  double det = m00 * m11 - m01 * m01;
  if (det == 0) return 0;
  double gx = (m11 * r0 - m01 * r1) / det;
  double gy = (m00 * r1 - m01 * r0) / det;
  double rn = std::sqrt(xv[0] * xv[0] + xv[1] * xv[1]);
  if (rn == 0) return 0;
  return (gx * xv[0] + gy * xv[1]) / rn;
}

}  // namespace

WilsonForm solve_harmonic_form(const SimplicialComplex& annulus, int n) {
  if (annulus.kind() != MeshKind::annulus) {
    throw InvalidParameterError("solve_harmonic_form needs an annulus");
  }
  if (grid_of(annulus).n_r < 2) {
    throw InvalidParameterError(
        "solve_harmonic_form needs n_r >= 2 (boundary rings must not touch)");
  }
  HodgeStructure hodge(annulus);
  Subcomplex whole = Subcomplex::whole(annulus);
  Cochain<double> omega0 = reference_angular_cochain(annulus);

  const int V = annulus.count(0);
  const int E = annulus.count(1);

  using Triplet = Eigen::Triplet<double>;

  // D0: edge x vertex incidence
  std::vector<Triplet> d0_trips;
  for (SimplexIndex e = 0; e < E; ++e) {
    const auto& verts = annulus.simplex(1, e).vertices;
    d0_trips.push_back({e, verts[1], 1.0});
    d0_trips.push_back({e, verts[0], -1.0});
  }
  Eigen::SparseMatrix<double> d0(E, V);
  d0.setFromTriplets(d0_trips.begin(), d0_trips.end());

  // co-closure rows over interior vertices:
  // row(v) = star0(v)^(-1/2) * sum_e [d0^T](v,e) star1(e) omega(e)
  std::vector<int> interior;
  for (VertexId v = 0; v < V; ++v) {
    if (!hodge.is_boundary_vertex(v)) interior.push_back(v);
  }
  // build B (rows: interior vertices, cols: edges)
  std::vector<Triplet> b_trips;
  std::vector<int> interior_row(V, -1);
  for (size_t r = 0; r < interior.size(); ++r) interior_row[interior[r]] = static_cast<int>(r);
  for (SimplexIndex e = 0; e < E; ++e) {
    const auto& verts = annulus.simplex(1, e).vertices;
    double s1 = hodge.star(1, e);
    for (int side = 0; side < 2; ++side) {
      VertexId v = verts[side];
      int r = interior_row[v];
      if (r < 0) continue;
      double sign = (side == 1) ? 1.0 : -1.0;  // d0^T entry
      b_trips.push_back({r, e, sign * s1 / std::sqrt(hodge.star(0, v))});
    }
  }
  Eigen::SparseMatrix<double> B(static_cast<int>(interior.size()), E);
  B.setFromTriplets(b_trips.begin(), b_trips.end());

  // tangentiality constraint rows: lumped normal flux at boundary vertices
  std::vector<int> boundary;
  for (VertexId v = 0; v < V; ++v) {
    if (hodge.is_boundary_vertex(v)) boundary.push_back(v);
  }
  std::vector<int> boundary_row(V, -1);
  for (size_t r = 0; r < boundary.size(); ++r) boundary_row[boundary[r]] = static_cast<int>(r);
  std::vector<Triplet> t_trips;
  for (SimplexIndex e = 0; e < E; ++e) {
    if (hodge.is_boundary_edge(e)) continue;
    const auto& verts = annulus.simplex(1, e).vertices;
    double s1 = hodge.star(1, e);
    if (boundary_row[verts[0]] >= 0) {
      t_trips.push_back({boundary_row[verts[0]], e, s1});   // out of tail
    }
    if (boundary_row[verts[1]] >= 0) {
      t_trips.push_back({boundary_row[verts[1]], e, -s1});  // into head
    }
  }
  Eigen::SparseMatrix<double> T(static_cast<int>(boundary.size()), E);
  T.setFromTriplets(t_trips.begin(), t_trips.end());

  // assemble A = B * d0, C = [T * d0 ; gauge row], rhs from n * omega0
  Eigen::VectorXd w0_vec(E);
  for (SimplexIndex e = 0; e < E; ++e) w0_vec[e] = n * omega0[e];

  Eigen::SparseMatrix<double> A = B * d0;
  Eigen::SparseMatrix<double> Ct = T * d0;
  const int n_con = static_cast<int>(boundary.size()) + 1;

  Eigen::SparseMatrix<double> ata = Eigen::SparseMatrix<double>(A.transpose()) * A;
  std::vector<Triplet> kkt_trips;
  for (int k = 0; k < ata.outerSize(); ++k) {
    for (Eigen::SparseMatrix<double>::InnerIterator it(ata, k); it; ++it) {
      kkt_trips.push_back({static_cast<int>(it.row()), static_cast<int>(it.col()),
                           2.0 * it.value()});
    }
  }
  for (int k = 0; k < Ct.outerSize(); ++k) {
    for (Eigen::SparseMatrix<double>::InnerIterator it(Ct, k); it; ++it) {
      int r = static_cast<int>(it.row()), c = static_cast<int>(it.col());
      kkt_trips.push_back({V + r, c, it.value()});
      kkt_trips.push_back({c, V + r, it.value()});
    }
  }
  // gauge fixing u[0] = 0
  kkt_trips.push_back({V + n_con - 1, 0, 1.0});
  kkt_trips.push_back({0, V + n_con - 1, 1.0});

  Eigen::SparseMatrix<double> kkt(V + n_con, V + n_con);
  kkt.setFromTriplets(kkt_trips.begin(), kkt_trips.end());

  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(V + n_con);
  Eigen::VectorXd b_target = B * w0_vec;   // energy term: |A u + B w0|^2
  Eigen::VectorXd atb = A.transpose() * b_target;
  for (int v = 0; v < V; ++v) rhs[v] = -2.0 * atb[v];
  Eigen::VectorXd t_target = T * w0_vec;   // constraint: C u = -T w0
  for (size_t r = 0; r < boundary.size(); ++r) {
    rhs[V + static_cast<int>(r)] = -t_target[static_cast<int>(r)];
  }

  Eigen::SparseLU<Eigen::SparseMatrix<double>> solver;
  solver.compute(kkt);
  if (solver.info() != Eigen::Success) {
    throw SolverError("wilson KKT factorization failed");
  }
  Eigen::VectorXd solution = solver.solve(rhs);
  if (solver.info() != Eigen::Success) {
    throw SolverError("wilson KKT solve failed");
  }

  // materialize omega = n*omega0 + du
  Cochain<double> omega(whole, 1);
  for (SimplexIndex e = 0; e < E; ++e) {
    const auto& verts = annulus.simplex(1, e).vertices;
    omega[e] = w0_vec[e] + (solution[verts[1]] - solution[verts[0]]);
  }

  WilsonForm out;
  out.level = n;
  out.omega = omega;
  out.omega_exact = to_exact_units(omega);

  // closure: exact rational evaluation of d(omega); zero by construction
  Cochain<Rational> closure = coboundary(out.omega_exact);
  out.closure_residual = closure.max_abs();

  Cochain<double> delta = hodge.codifferential(omega);
  double cc = 0;
  for (VertexId v : interior) {
    double dv = delta.at_parent(*annulus.find(0, {v}));
    cc += hodge.star(0, v) * dv * dv;
  }
  out.coclosure_residual = std::sqrt(cc);

  double tang = 0;
  for (VertexId v : boundary) {
    double normal = normal_component_at(annulus, omega, v);
    tang += hodge.star(0, v) * normal * normal;
  }
  out.tangentiality_residual = std::sqrt(tang);

  out.period_inner = ring_period(annulus, inner_ring(annulus), omega);
  out.period_outer = ring_period(annulus, outer_ring(annulus), omega);
  return out;
}

double wilson_line_value(const Cochain<double>& a, const WilsonForm& omega,
                         const Subcomplex& region) {
  if (a.degree() != 1) {
    throw ShapeMismatchError("wilson line expects a 1-cochain");
  }
  return integrate(cup_product(a, omega.omega), region);
}

}  // namespace dbcohom
