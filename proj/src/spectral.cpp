#include "grasp/spectral.hpp"

#include <cmath>

namespace grasp {

SymMatrix::SymMatrix(Eigen::MatrixXd m) {
  if (m.rows() != m.cols()) throw ShapeError("SymMatrix requires square input");
  mat_ = 0.5 * (m + m.transpose()).eval();
}

SymMatrix adjacency_matrix(const Graph& g) {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(g.num_nodes(), g.num_nodes());
  for (const auto& [u, v] : g.edges()) {
    a(u, v) = 1.0;
    a(v, u) = 1.0;
  }
  return SymMatrix(std::move(a));
}

SymMatrix laplacian(const Graph& g, LaplacianVariant variant) {
  const int n = g.num_nodes();
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n, n);
  if (variant == LaplacianVariant::Combinatorial) {
    for (const auto& [u, v] : g.edges()) {
      l(u, u) += 1.0;
      l(v, v) += 1.0;
      l(u, v) -= 1.0;
      l(v, u) -= 1.0;
    }
  } else {
    for (int v = 0; v < n; ++v)
      if (g.degree(v) > 0) l(v, v) = 1.0;
    for (const auto& [u, v] : g.edges()) {
      double w = -1.0 / std::sqrt(double(g.degree(u)) * g.degree(v));
      l(u, v) = w;
      l(v, u) = w;
    }
  }
  return SymMatrix(std::move(l));
}

std::vector<double> eigenvalues_sym(const SymMatrix& m) {
  if (!m.mat().allFinite()) throw NumericError("non-finite matrix entry");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m.mat(),
                                                        Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw NumericError("eigendecomposition failed");
  const auto& ev = solver.eigenvalues();
  return std::vector<double>(ev.data(), ev.data() + ev.size());
}

std::vector<double> laplacian_spectrum(const Graph& g, LaplacianVariant variant) {
  return eigenvalues_sym(laplacian(g, variant));
}

double spectral_gap(const Graph& g, double tol_zero) {
  if (g.num_edges() == 0)
    throw MetricUndefined("spectral gap of an edgeless graph");
  auto ev = laplacian_spectrum(g, LaplacianVariant::SymNormalized);
  for (double v : ev)
    if (v > tol_zero) return v;
  return 0.0;
}

ResistanceField resistance_field(const Graph& g) {
  const int n = g.num_nodes();
  ResistanceField f;
  f.R = Eigen::MatrixXd::Constant(n, n, kInfiniteResistance);
  auto comps = connected_components(g);
  f.connected = comps.size() <= 1;
  for (const auto& comp : comps) {
    const int nc = static_cast<int>(comp.size());
    if (nc == 1) {
      f.R(comp[0], comp[0]) = 0.0;
      continue;
    }
    // Component Laplacian, null space deflated by J/nc: invert L + J/nc,
    // which agrees with L^+ + J/nc on the component.
    Eigen::MatrixXd l = Eigen::MatrixXd::Constant(nc, nc, 1.0 / nc);
    std::vector<int> local(g.num_nodes(), -1);
    for (int i = 0; i < nc; ++i) local[comp[i]] = i;
    for (int u : comp) {
      for (int w : g.neighbors(u)) {
        l(local[u], local[u]) += 1.0;
        l(local[u], local[w]) -= 1.0;
      }
    }
    Eigen::MatrixXd pinv_shifted = l.ldlt().solve(
        Eigen::MatrixXd::Identity(nc, nc));
    // R_ij = P_ii + P_jj - 2 P_ij; the J/nc shift cancels in this form.
    for (int i = 0; i < nc; ++i) {
      f.R(comp[i], comp[i]) = 0.0;
      for (int j = i + 1; j < nc; ++j) {
        double r = pinv_shifted(i, i) + pinv_shifted(j, j) -
                   2.0 * pinv_shifted(i, j);
        f.R(comp[i], comp[j]) = r;
        f.R(comp[j], comp[i]) = r;
      }
    }
  }
  return f;
}

ResistanceSummary total_and_average_resistance(const Graph& g) {
  if (g.num_nodes() < 2)
    throw MetricUndefined("resistance needs at least two nodes");
  auto f = resistance_field(g);
  ResistanceSummary s;
  s.disconnected = !f.connected;
  long finite_pairs = 0;
  for (int i = 0; i < g.num_nodes(); ++i) {
    for (int j = i + 1; j < g.num_nodes(); ++j) {
      double r = f.R(i, j);
      if (std::isfinite(r)) {
        s.total += r;
        ++finite_pairs;
      }
    }
  }
  s.average = finite_pairs > 0 ? s.total / finite_pairs : 0.0;
  return s;
}

double adjacency_spectral_norm_diff(const Graph& g, const Graph& g2) {
  if (g.num_nodes() != g2.num_nodes())
    throw ShapeError("adjacency diff requires equal node counts");
  Eigen::MatrixXd d =
      adjacency_matrix(g).mat() - adjacency_matrix(g2).mat();
  if (d.rows() == 0) return 0.0;
  auto ev = eigenvalues_sym(SymMatrix(std::move(d)));
  return std::max(std::abs(ev.front()), std::abs(ev.back()));
}

}  // namespace grasp
