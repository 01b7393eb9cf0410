#pragma once

#include <Eigen/Dense>
#include <limits>
#include <utility>
#include <vector>

#include "grasp/graph.hpp"

namespace grasp {

enum class LaplacianVariant { Combinatorial, SymNormalized };

/// Dense symmetric real matrix; construction symmetrizes exactly.
class SymMatrix {
 public:
  explicit SymMatrix(Eigen::MatrixXd m);
  int dim() const { return static_cast<int>(mat_.rows()); }
  const Eigen::MatrixXd& mat() const { return mat_; }
  double operator()(int i, int j) const { return mat_(i, j); }

 private:
  Eigen::MatrixXd mat_;
};

SymMatrix adjacency_matrix(const Graph& g);

/// L = D - A, or L = I - D^{-1/2} A D^{-1/2} with zero rows/cols and zero
/// diagonal for isolated nodes.
SymMatrix laplacian(const Graph& g, LaplacianVariant variant);

/// All eigenvalues with multiplicity, ascending.
std::vector<double> eigenvalues_sym(const SymMatrix& m);

std::vector<double> laplacian_spectrum(const Graph& g, LaplacianVariant variant);

/// Smallest eigenvalue of the sym-normalized Laplacian above tol_zero;
/// 0 when none exists. Throws MetricUndefined on an edgeless graph.
double spectral_gap(const Graph& g, double tol_zero = 1e-8);

constexpr double kInfiniteResistance = std::numeric_limits<double>::infinity();

/// Pairwise effective resistances; kInfiniteResistance across components.
struct ResistanceField {
  Eigen::MatrixXd R;
  bool connected = true;

  double operator()(int i, int j) const { return R(i, j); }
};

ResistanceField resistance_field(const Graph& g);

struct ResistanceSummary {
  double total = 0.0;  // over finite pairs only
  double average = 0.0;
  bool disconnected = false;
};

ResistanceSummary total_and_average_resistance(const Graph& g);

/// Largest absolute eigenvalue of A - A' (spectral norm of the difference).
double adjacency_spectral_norm_diff(const Graph& g, const Graph& g2);

}  // namespace grasp
