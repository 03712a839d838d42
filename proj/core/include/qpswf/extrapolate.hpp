#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "qpswf/grid.hpp"
#include "qpswf/nodal_signal.hpp"
#include "qpswf/prolate.hpp"

namespace qpswf {

// Observation g = f chi_D known at the nodes of the plane's time square D.
struct ExtrapolationProblem {
  NodalPlane plane;
  SplitMatrix observed;
  // Synthetic truth in the nodal space (exact error energies).
  std::optional<NodalSignal> truth;
  // Sampled truth; errors are then measured on its grid.
  std::optional<QSignal> truth_samples;
  // Grid for sup |e_n| when `truth` is set; empty axes skip it.
  GridAxis probe_x;
  GridAxis probe_y;
};

// Observation given on a uniform grid. The nodes inside [-d, d]^2 become the
// plane; samples outside must be exactly zero.
ExtrapolationProblem problem_from_grid(const QSignal& observed, double d, double W);

struct TraceRecord {
  std::size_t n = 0;
  double error_energy = 0.0;  // NaN without truth
  double sup_error = 0.0;     // NaN without truth or probe grid
  double bound = 0.0;         // (W / pi) sqrt(E_n)
  double sqrt_w_bound = 0.0;  // sqrt(W E_n) / pi, reported only
  double delta = 0.0;         // ||f_n - f_{n-1}|| / ||f_n||
};

struct ExtrapolationTrace {
  std::vector<TraceRecord> records;
  NodalSignal final_iterate;
  double initial_error_energy = 0.0;  // E_0 = ||truth||^2, NaN without truth
  bool converged = false;
};

// f_n = B_W (g on D, f_{n-1} elsewhere).
NodalSignal pg_step(const NodalPlane& plane, const SplitMatrix& observed, const NodalSignal& prev);
// Same step on sampled signals. The substitution uses the grid nodes inside
// `d_region` and band limiting goes through the spectrum on [-W, W]^2.
QSignal pg_step(const QSignal& observed, const QSignal& prev, const Region& d_region, double W,
                std::size_t quad_n = 0);

ExtrapolationTrace pg_run(const ExtrapolationProblem& problem, std::size_t max_steps = 500,
                          double stop_tol = 1e-10);

// sum_j a_j (1 - (1 - lambda_j)^n) psi_j over the basis prefix.
NodalSignal closed_form_iterate(std::span<const double> a, std::span<const double> lambdas,
                                std::size_t n, const BasisSet2D& basis);
// sum_j a_j^2 (1 - lambda_j)^(2n)
double error_energy(std::span<const double> a, std::span<const double> lambdas, std::size_t n);

// sup |e| <= (2W / 2 pi) sqrt(E) from Cauchy-Schwarz over the band square.
double pointwise_bound(double energy, double W);
double sqrt_w_pointwise_bound(double energy, double W);

}  // namespace qpswf
