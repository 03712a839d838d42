#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qpswf/grid.hpp"
#include "qpswf/nodal_signal.hpp"
#include "qpswf/prolate.hpp"

namespace qpswf {

// Grid-level time limiting: zero outside [-T, T]^2 (nodes on the edge are kept).
QSignal time_limit(const QSignal& f, double T);
// Grid-level band limiting: the four component spectra are evaluated at Gauss
// nodes inside [-W, W]^2 and transformed back. quad_n = 0 picks a rule that
// resolves the grid extent.
QSignal band_limit(const QSignal& f, double W, std::size_t quad_n = 0);

struct EnergyReport {
  double xi = 0.0;
  double eta_q = 0.0;
  double lambda0 = 0.0;
  // arccos(xi) + arccos(eta_q) - arccos(sqrt(lambda0))
  double angle_sum_deficit = 0.0;
};

EnergyReport make_report(double xi, double eta_q, double lambda0);

// Ratios of a sampled signal; pass lambda0 = NaN when no basis is at hand.
EnergyReport energy_ratios(const QSignal& f, double T, double W, double lambda0,
                           std::size_t quad_n = 0);
// Ratios of a signal in the nodal space of the basis (time square [-T, T]^2).
EnergyReport energy_ratios(const BasisSet2D& basis, const NodalSignal& f, std::size_t quad_n = 0);

NodalPlane basis_plane(const BasisSet2D& basis);
double angle(const NodalPlane& plane, const NodalSignal& f, const NodalSignal& g);

struct LeastAngle {
  double theoretical = 0.0;  // arccos sqrt(lambda0)
  double achieved = 0.0;     // angle(psi0, D_T psi0)
};
LeastAngle least_angle_check(const BasisSet2D& basis);

// Upper boundary of the admissible region: eta = cos(arccos sqrt(l0) - arccos xi)
// for xi >= sqrt(l0) and 1 below.
double boundary_eta(double xi, double lambda0);

// p psi0 + q D_T psi0, unit energy with the requested xi on the boundary curve.
NodalSignal build_boundary_signal(double xi, const BasisSet2D& basis);
// (psi_n - D_T psi_n) / sqrt(1 - lambda_n): nothing inside the time square.
NodalSignal build_zero_xi_signal(std::size_t index, const BasisSet2D& basis);
// Band-limited unit signal with the requested xi < sqrt(lambda0). Without an
// index the first admissible element (lambda_n < xi^2) is used.
NodalSignal build_eta_one_signal(double xi, std::optional<std::size_t> index,
                                 const BasisSet2D& basis);
// D_T psi0 / sqrt(lambda0): xi = 1 and eta = sqrt(lambda0).
NodalSignal build_time_limited_extremal(const BasisSet2D& basis);

struct RegionSample {
  EnergyReport report;
  std::string source;
};
// Boundary curve points ("curve") followed by measured reports of the
// constructed extremal signals.
std::vector<RegionSample> sweep_admissible_region(const BasisSet2D& basis,
                                                  std::span<const double> xi_grid,
                                                  std::size_t quad_n = 0);

}  // namespace qpswf
