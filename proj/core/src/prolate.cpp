#include "qpswf/prolate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <numeric>
#include <string>

#include "qpswf/error.hpp"
#include "qpswf/gauss_legendre.hpp"
#include "qpswf/kernel.hpp"
#include "qpswf/parallel.hpp"
#include "qpswf/split_matrix.hpp"

namespace qpswf {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_index(const ProlateBasis1D& basis, std::size_t k) {
  if (k >= basis.count()) {
    throw Error(ErrorKind::BadIndex, "eigenfunction index " + std::to_string(k) + " out of range");
  }
  if (!(basis.eigvals[k] >= kEigenvalueFloor)) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3e", basis.eigvals[k]);
    throw Error(ErrorKind::EigenvalueTooSmall,
                "lambda_" + std::to_string(k) + " = " + buf + " is below the numerical floor 1e-12");
  }
}

Eigen::Map<const VectorXd> as_vector(const std::vector<double>& v) {
  return {v.data(), static_cast<Eigen::Index>(v.size())};
}

// Trapezoid-weighted squared norm over a grid.
double grid_norm_sq(const SplitMatrix& m, const std::vector<double>& wx,
                    const std::vector<double>& wy) {
  const auto mx = as_vector(wx);
  const auto my = as_vector(wy);
  double s = 0.0;
  for (const auto& c : m.c) s += mx.dot(c.cwiseAbs2() * my);
  return s;
}

void require_samples(const Qpswf2D& psi) {
  if (psi.values.size() == 0) {
    throw Error(ErrorKind::BadParameters, "element was built without a sample grid");
  }
}

void check_unit(const Quaternion& coeff) {
  if (std::abs(modulus(coeff) - 1.0) > 1e-12) {
    throw Error(ErrorKind::NonUnitCoefficient, "basis coefficient must have unit modulus");
  }
}

}  // namespace

std::size_t ProlateBasis1D::usable_count() const {
  std::size_t k = 0;
  while (k < eigvals.size() && eigvals[k] >= kEigenvalueFloor) ++k;
  return k;
}

VectorXd ProlateBasis1D::extension_coefficients(std::size_t k) const {
  require_index(*this, k);
  return axis.weight_vector().cwiseProduct(values.col(static_cast<Eigen::Index>(k))) / eigvals[k];
}

MatrixXd build_sinc_operator(double T, double W, std::size_t N) {
  if (!(T > 0.0) || !(W > 0.0) || N < 16) {
    throw Error(ErrorKind::BadParameters, "sinc operator needs T, W > 0 and N >= 16");
  }
  const NodalAxis axis = NodalAxis::gauss(T, W, N);
  const VectorXd sq = axis.weight_vector().cwiseSqrt();
  return sq.asDiagonal() * axis.kernel() * sq.asDiagonal();
}

ProlateBasis1D eig_prolate_1d(double T, double W, std::size_t N, std::size_t count) {
  if (!(T > 0.0) || !(W > 0.0) || N < 16) {
    throw Error(ErrorKind::BadParameters, "eig_prolate_1d needs T, W > 0 and N >= 16");
  }
  if (count == 0 || count > N) {
    throw Error(ErrorKind::BadParameters, "eigenpair count must lie in [1, N]");
  }
  ProlateBasis1D basis;
  basis.T = T;
  basis.W = W;
  basis.axis = NodalAxis::gauss(T, W, N);
  const auto& s = basis.axis.nodes();
  const VectorXd sq = basis.axis.weight_vector().cwiseSqrt();
  const auto n = static_cast<Eigen::Index>(N);
  const MatrixXd A = sq.asDiagonal() * basis.axis.kernel() * sq.asDiagonal();
  const double kappa = W / T;

  // Orthonormal bases of even and odd node vectors (nodes are symmetric).
  const Eigen::Index half = n / 2;
  const Eigen::Index n_even = n - half;
  MatrixXd p_even = MatrixXd::Zero(n, n_even);
  MatrixXd p_odd = MatrixXd::Zero(n, half);
  const double r2 = std::sqrt(0.5);
  for (Eigen::Index r = 0; r < half; ++r) {
    const Eigen::Index pos = n - 1 - r;
    p_even(pos, r) = r2;
    p_even(r, r) = r2;
    p_odd(pos, r) = r2;
    p_odd(r, r) = -r2;
  }
  if (n % 2 == 1) p_even(half, half) = 1.0;

  // Symmetrized finite cosine and sine transforms.
  MatrixXd cs(n, n);
  MatrixXd ss(n, n);
  for (Eigen::Index p = 0; p < n; ++p) {
    for (Eigen::Index q = 0; q <= p; ++q) {
      const double t = kappa * s[p] * s[q];
      const double w = sq[p] * sq[q];
      cs(p, q) = cs(q, p) = w * std::cos(t);
      ss(p, q) = ss(q, p) = w * std::sin(t);
    }
  }

  struct Block {
    VectorXd nu;
    MatrixXd vec;  // in node coordinates
    std::vector<Eigen::Index> order;
  };
  auto solve = [&](const MatrixXd& op, const MatrixXd& proj) {
    const MatrixXd reduced = proj.transpose() * op * proj;
    Eigen::SelfAdjointEigenSolver<MatrixXd> es(0.5 * (reduced + reduced.transpose()));
    if (es.info() != Eigen::Success) {
      throw Error(ErrorKind::ConvergenceFailure, "symmetric eigensolver did not converge");
    }
    Block b;
    b.nu = es.eigenvalues();
    b.vec = proj * es.eigenvectors();
    b.order.resize(static_cast<std::size_t>(b.nu.size()));
    std::iota(b.order.begin(), b.order.end(), Eigen::Index{0});
    std::stable_sort(b.order.begin(), b.order.end(), [&](Eigen::Index a, Eigen::Index c) {
      return std::abs(b.nu[a]) > std::abs(b.nu[c]);
    });
    return b;
  };
  const Block even = solve(cs, p_even);
  const Block odd = solve(ss, p_odd);

  basis.eigvals.resize(count);
  basis.mu.resize(count);
  basis.values.resize(n, static_cast<Eigen::Index>(count));
  const VectorXd w = basis.axis.weight_vector();
  for (std::size_t k = 0; k < count; ++k) {
    // Parity alternates with the index, so the two blocks interleave.
    const Block& blk = (k % 2 == 0) ? even : odd;
    const Eigen::Index col = blk.order[k / 2];
    const VectorXd v = blk.vec.col(col).normalized();
    const double lambda = v.dot(A * v);
    VectorXd phi = std::sqrt(std::max(lambda, 0.0)) * v.cwiseQuotient(sq);

    // Sign: phi(0) > 0 for even k, phi'(0) > 0 for odd k, both read off the
    // extension formula (up to the positive factor 1/lambda).
    double probe = 0.0;
    for (Eigen::Index p = 0; p < n; ++p) {
      probe += (k % 2 == 0) ? w[p] * sinc_kernel(s[p], W) * phi[p]
                            : -w[p] * sinc_kernel_derivative(s[p], W) * phi[p];
    }
    if (probe == 0.0) probe = phi[n - 1];
    if (probe < 0.0) phi = -phi;

    basis.eigvals[k] = lambda;
    basis.values.col(static_cast<Eigen::Index>(k)) = phi;
    const double nu = blk.nu[col];
    basis.mu[k] = (k % 2 == 0) ? std::complex<double>(nu, 0.0) : std::complex<double>(0.0, nu);
  }
  return basis;
}

double extend_eigenfunction(const ProlateBasis1D& basis, std::size_t k, double x) {
  const std::vector<double> xs{x};
  return extend_eigenfunction(basis, k, xs)[0];
}

VectorXd extend_eigenfunction(const ProlateBasis1D& basis, std::size_t k,
                              std::span<const double> xs) {
  const VectorXd coeffs = basis.extension_coefficients(k);
  return basis.axis.kernel_rows(xs) * coeffs;
}

namespace {

Qpswf2D make_item(const ProlateBasis1D& b, std::size_t m, std::size_t n, const Quaternion& coeff) {
  Qpswf2D item;
  item.m = m;
  item.n = n;
  item.lambda2d = b.eigvals[m] * b.eigvals[n];
  item.mu_x = b.mu[m];
  item.mu_y = b.mu[n];
  item.coeff = coeff;
  return item;
}

void sample_items(BasisSet2D& set, const GridAxis& ax_x, const GridAxis& ax_y) {
  const auto& b = *set.basis1d;
  const auto xs = ax_x.coords();
  const auto ys = ax_y.coords();
  std::map<std::size_t, VectorXd> fx;
  std::map<std::size_t, VectorXd> fy;
  for (const auto& it : set.items) {
    if (!fx.count(it.m)) fx[it.m] = extend_eigenfunction(b, it.m, xs);
    if (!fy.count(it.n)) fy[it.n] = extend_eigenfunction(b, it.n, ys);
  }
  parallel_for(set.items.size(), [&](std::size_t idx) {
    auto& it = set.items[idx];
    const VectorXd& px = fx.at(it.m);
    const VectorXd& py = fy.at(it.n);
    QSignal s(ax_x, ax_y);
    for (std::size_t ix = 0; ix < ax_x.count; ++ix) {
      for (std::size_t iy = 0; iy < ax_y.count; ++iy) {
        s(ix, iy) = it.coeff * (px[static_cast<Eigen::Index>(ix)] * py[static_cast<Eigen::Index>(iy)]);
      }
    }
    it.values = std::move(s);
  });
}

}  // namespace

BasisSet2D build_qpswf_basis(std::shared_ptr<const ProlateBasis1D> basis1d, std::size_t count,
                             const Quaternion& coeff) {
  check_unit(coeff);
  const auto& b = *basis1d;
  const std::size_t k1 = b.count();
  if (count == 0 || count > k1 * k1) {
    throw Error(ErrorKind::BadParameters, "basis count must lie in [1, count1d^2]");
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(k1 * k1);
  for (std::size_t m = 0; m < k1; ++m) {
    for (std::size_t n = 0; n < k1; ++n) pairs.emplace_back(m, n);
  }
  std::stable_sort(pairs.begin(), pairs.end(), [&](const auto& a, const auto& c) {
    const double la = b.eigvals[a.first] * b.eigvals[a.second];
    const double lc = b.eigvals[c.first] * b.eigvals[c.second];
    if (la != lc) return la > lc;
    return a < c;
  });
  BasisSet2D set;
  set.basis1d = std::move(basis1d);
  set.coeff = coeff;
  for (std::size_t q = 0; q < count; ++q) {
    const auto [m, n] = pairs[q];
    require_index(b, m);
    require_index(b, n);
    set.items.push_back(make_item(b, m, n, coeff));
  }
  return set;
}

BasisSet2D build_qpswf_basis(std::shared_ptr<const ProlateBasis1D> basis1d, std::size_t count,
                             const Quaternion& coeff, const GridAxis& ax_x, const GridAxis& ax_y) {
  BasisSet2D set = build_qpswf_basis(std::move(basis1d), count, coeff);
  sample_items(set, ax_x, ax_y);
  return set;
}

BasisSet2D build_diagonal_family(std::shared_ptr<const ProlateBasis1D> basis1d, std::size_t count,
                                 const Quaternion& coeff) {
  check_unit(coeff);
  const auto& b = *basis1d;
  if (count == 0 || count > b.count()) {
    throw Error(ErrorKind::BadParameters, "diagonal family count must lie in [1, count1d]");
  }
  BasisSet2D set;
  set.basis1d = std::move(basis1d);
  set.coeff = coeff;
  for (std::size_t n = 0; n < count; ++n) {
    require_index(b, n);
    set.items.push_back(make_item(b, n, n, coeff));
  }
  return set;
}

QSignal sample_element(const ProlateBasis1D& basis, const Qpswf2D& item, const GridAxis& ax_x,
                       const GridAxis& ax_y) {
  const auto xs = ax_x.coords();
  const auto ys = ax_y.coords();
  const VectorXd px = extend_eigenfunction(basis, item.m, xs);
  const VectorXd py = extend_eigenfunction(basis, item.n, ys);
  QSignal s(ax_x, ax_y);
  for (std::size_t ix = 0; ix < ax_x.count; ++ix) {
    for (std::size_t iy = 0; iy < ax_y.count; ++iy) {
      s(ix, iy) = item.coeff * (px[static_cast<Eigen::Index>(ix)] * py[static_cast<Eigen::Index>(iy)]);
    }
  }
  return s;
}

namespace {

// Kernel rows k(x_i - s_a) w_a of the independent Gauss rule.
MatrixXd weighted_kernel_rows(std::span<const double> xs, const QuadratureRule& rule, double W) {
  MatrixXd m(static_cast<Eigen::Index>(xs.size()), static_cast<Eigen::Index>(rule.nodes.size()));
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t a = 0; a < rule.nodes.size(); ++a) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(a)) =
          sinc_kernel(xs[i] - rule.nodes[a], W) * rule.weights[a];
    }
  }
  return m;
}

double lowpass_residual_from_nodes(const QSignal& samples, const SplitMatrix& at_nodes,
                                   const QuadratureRule& rule, double lambda, double W) {
  const auto xs = samples.ax_x().coords();
  const auto ys = samples.ax_y().coords();
  const MatrixXd kx = weighted_kernel_rows(xs, rule, W);
  const MatrixXd ky = weighted_kernel_rows(ys, rule, W);
  const SplitMatrix conv = sandwich(kx, at_nodes, ky.transpose());
  SplitMatrix lhs = to_split(samples);
  lhs *= lambda;
  const double denom = grid_norm_sq(lhs, samples.weights_x(), samples.weights_y());
  const double num = grid_norm_sq(lhs - conv, samples.weights_x(), samples.weights_y());
  return std::sqrt(num / denom);
}

std::size_t default_quad(const ProlateBasis1D& b, std::size_t quad_n) {
  return quad_n != 0 ? quad_n : b.axis.size() + 37;
}

}  // namespace

double lowpass_residual(const QSignal& samples,
                        const std::function<Quaternion(double, double)>& inside, double lambda,
                        double T, double W, std::size_t quad_n) {
  const QuadratureRule rule = gauss_legendre(quad_n, -T, T);
  const auto m = static_cast<Eigen::Index>(quad_n);
  SplitMatrix f(m, m);
  for (Eigen::Index a = 0; a < m; ++a) {
    for (Eigen::Index b = 0; b < m; ++b) f.set(a, b, inside(rule.nodes[a], rule.nodes[b]));
  }
  return lowpass_residual_from_nodes(samples, f, rule, lambda, W);
}

double verify_lowpass(const ProlateBasis1D& basis, const Qpswf2D& psi, std::size_t quad_n) {
  require_samples(psi);
  const std::size_t nq = default_quad(basis, quad_n);
  const QuadratureRule rule = gauss_legendre(nq, -basis.T, basis.T);
  const VectorXd px = extend_eigenfunction(basis, psi.m, rule.nodes);
  const VectorXd py = extend_eigenfunction(basis, psi.n, rule.nodes);
  const MatrixXd outer = px * py.transpose();
  SplitMatrix f;
  for (int r = 0; r < 4; ++r) f.c[r] = psi.coeff[r] * outer;
  return lowpass_residual_from_nodes(psi.values, f, rule, psi.lambda2d, basis.W);
}

FiniteQftReport verify_finite_qft(const ProlateBasis1D& basis, const Qpswf2D& psi,
                                  std::size_t quad_n) {
  require_samples(psi);
  const std::size_t nq = default_quad(basis, quad_n);
  const QuadratureRule rule = gauss_legendre(nq, -basis.T, basis.T);
  const double kappa = basis.kappa();
  const QSignal& vals = psi.values;

  // Finite transform of one factor on the grid axis, and its least-squares multiplier.
  auto transform = [&](std::size_t k, const GridAxis& ax, const std::vector<double>& wgrid,
                       std::vector<std::complex<double>>& out) {
    const VectorXd at_rule = extend_eigenfunction(basis, k, rule.nodes);
    const auto xs = ax.coords();
    const VectorXd at_grid = extend_eigenfunction(basis, k, xs);
    out.assign(xs.size(), {0.0, 0.0});
    std::complex<double> num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      std::complex<double> acc = 0.0;
      for (std::size_t a = 0; a < nq; ++a) {
        const double t = kappa * rule.nodes[a] * xs[i];
        acc += std::complex<double>(std::cos(t), std::sin(t)) *
               (rule.weights[a] * at_rule[static_cast<Eigen::Index>(a)]);
      }
      out[i] = acc;
      const double phi = at_grid[static_cast<Eigen::Index>(i)];
      num += wgrid[i] * acc * phi;
      den += wgrid[i] * phi * phi;
    }
    return num / den;
  };

  std::vector<std::complex<double>> ix;
  std::vector<std::complex<double>> jy;
  FiniteQftReport rep;
  rep.mu_x = transform(psi.m, vals.ax_x(), vals.weights_x(), ix);
  rep.mu_y = transform(psi.n, vals.ax_y(), vals.weights_y(), jy);

  const Quaternion mx(rep.mu_x.real(), rep.mu_x.imag(), 0.0, 0.0);
  const Quaternion my(rep.mu_y.real(), 0.0, rep.mu_y.imag(), 0.0);
  double num = 0.0;
  double den = 0.0;
  for (std::size_t a = 0; a < vals.nx(); ++a) {
    const Quaternion left(ix[a].real(), ix[a].imag(), 0.0, 0.0);
    const Quaternion lc = left * psi.coeff;
    for (std::size_t b = 0; b < vals.ny(); ++b) {
      const Quaternion lhs = lc * Quaternion(jy[b].real(), 0.0, jy[b].imag(), 0.0);
      const Quaternion rhs = mx * vals(a, b) * my;
      const double w = vals.quad_weight(a, b);
      num += w * norm_sq(lhs - rhs);
      den += w * norm_sq(lhs);
    }
  }
  rep.residual = std::sqrt(num / den);
  const double predicted =
      kappa * kappa * std::norm(rep.mu_x) * std::norm(rep.mu_y) / (kTwoPi * kTwoPi);
  rep.multiplier_residual = std::abs(psi.lambda2d - predicted) / psi.lambda2d;
  rep.stored_mismatch = std::max(std::abs(rep.mu_x - psi.mu_x) / std::abs(psi.mu_x),
                                 std::abs(rep.mu_y - psi.mu_y) / std::abs(psi.mu_y));
  return rep;
}

AllpassReport verify_allpass(const QSignal& psi, double W) {
  auto rows = [&](const GridAxis& ax, const std::vector<double>& w) {
    const auto n = static_cast<Eigen::Index>(ax.count);
    MatrixXd k(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index p = 0; p < n; ++p) {
        k(i, p) = sinc_kernel(ax.coord(static_cast<std::size_t>(i)) -
                                  ax.coord(static_cast<std::size_t>(p)),
                              W) *
                  w[static_cast<std::size_t>(p)];
      }
    }
    return k;
  };
  const MatrixXd kx = rows(psi.ax_x(), psi.weights_x());
  const MatrixXd ky = rows(psi.ax_y(), psi.weights_y());
  const SplitMatrix f = to_split(psi);
  const SplitMatrix conv = sandwich(kx, f, ky.transpose());
  const double e = grid_norm_sq(f, psi.weights_x(), psi.weights_y());
  AllpassReport rep;
  rep.residual = std::sqrt(grid_norm_sq(f - conv, psi.weights_x(), psi.weights_y()) / e);
  rep.tail_energy = std::max(0.0, 1.0 - e);
  // psi - B_W(chi psi) = B_W((1 - chi) psi), whose norm is at most that of the tail.
  rep.tail_bound = std::sqrt(rep.tail_energy / e);
  return rep;
}

double QuaternionMatrix::max_deviation_from_diagonal(std::span<const double> d) const {
  double m = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      Quaternion q = (*this)(r, c);
      if (r == c) q.w -= d[r];
      m = std::max(m, modulus(q));
    }
  }
  return m;
}

MatrixXd gram_1d_real_line(const ProlateBasis1D& basis, std::size_t count) {
  const auto n = static_cast<Eigen::Index>(basis.axis.size());
  MatrixXd alpha(n, static_cast<Eigen::Index>(count));
  for (std::size_t k = 0; k < count; ++k) {
    alpha.col(static_cast<Eigen::Index>(k)) = basis.extension_coefficients(k);
  }
  // The sinc kernel reproduces itself: int k(x - s) k(x - t) dx = k(s - t).
  return alpha.transpose() * basis.axis.kernel() * alpha;
}

MatrixXd gram_1d_interval(const ProlateBasis1D& basis, std::size_t count) {
  const MatrixXd phi = basis.values.leftCols(static_cast<Eigen::Index>(count));
  return phi.transpose() * basis.axis.weight_vector().asDiagonal() * phi;
}

QuaternionMatrix gram_matrix(const BasisSet2D& basis, GramDomain domain) {
  std::size_t kmax = 0;
  for (const auto& it : basis.items) kmax = std::max({kmax, it.m + 1, it.n + 1});
  const MatrixXd g = domain == GramDomain::RealPlane ? gram_1d_real_line(*basis.basis1d, kmax)
                                                     : gram_1d_interval(*basis.basis1d, kmax);
  const std::size_t k = basis.size();
  QuaternionMatrix out(k);
  for (std::size_t p = 0; p < k; ++p) {
    const auto& a = basis.items[p];
    for (std::size_t q = 0; q < k; ++q) {
      const auto& b = basis.items[q];
      const double s = g(static_cast<Eigen::Index>(a.m), static_cast<Eigen::Index>(b.m)) *
                       g(static_cast<Eigen::Index>(a.n), static_cast<Eigen::Index>(b.n));
      out(p, q) = (a.coeff * conj(b.coeff)) * s;
    }
  }
  return out;
}

QuaternionMatrix gram_matrix(const BasisSet2D& basis, const Region& region) {
  const std::size_t k = basis.size();
  QuaternionMatrix out(k);
  parallel_for(k, [&](std::size_t p) {
    for (std::size_t q = 0; q < k; ++q) {
      out(p, q) = inner_product(basis.items[p].values, basis.items[q].values, region);
    }
  });
  return out;
}

}  // namespace qpswf
