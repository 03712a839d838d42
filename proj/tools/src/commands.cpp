#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <fstream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cli_error.hpp"
#include "output.hpp"
#include "qpswf/concentration.hpp"
#include "qpswf/error.hpp"
#include "qpswf/extrapolate.hpp"
#include "qpswf/parallel.hpp"
#include "qpswf/prolate.hpp"
#include "qpswf/qft.hpp"
#include "qpswf/qgrid_io.hpp"
#include "qpswf/random.hpp"

namespace qpswf::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw CliError(kConfigError, "output_dir", "cannot create " + dir.string());
  }
}

json complex_json(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

std::complex<double> complex_from(const json& j) {
  return {j.at(0).get<double>(), j.at(1).get<double>()};
}

json quaternion_json(const Quaternion& q) { return json::array({q.w, q.x, q.y, q.z}); }

Quaternion quaternion_from(const json& j) {
  return {j.at(0).get<double>(), j.at(1).get<double>(), j.at(2).get<double>(), j.at(3).get<double>()};
}

json nullable(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

std::string element_name(std::size_t index, std::size_t count) {
  const std::size_t digits = std::max<std::size_t>(2, std::to_string(count - 1).size());
  std::string s = std::to_string(index);
  return "psi_" + std::string(digits - s.size(), '0') + s + ".qgrid";
}

std::size_t max_1d_index(const BasisSet2D& set) {
  std::size_t k = 0;
  for (const auto& it : set.items) k = std::max({k, it.m + 1, it.n + 1});
  return k;
}

QSignal read_signal(const fs::path& path) {
  if (!fs::exists(path)) throw CliError(kConfigError, "missing_file", "no such file " + path.string());
  return read_qgrid(path);
}

}  // namespace

// ---------------------------------------------------------------- basis

int cmd_basis(const RunConfig& cfg, std::ostream& log) {
  validate(cfg);
  ensure_dir(cfg.output_dir);
  const std::size_t count1d = std::min(cfg.basis_count, cfg.quad_n);
  auto b1 = std::make_shared<ProlateBasis1D>(eig_prolate_1d(cfg.T, cfg.W, cfg.quad_n, count1d));
  const GridAxis ax = GridAxis::symmetric(cfg.halfwidth(), cfg.grid_n);
  const BasisSet2D set = build_qpswf_basis(b1, cfg.basis_count, default_coefficient(), ax, ax);
  const std::size_t k1 = max_1d_index(set);

  std::ostringstream csv;
  csv << "k,lambda,mu_re,mu_im\n";
  json eig1 = json::array();
  json mu1 = json::array();
  for (std::size_t k = 0; k < k1; ++k) {
    csv << k << ',' << fmt(b1->eigvals[k]) << ',' << fmt(b1->mu[k].real()) << ','
        << fmt(b1->mu[k].imag()) << '\n';
    eig1.push_back(b1->eigvals[k]);
    mu1.push_back(complex_json(b1->mu[k]));
  }
  write_text_file(cfg.output_dir / "eigenvalues.csv", csv.str());

  json elements = json::array();
  for (std::size_t i = 0; i < set.size(); ++i) {
    const auto& it = set.items[i];
    const std::string name = element_name(i, set.size());
    write_qgrid(cfg.output_dir / name, it.values);
    elements.push_back({{"index", i},
                        {"m", it.m},
                        {"n", it.n},
                        {"lambda", it.lambda2d},
                        {"mu_x", complex_json(it.mu_x)},
                        {"mu_y", complex_json(it.mu_y)},
                        {"file", name}});
  }
  json manifest = {{"format", "qpswf-basis"},
                   {"version", 1},
                   {"config", config_to_json(cfg)},
                   {"T", cfg.T},
                   {"W", cfg.W},
                   {"c", cfg.T * cfg.W},
                   {"kappa", cfg.W / cfg.T},
                   {"quad_n", cfg.quad_n},
                   {"grid", {{"x0", ax.start}, {"dx", ax.step}, {"n", ax.count}}},
                   {"coefficient", quaternion_json(set.coeff)},
                   {"eigenvalues_1d", eig1},
                   {"mu_1d", mu1},
                   {"elements", elements}};
  write_text_file(cfg.output_dir / "manifest.json", manifest.dump(2) + "\n");
  log << "basis: " << set.size() << " elements, lambda0 = " << fmt(set.lambda0()) << ", written to "
      << cfg.output_dir.string() << "\n";
  return kOk;
}

// ---------------------------------------------------------------- verify

namespace {

struct CheckResult {
  std::string name;
  double max = 0.0;
  std::size_t index = 0;
  bool passed = true;
  json extra = json::object();
};

}  // namespace

int cmd_verify(const RunConfig& cfg, const fs::path& manifest_path, std::ostream& log) {
  if (!(cfg.tol > 0.0)) throw CliError(kConfigError, "tol_positive", "tol must be positive");
  const json m = read_json_file(manifest_path, "manifest");
  const fs::path dir = manifest_path.parent_path();

  double T = 0.0, W = 0.0;
  std::size_t quad_n = 0;
  Quaternion coeff;
  std::vector<Qpswf2D> items;
  std::size_t count1d = 0;
  try {
    T = m.at("T").get<double>();
    W = m.at("W").get<double>();
    quad_n = m.at("quad_n").get<std::size_t>();
    coeff = quaternion_from(m.at("coefficient"));
    count1d = m.at("eigenvalues_1d").size();
    for (const auto& e : m.at("elements")) {
      Qpswf2D it;
      it.m = e.at("m").get<std::size_t>();
      it.n = e.at("n").get<std::size_t>();
      it.lambda2d = e.at("lambda").get<double>();
      it.mu_x = complex_from(e.at("mu_x"));
      it.mu_y = complex_from(e.at("mu_y"));
      it.coeff = coeff;
      it.values = read_signal(dir / e.at("file").get<std::string>());
      items.push_back(std::move(it));
    }
  } catch (const json::exception& e) {
    throw CliError(kConfigError, "malformed_manifest", e.what());
  }
  if (items.empty() || count1d == 0) throw CliError(kConfigError, "malformed_manifest", "no elements");
  for (const auto& it : items) {
    if (it.m >= count1d || it.n >= count1d) {
      throw CliError(kConfigError, "malformed_manifest", "element index beyond eigenvalues_1d");
    }
  }

  auto b1 = std::make_shared<ProlateBasis1D>(eig_prolate_1d(T, W, quad_n, count1d));
  const std::size_t n = items.size();
  std::vector<double> lowpass(n), fqft(n), mult(n), mu(n), ap(n), ap_tail(n);
  parallel_for(n, [&](std::size_t i) {
    lowpass[i] = verify_lowpass(*b1, items[i]);
    const FiniteQftReport r = verify_finite_qft(*b1, items[i]);
    fqft[i] = r.residual;
    mult[i] = r.multiplier_residual;
    mu[i] = r.stored_mismatch;
    const AllpassReport a = verify_allpass(items[i].values, W);
    ap[i] = a.residual;
    ap_tail[i] = a.tail_bound;
  });

  auto worst = [&](const std::string& name, const std::vector<double>& v) {
    CheckResult c;
    c.name = name;
    c.max = v.front();
    for (std::size_t i = 1; i < v.size(); ++i) {
      if (!(v[i] <= c.max)) {
        c.max = v[i];
        c.index = i;
      }
    }
    c.passed = c.max <= cfg.tol;
    return c;
  };
  std::vector<CheckResult> checks;
  checks.push_back(worst("verify_lowpass", lowpass));
  checks.push_back(worst("verify_finite_qft", fqft));
  checks.push_back(worst("verify_multiplier", mult));
  checks.push_back(worst("verify_mu", mu));
  {
    // The window truncates psi; its tail energy bounds that part of the residual.
    std::vector<double> excess(n);
    for (std::size_t i = 0; i < n; ++i) excess[i] = ap[i] - ap_tail[i];
    CheckResult c = worst("verify_allpass", excess);
    c.extra = {{"max_residual", *std::max_element(ap.begin(), ap.end())},
               {"max_tail_bound", *std::max_element(ap_tail.begin(), ap_tail.end())}};
    checks.push_back(c);
  }
  {
    BasisSet2D set;
    set.basis1d = b1;
    set.coeff = coeff;
    set.items = items;
    for (auto& it : set.items) it.lambda2d = b1->eigvals[it.m] * b1->eigvals[it.n];
    const QuaternionMatrix gr = gram_matrix(set, GramDomain::RealPlane);
    const QuaternionMatrix gt = gram_matrix(set, GramDomain::TimeSquare);
    std::vector<double> ones(n, 1.0), lam(n);
    for (std::size_t i = 0; i < n; ++i) lam[i] = set.items[i].lambda2d;
    CheckResult c1;
    c1.name = "gram_real_plane";
    c1.max = gr.max_deviation_from_diagonal(ones);
    c1.passed = c1.max <= cfg.tol;
    CheckResult c2;
    c2.name = "gram_time_square";
    c2.max = gt.max_deviation_from_diagonal(lam);
    c2.passed = c2.max <= cfg.tol;
    checks.push_back(c1);
    checks.push_back(c2);
  }

  json report = {{"manifest", manifest_path.string()}, {"tol", cfg.tol}, {"elements", n}};
  json jc = json::object();
  bool all = true;
  for (const auto& c : checks) {
    json e = {{"max", c.max}, {"index", c.index}, {"passed", c.passed}};
    e.update(c.extra);
    jc[c.name] = e;
    all = all && c.passed;
  }
  report["checks"] = jc;
  report["passed"] = all;
  ensure_dir(cfg.output_dir);
  write_text_file(cfg.output_dir / "verify.json", report.dump(2) + "\n");
  for (const auto& c : checks) {
    if (!c.passed) {
      throw CliError(kResidualViolation, c.name,
                     "max residual " + fmt(c.max) + " exceeds tol " + fmt(cfg.tol) + " (element " +
                         std::to_string(c.index) + ")");
    }
  }
  log << "verify: " << n << " elements, all checks within " << fmt(cfg.tol) << "\n";
  return kOk;
}

// ---------------------------------------------------------------- concentration

std::size_t concentration_nodes(const RunConfig& cfg) {
  const auto rule = 48 + 2 * static_cast<std::size_t>(std::ceil(cfg.T * cfg.W));
  return std::min(cfg.quad_n, rule);
}

namespace {

// alpha sum q_k psi_k + beta D_T(sum r_k psi_k) + gamma (I - D_T)(sum s_k psi_k)
NodalSignal random_mixed_signal(CounterRng& rng, const BasisSet2D& basis, const NodalPlane& plane) {
  const std::size_t k = std::min<std::size_t>(basis.size(), 8);
  NodalSignal a = NodalSignal::zero(plane), b = a, c = a;
  for (std::size_t i = 0; i < k; ++i) {
    const NodalSignal psi = element_signal(basis, i);
    a += left_multiply(rng.normal_quaternion(), psi);
    b += left_multiply(rng.normal_quaternion(), psi);
    c += left_multiply(rng.normal_quaternion(), psi);
  }
  const double alpha = rng.uniform();
  const double beta = rng.uniform();
  const double gamma = rng.uniform();
  NodalSignal tb = time_limit(plane, b);
  NodalSignal tc = c - time_limit(plane, c);
  return alpha * a + beta * tb + gamma * tc;
}

}  // namespace

int cmd_concentration(const RunConfig& cfg, const std::optional<fs::path>& input, bool table,
                      std::ostream& log) {
  validate(cfg);
  std::optional<QSignal> user;
  if (input) user = read_signal(*input);
  ensure_dir(cfg.output_dir);

  const std::size_t nodes = concentration_nodes(cfg);
  const std::size_t count1d = std::min(cfg.basis_count, nodes);
  auto b1 = std::make_shared<ProlateBasis1D>(eig_prolate_1d(cfg.T, cfg.W, nodes, count1d));
  const BasisSet2D basis = build_qpswf_basis(b1, cfg.basis_count, default_coefficient());
  const NodalPlane plane = basis_plane(basis);
  const double l0 = basis.lambda0();

  // Uniform in [0, 1] plus ten points on the arc sqrt(lambda0) <= xi <= 1.
  std::vector<double> xis;
  for (int i = 0; i <= 40; ++i) xis.push_back(i / 40.0);
  for (int i = 0; i < 10; ++i) xis.push_back(std::sqrt(l0) + (1.0 - std::sqrt(l0)) * i / 10.0);
  std::sort(xis.begin(), xis.end());
  std::vector<RegionSample> samples = sweep_admissible_region(basis, xis);
  CounterRng rng(cfg.seed);
  for (int i = 0; i < 200; ++i) {
    samples.push_back({energy_ratios(basis, random_mixed_signal(rng, basis, plane)), "random"});
  }

  std::ostringstream csv;
  csv << "source,xi,eta_q,xi_sq,eta_q_sq,deficit\n";
  std::map<std::string, Series> by_source;
  const std::map<std::string, std::string> colors = {
      {"psi0", "#d62728"},     {"time_limited", "#9467bd"}, {"boundary", "#ff7f0e"},
      {"eta_one", "#2ca02c"},  {"zero_xi", "#8c564b"},      {"random", "#7f7f7f"}};
  double boundary_dev = 0.0;
  double min_deficit = std::numeric_limits<double>::infinity();
  std::map<std::string, int> counts;
  Series curve;
  curve.name = "boundary curve";
  curve.color = "#1f77b4";
  for (const auto& s : samples) {
    const auto& r = s.report;
    csv << s.source << ',' << fmt(r.xi) << ',' << fmt(r.eta_q) << ',' << fmt(r.xi * r.xi) << ','
        << fmt(r.eta_q * r.eta_q) << ',' << fmt(r.angle_sum_deficit) << '\n';
    if (s.source == "curve") {
      curve.x.push_back(r.xi);
      curve.y.push_back(r.eta_q);
      continue;
    }
    ++counts[s.source];
    min_deficit = std::min(min_deficit, r.angle_sum_deficit);
    if (s.source == "boundary") boundary_dev = std::max(boundary_dev, std::abs(r.angle_sum_deficit));
    auto& ser = by_source[s.source];
    ser.name = s.source;
    ser.style = Series::Style::Points;
    ser.color = colors.count(s.source) ? colors.at(s.source) : "#000000";
    ser.x.push_back(r.xi);
    ser.y.push_back(r.eta_q);
  }
  write_text_file(cfg.output_dir / "region.csv", csv.str());

  SvgPlot plot;
  plot.title = "Admissible (xi, eta_Q) region, lambda0 = " + fmt(l0);
  plot.x_label = "xi (time concentration)";
  plot.y_label = "eta_Q (band concentration)";
  plot.x_min = 0.0;
  plot.x_max = 1.0;
  plot.y_min = 0.0;
  plot.y_max = 1.02;
  plot.series.push_back(curve);
  for (const char* key : {"random", "boundary", "eta_one", "zero_xi", "psi0", "time_limited"}) {
    if (by_source.count(key)) plot.series.push_back(by_source[key]);
  }
  write_text_file(cfg.output_dir / "region.svg", plot.render());

  const LeastAngle la = least_angle_check(basis);
  json report = {{"T", cfg.T},
                 {"W", cfg.W},
                 {"c", cfg.T * cfg.W},
                 {"kappa", cfg.W / cfg.T},
                 {"nodes", nodes},
                 {"lambda0", l0},
                 {"least_angle", {{"theoretical", la.theoretical}, {"achieved", la.achieved}}},
                 {"boundary_max_abs_deficit", boundary_dev},
                 {"min_deficit", min_deficit},
                 {"counts", counts}};
  if (user) {
    const EnergyReport r = energy_ratios(*user, cfg.T, cfg.W, l0);
    report["input"] = {{"file", input->string()},
                       {"xi", r.xi},
                       {"eta_q", r.eta_q},
                       {"xi_sq", r.xi * r.xi},
                       {"eta_q_sq", r.eta_q * r.eta_q},
                       {"deficit", nullable(r.angle_sum_deficit)}};
  }
  if (table) {
    std::size_t rows = 0;
    while (rows < std::min<std::size_t>(6, b1->count()) && b1->eigvals[rows] >= kEigenvalueFloor) ++rows;
    const BasisSet2D diag = build_diagonal_family(b1, rows, default_coefficient());
    std::ostringstream t;
    t << "n,lambda,xi,eta_q\n";
    for (std::size_t i = 0; i < diag.size(); ++i) {
      const EnergyReport r = energy_ratios(diag, element_signal(diag, i));
      t << i << ',' << fmt(diag.items[i].lambda2d) << ',' << fmt(r.xi) << ',' << fmt(r.eta_q) << '\n';
    }
    write_text_file(cfg.output_dir / "diagonal_family.csv", t.str());
  }
  write_text_file(cfg.output_dir / "report.json", report.dump(2) + "\n");
  log << "concentration: lambda0 = " << fmt(l0) << ", " << samples.size() << " rows in region.csv\n";
  return kOk;
}

// ---------------------------------------------------------------- extrapolate

int cmd_extrapolate(const RunConfig& cfg, const fs::path& observation, const fs::path& problem_path,
                    std::ostream& log) {
  const json pj = read_json_file(problem_path, "problem");
  double d = 0.0, W = 0.0, stop_tol = 1e-10;
  std::size_t max_steps = 500;
  std::optional<std::string> truth_file;
  try {
    for (const auto& item : pj.items()) {
      static const char* known[] = {"d", "W", "max_steps", "stop_tol", "truth_file"};
      if (std::find(std::begin(known), std::end(known), item.key()) == std::end(known)) {
        throw CliError(kConfigError, "problem_unknown_key", "unknown key '" + item.key() + "'");
      }
    }
    d = pj.at("d").get<double>();
    W = pj.at("W").get<double>();
    if (pj.contains("max_steps")) max_steps = pj.at("max_steps").get<std::size_t>();
    if (pj.contains("stop_tol")) stop_tol = pj.at("stop_tol").get<double>();
    if (pj.contains("truth_file")) truth_file = pj.at("truth_file").get<std::string>();
  } catch (const json::exception& e) {
    throw CliError(kConfigError, "malformed_problem", e.what());
  }
  if (!(d > 0.0) || !(W > 0.0)) throw CliError(kConfigError, "problem_range", "d and W must be positive");
  if (max_steps < 1) throw CliError(kConfigError, "problem_range", "max_steps must be at least 1");
  if (!(stop_tol >= 0.0)) throw CliError(kConfigError, "problem_range", "stop_tol must be non-negative");

  const QSignal obs = read_signal(observation);
  ExtrapolationProblem problem = problem_from_grid(obs, d, W);
  if (truth_file) {
    fs::path tp = *truth_file;
    if (tp.is_relative()) tp = problem_path.parent_path() / tp;
    QSignal truth = read_signal(tp);
    if (!truth.same_grid(obs)) throw Error(ErrorKind::GridMismatch, "truth and observation grids differ");
    problem.truth_samples = std::move(truth);
  }
  ensure_dir(cfg.output_dir);
  const ExtrapolationTrace trace = pg_run(problem, max_steps, stop_tol);

  write_qgrid(cfg.output_dir / "final.qgrid",
              sample(problem.plane, trace.final_iterate, obs.ax_x(), obs.ax_y()));
  std::ostringstream csv;
  csv << "n,E_n,sup_e,bound,delta,sqrt_w_bound\n";
  Series e_series{"E_n", {}, {}, Series::Style::Line, "#1f77b4"};
  Series b_series{"bound^2", {}, {}, Series::Style::Line, "#ff7f0e"};
  Series s_series{"sup_e^2", {}, {}, Series::Style::Points, "#2ca02c"};
  Series d_series{"delta", {}, {}, Series::Style::Line, "#7f7f7f"};
  for (const auto& r : trace.records) {
    csv << r.n << ',' << fmt(r.error_energy) << ',' << fmt(r.sup_error) << ',' << fmt(r.bound) << ','
        << fmt(r.delta) << ',' << fmt(r.sqrt_w_bound) << '\n';
    const double x = static_cast<double>(r.n);
    e_series.x.push_back(x);
    e_series.y.push_back(r.error_energy);
    b_series.x.push_back(x);
    b_series.y.push_back(r.bound * r.bound);
    s_series.x.push_back(x);
    s_series.y.push_back(r.sup_error * r.sup_error);
    d_series.x.push_back(x);
    d_series.y.push_back(r.delta);
  }
  write_text_file(cfg.output_dir / "trace.csv", csv.str());
  SvgPlot plot;
  plot.title = "Extrapolation error decay";
  plot.x_label = "iteration n";
  plot.y_label = "value (log scale)";
  plot.log_y = true;
  if (truth_file) {
    plot.series = {e_series, b_series, s_series, d_series};
  } else {
    plot.series = {d_series};
  }
  write_text_file(cfg.output_dir / "trace.svg", plot.render());

  const auto& last = trace.records.back();
  if (!trace.converged) {
    throw CliError(kNotConverged, "max_steps",
                   "no convergence after " + std::to_string(last.n) + " steps (delta " +
                       fmt(last.delta) + ", stop_tol " + fmt(stop_tol) + ")");
  }
  log << "extrapolate: converged after " << last.n << " steps (delta " << fmt(last.delta) << ")\n";
  return kOk;
}

// ---------------------------------------------------------------- qft

int cmd_qft(const RunConfig& cfg, const fs::path& input, const QftOptions& opts, std::ostream& log) {
  const QSignal f = read_signal(input);
  if (opts.count && (*opts.count < 3 || *opts.count % 2 == 0)) {
    throw CliError(kConfigError, "count_odd", "--count must be odd and at least 3");
  }
  if (opts.halfwidth && !(*opts.halfwidth > 0.0)) {
    throw CliError(kConfigError, "halfwidth_positive", "--halfwidth must be positive");
  }
  auto axis_for = [&](const GridAxis& src) {
    const GridAxis dual = dual_axis(src);
    const double h = opts.halfwidth ? *opts.halfwidth : dual.end();
    const std::size_t n = opts.count ? *opts.count : dual.count;
    return GridAxis::symmetric(h, n);
  };
  const GridAxis ax = axis_for(f.ax_x());
  const GridAxis ay = axis_for(f.ax_y());
  ensure_dir(cfg.output_dir);
  if (opts.inverse) {
    write_qgrid(cfg.output_dir / "signal.qgrid", inverse_qft(f, ax, ay));
    log << "qft: inverse transform written to " << (cfg.output_dir / "signal.qgrid").string() << "\n";
    return kOk;
  }
  const SpectrumQ s = forward_qft(f, ax, ay);
  write_qgrid(cfg.output_dir / "spectrum.qgrid", s.combined);
  for (int r = 0; r < 4; ++r) {
    write_qgrid(cfg.output_dir / ("spectrum.c" + std::to_string(r) + ".qgrid"), s.components[r]);
  }
  const std::vector<double> qm = q_modulus_field(s);
  double spectral = 0.0;
  for (std::size_t a = 0; a < s.combined.nx(); ++a) {
    for (std::size_t b = 0; b < s.combined.ny(); ++b) {
      spectral += s.combined.quad_weight(a, b) * qm[a * s.combined.ny() + b];
    }
  }
  const double e = energy(f);
  json report = {{"input", input.string()},
                 {"energy", e},
                 {"spectral_energy", spectral},
                 {"relative_gap", e > 0.0 ? std::abs(e - spectral) / e : 0.0}};
  write_text_file(cfg.output_dir / "qft_report.json", report.dump(2) + "\n");
  log << "qft: spectrum on " << ax.count << " x " << ay.count << " nodes, Parseval gap "
      << fmt(report["relative_gap"].get<double>()) << "\n";
  return kOk;
}

// ---------------------------------------------------------------- entry point

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"qpswf: quaternionic prolate spheroidal wave functions"};
  app.fallthrough();
  app.require_subcommand(1);

  std::string config_path, output_dir;
  std::uint64_t seed = 0;
  double tol = 0.0;
  auto* o_config = app.add_option("--config", config_path, "JSON run configuration");
  auto* o_output = app.add_option("--output", output_dir, "Output directory");
  auto* o_seed = app.add_option("--seed", seed, "Seed for random test signals");
  auto* o_tol = app.add_option("--tol", tol, "Residual tolerance for verify");

  auto* basis = app.add_subcommand("basis", "Compute the basis and write it to the output directory");

  auto* verify = app.add_subcommand("verify", "Re-check a written basis");
  std::string manifest;
  verify->add_option("--manifest", manifest, "Manifest path (default <output>/manifest.json)");

  auto* conc = app.add_subcommand("concentration", "Sweep the admissible (xi, eta_Q) region");
  std::string conc_input;
  bool conc_table = false;
  auto* o_input = conc->add_option("--input", conc_input, "QGRID signal to report on");
  conc->add_flag("--table", conc_table, "Also write diagonal_family.csv for the diagonal family");

  auto* extra = app.add_subcommand("extrapolate", "Extrapolate a signal observed on a square");
  std::string obs_path, problem_path;
  extra->add_option("--observation", obs_path, "QGRID observation")->required();
  extra->add_option("--problem", problem_path, "JSON problem {d, W, max_steps, stop_tol, truth_file}")
      ->required();

  auto* qft = app.add_subcommand("qft", "Forward or inverse two-sided quaternion Fourier transform");
  std::string qft_input;
  QftOptions qopts;
  double qft_half = 0.0;
  std::size_t qft_count = 0;
  qft->add_option("--input", qft_input, "QGRID input")->required();
  qft->add_flag("--inverse", qopts.inverse, "Treat the input as a spectrum");
  auto* o_half = qft->add_option("--halfwidth", qft_half, "Half-width of the output axes");
  auto* o_count = qft->add_option("--count", qft_count, "Odd node count of the output axes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "ERROR " << kConfigError << " usage: " << e.what() << "\n";
    return kConfigError;
  }

  try {
    RunConfig cfg = o_config->count() ? load_config(config_path) : RunConfig{};
    if (o_output->count()) cfg.output_dir = output_dir;
    if (o_seed->count()) cfg.seed = seed;
    if (o_tol->count()) cfg.tol = tol;

    if (basis->parsed()) return cmd_basis(cfg, out);
    if (verify->parsed()) {
      const fs::path mp = manifest.empty() ? cfg.output_dir / "manifest.json" : fs::path(manifest);
      return cmd_verify(cfg, mp, out);
    }
    if (conc->parsed()) {
      std::optional<fs::path> in;
      if (o_input->count()) in = conc_input;
      return cmd_concentration(cfg, in, conc_table, out);
    }
    if (extra->parsed()) return cmd_extrapolate(cfg, obs_path, problem_path, out);
    if (qft->parsed()) {
      if (o_half->count()) qopts.halfwidth = qft_half;
      if (o_count->count()) qopts.count = qft_count;
      return cmd_qft(cfg, qft_input, qopts, out);
    }
  } catch (const CliError& e) {
    err << "ERROR " << e.code() << ' ' << e.check() << ": " << e.what() << "\n";
    return e.code();
  } catch (const Error& e) {
    const bool solver =
        e.kind() == ErrorKind::ConvergenceFailure || e.kind() == ErrorKind::EigenvalueTooSmall;
    const int code = solver ? kEigensolverError : kConfigError;
    err << "ERROR " << code << ' ' << to_string(e.kind()) << ": " << e.what() << "\n";
    return code;
  } catch (const std::exception& e) {
    err << "ERROR " << kConfigError << " internal: " << e.what() << "\n";
    return kConfigError;
  }
  return kConfigError;
}

}  // namespace qpswf::cli
