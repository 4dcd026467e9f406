// Acceptance run: one PASS/FAIL line per criterion. `--criterion <id>` runs a
// single one (ctest registers each separately); no argument runs all.
//
// Criteria that go through quadrature are also repeated at q = 128 and must
// not move by more than kDoublingTol.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cli.hpp"
#include "wnear/coefficients.hpp"
#include "wnear/constants.hpp"
#include "wnear/dispersive.hpp"
#include "wnear/gram.hpp"
#include "wnear/optimizer.hpp"
#include "wnear/parallel.hpp"
#include "wnear/radial.hpp"
#include "wnear/schatten.hpp"
#include "wnear/spectral.hpp"

using namespace wnear;
namespace fs = std::filesystem;

namespace {

constexpr double kDoublingTol = 1e-10;

// Collects the conditions of one criterion; the detail line lists the measured
// values so a FAIL explains itself.
class Verdict {
 public:
  void check(bool ok, const std::string& what) {
    if (!ok) {
      ok_ = false;
      failures_.push_back(what);
    }
  }
  void note(const std::string& s) { notes_.push_back(s); }
  bool ok() const { return ok_; }
  std::string detail() const {
    std::string out;
    for (const auto& f : failures_) out += (out.empty() ? "" : "; ") + ("violated: " + f);
    for (const auto& n : notes_) out += (out.empty() ? "" : "; ") + n;
    return out;
  }

 private:
  bool ok_ = true;
  std::vector<std::string> failures_, notes_;
};

std::string num(double v, int digits = 6) {
  std::ostringstream s;
  s << std::setprecision(digits) << v;
  return s.str();
}

// 1. Gaussian closed-form spectrum.
Verdict gaussian_spectrum() {
  Verdict v;
  double worst_radial = 0.0, worst_matrix = 0.0, drift = 0.0;
  for (double alpha : {0.5, 1.0, 2.0, 3.0}) {
    const GaussianSymbol F{1.0, alpha, {}, {}};
    const RadialSymbol s = radial_from(F);
    const CoefficientMatrix M = build_matrix(F, 21);
    const CoefficientMatrix M2 = build_matrix(F, 21, 128);
    for (std::size_t n = 0; n <= 20; ++n) {
      const double closed = (kTwoPi / (1 + alpha)) * std::pow((1 - alpha) / (1 + alpha), static_cast<double>(n));
      const double radial = radial_eigenvalue(s, n);
      const double diag = M(n, n).real();
      worst_radial = std::max(worst_radial, std::abs(radial - closed));
      worst_matrix = std::max(worst_matrix, std::abs(diag - closed));
      drift = std::max(drift, std::abs(M2(n, n).real() - diag));
      v.check(std::abs(radial - closed) <= 1e-10,
              "alpha=" + num(alpha) + " n=" + std::to_string(n) + " radial |mu-closed|=" + num(std::abs(radial - closed)));
      v.check(std::abs(diag - closed) <= 1e-10,
              "alpha=" + num(alpha) + " n=" + std::to_string(n) + " matrix |f_nn-closed|=" + num(std::abs(diag - closed)));
      if (alpha == 1.0) {
        const double delta = n == 0 ? kPi : 0.0;
        v.check(std::abs(radial - delta) <= 1e-10, "alpha=1 n=" + std::to_string(n) + " not pi delta");
      }
    }
  }
  v.check(drift <= kDoublingTol, "q-doubling drift " + num(drift));
  v.note("max radial error " + num(worst_radial, 3) + ", max matrix error " + num(worst_matrix, 3) +
         ", q-doubling drift " + num(drift, 3));
  return v;
}

// 2. Gaussian minimizer via the radial path.
Verdict gaussian_minimizer() {
  Verdict v;
  const PhasePoint z0{0.3, -0.2};
  const RadialMinimizer m = radial_minimizer(radial_from(GaussianSymbol{1.0, 2.0, {}, z0}));
  const GridSpec spec{-4, 4, -4, 4, 101, 101};
  const PhaseGrid g = evaluate_descriptor(m.descriptor, spec);
  double worst = 0.0;
  for (std::size_t i = 0; i < spec.nx; ++i)
    for (std::size_t j = 0; j < spec.nk; ++j) {
      const double dx = spec.x_at(i) - z0.x, dk = spec.k_at(j) - z0.k;
      worst = std::max(worst, std::abs(g.at(i, j) - 2.0 / 3.0 * std::exp(-dx * dx - dk * dk)));
    }
  v.check(m.descriptor.K == 0, "K=" + std::to_string(m.descriptor.K));
  v.check(worst <= 1e-8, "max pointwise error " + num(worst));
  v.note("K=" + std::to_string(m.descriptor.K) + ", max pointwise error " + num(worst, 3) + " on 101x101");
  return v;
}

struct CliRun {
  int status = -1;
  std::string text;
  json report;
  std::string err;
};

CliRun cli_run(const std::string& command, const std::string& config, const fs::path& out,
               std::optional<std::size_t> threads = std::nullopt) {
  cli::Invocation inv;
  inv.command = command;
  inv.config_path = "-";
  inv.output_dir = out;
  inv.threads = threads;
  std::istringstream in(config);
  std::ostringstream err;
  CliRun r;
  r.status = cli::run(inv, in, err);
  set_thread_count(0);
  r.err = err.str();
  if (r.status == 0) {
    std::ifstream f(out / "report.json");
    std::ostringstream ss;
    ss << f.rdbuf();
    r.text = ss.str();
    r.report = json::parse(r.text);
  }
  return r;
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("wnear_acceptance_" + name);
  fs::remove_all(p);
  return p;
}

// 3. Fixed point We0.
Verdict fixed_point() {
  Verdict v;
  const CliRun r = cli_run("closest", R"({"symbol": {"builtin": "we0"}})", scratch("we0"));
  v.check(r.status == 0, "closest exited with " + std::to_string(r.status) + " " + r.err);
  if (r.status != 0) return v;
  const json& res = r.report["result"];
  const double lambda = res["lambda_max"].get<double>();
  const double dist = res["min_distance"].get<double>();
  v.check(std::abs(lambda - 1.0) <= 1e-8, "lambda_max=" + num(lambda, 17));
  v.check(dist < 1e-6, "min_distance=" + num(dist));
  double off = 0.0;
  const json& c0 = res["c0"];
  for (std::size_t i = 1; i < c0.size(); ++i) off = std::max(off, std::hypot(c0[i][0].get<double>(), c0[i][1].get<double>()));
  const double re0 = c0[0][0].get<double>(), im0 = c0[0][1].get<double>();
  v.check(std::abs(re0 - 1.0) <= 1e-8 && im0 == 0.0 && off <= 1e-8,
          "c0 not (1,0,...): c0[0]=(" + num(re0) + "," + num(im0) + "), max tail " + num(off));
  v.note("lambda_max=" + num(lambda, 12) + ", min_distance=" + num(dist, 3) + ", N=" + res["N"].dump());
  return v;
}

// 4. Cubic-dispersion coefficients.
Verdict cubic_coefficients() {
  Verdict v;
  double drift = 0.0;
  for (double t : {0.02, 0.05, 0.1}) {
    const CoefficientMatrix M = build_matrix(cubic_snapshot(t), 2);
    const CoefficientMatrix M2 = build_matrix(cubic_snapshot(t), 2, 128);
    for (std::size_t i = 0; i < 4; ++i) drift = std::max(drift, std::abs(M.entries[i] - M2.entries[i]));
    const double tol = 5 * t * t * t;
    const double e00 = std::abs(M(0, 0).real() - (1 - 3 * t * t / 32));
    const double e01 = std::abs(std::abs(M(0, 1)) - std::sqrt(2.0) * t / 8);
    const double e11 = std::abs(M(1, 1).real() - (-3 * t * t / 32));
    v.check(e00 <= tol, "t=" + num(t) + " f00 error " + num(e00) + " > " + num(tol));
    v.check(e01 <= tol, "t=" + num(t) + " |f01| error " + num(e01) + " > " + num(tol));
    v.check(e11 <= tol, "t=" + num(t) + " f11 error " + num(e11) + " > " + num(tol));
    v.note("t=" + num(t) + ": errors " + num(e00, 2) + ", " + num(e01, 2) + ", " + num(e11, 2) + " (tol " +
           num(tol, 2) + ")");
  }
  v.check(drift <= kDoublingTol, "q-doubling drift " + num(drift));
  return v;
}

// 5. Cubic-dispersion 2x2 spectrum.
Verdict cubic_spectrum() {
  Verdict v;
  for (double t : {0.02, 0.05, 0.1}) {
    const CubicExampleReport r = cubic_example_report(t);
    const CubicExampleReport r2 = cubic_example_report(t, 2, 128);
    // Closed form on the computed matrix.
    const double a = r.F2[0][0].real(), d = r.F2[1][1].real(), b2 = std::norm(r.F2[1][0]);
    const double disc = std::sqrt((a - d) * (a - d) + 4 * b2);
    const double c1 = 0.5 * (a + d + disc), cm1 = 0.5 * (a + d - disc);
    v.check(std::abs(r.lambda1 - c1) <= 1e-10, "t=" + num(t) + " lambda1 vs 2x2 closed form " + num(std::abs(r.lambda1 - c1)));
    v.check(std::abs(r.lambda_minus1 - cm1) <= 1e-10,
            "t=" + num(t) + " lambda-1 vs 2x2 closed form " + num(std::abs(r.lambda_minus1 - cm1)));
    // The closed form in t.
    const double s = std::sqrt(1 + t * t / 8);
    const double p1 = 0.5 * (1 - 3 * t * t / 16 + s), pm1 = 0.5 * (1 - 3 * t * t / 16 - s);
    // The series.
    const double tol = 5 * t * t * t;
    const double e1 = std::abs(r.lambda1 - (1 - t * t / 16));
    const double em1 = std::abs(r.lambda_minus1 - (-t * t / 4));
    v.check(e1 <= tol, "t=" + num(t) + " lambda1 vs 1-t^2/16: " + num(e1) + " > " + num(tol));
    v.check(em1 <= tol, "t=" + num(t) + " lambda-1 vs -t^2/4: " + num(em1) + " > " + num(tol));
    v.check(r.lambda_minus1 < 0.0, "t=" + num(t) + " lambda-1 >= 0");
    v.check(std::abs(r.lambda1 - r2.lambda1) <= kDoublingTol && std::abs(r.lambda_minus1 - r2.lambda_minus1) <= kDoublingTol,
            "t=" + num(t) + " q-doubling drift");
    v.note("t=" + num(t) + ": lambda1=" + num(r.lambda1, 10) + " (t-closed " + num(p1, 10) + "), lambda-1=" +
           num(r.lambda_minus1, 6) + " (t-closed " + num(pm1, 6) + ", -t^2/4=" + num(-t * t / 4, 6) + ")");
  }
  return v;
}

// 6. Worked bounds at t = 0.01.
CubicExampleReport worked_t001() { return cubic_example_report(0.01); }

Verdict bound_M1() {
  Verdict v;
  const CubicExampleReport r = worked_t001();
  v.check(std::abs(r.bounds.gap_M1 - 0.478) <= 0.005, "M1=" + num(r.bounds.gap_M1) + " not in 0.478 +- 0.005");
  v.note("M1=" + num(r.bounds.gap_M1, 6) + " (m1=" + num(r.bounds.gap_m1, 6) + ", eps ||F||=" +
         num(r.epsilon * r.norm_F, 6) + ")");
  return v;
}

Verdict bound_eigenvalue() {
  Verdict v;
  const CubicExampleReport r = worked_t001();
  v.check(r.bounds.eigenvalue_bound <= 0.008 * 1.05, "eigenvalue bound " + num(r.bounds.eigenvalue_bound));
  v.note("eigenvalue bound " + num(r.bounds.eigenvalue_bound, 6) + " <= " + num(0.008 * 1.05));
  return v;
}

Verdict bound_eigenvector() {
  Verdict v;
  const CubicExampleReport r = worked_t001();
  v.check(r.bounds.eigenvector_bound.has_value(), "eigenvector bound not valid");
  if (!r.bounds.eigenvector_bound) return v;
  v.check(*r.bounds.eigenvector_bound <= 0.022 * 1.05, "eigenvector bound " + num(*r.bounds.eigenvector_bound));
  v.note("eigenvector bound " + num(*r.bounds.eigenvector_bound, 6) + " <= " + num(0.022 * 1.05));
  return v;
}

Verdict bound_wigner() {
  Verdict v;
  const CubicExampleReport r = worked_t001();
  v.check(r.bounds.wigner_bound.has_value(), "Wigner bound not valid");
  if (!r.bounds.wigner_bound) return v;
  v.check(*r.bounds.wigner_bound <= 0.024 * 1.05, "Wigner bound " + num(*r.bounds.wigner_bound));
  v.note("Wigner-distance bound " + num(*r.bounds.wigner_bound, 6) + " <= " + num(0.024 * 1.05));
  return v;
}

// 7. Moyal Gram identity.
Verdict gram() {
  Verdict v;
  const GramReport g = gram_check(8, 64);
  v.check(g.max_deviation < 1e-8, "max deviation " + num(g.max_deviation));
  v.note("n_max=8, q=64: max deviation " + num(g.max_deviation, 3) + " over " + std::to_string(g.dimension) +
         "x" + std::to_string(g.dimension));
  return v;
}

// 8. Monotonicity over leading blocks.
Verdict monotonicity() {
  Verdict v;
  const std::vector<std::size_t> orders = {2, 4, 8, 16};
  const GaussianSymbol gauss{1.0, 3.0, {}, {}};
  const SymbolSpec symbols[] = {gauss, cubic_snapshot(0.1)};
  const char* names[] = {"gaussian alpha=3", "cubic t=0.1"};
  for (int s = 0; s < 2; ++s) {
    const MonotonicityReport m = monotonicity_check(symbols[s], orders);
    const MonotonicityReport m2 = monotonicity_check(symbols[s], orders, 128);
    for (std::size_t i = 1; i < orders.size(); ++i) {
      v.check(m.mu_plus[i] >= m.mu_plus[i - 1] - 1e-9, std::string(names[s]) + " mu1 decreases at N=" + std::to_string(orders[i]));
      v.check(m.mu_minus[i] <= m.mu_minus[i - 1] + 1e-9,
              std::string(names[s]) + " mu-1 increases at N=" + std::to_string(orders[i]));
    }
    for (std::size_t i = 0; i < orders.size(); ++i)
      v.check(std::abs(m.mu_plus[i] - m2.mu_plus[i]) <= kDoublingTol, std::string(names[s]) + " q-doubling drift");
    std::string row = std::string(names[s]) + ": mu1 =";
    for (double mu : m.mu_plus) row += " " + num(mu, 10);
    v.note(row);
  }
  // Convergence to the closed-form top eigenvalue within the eigenvalue bound.
  const double mu0 = gaussian_eigenvalue_closed_form(1.0, 3.0, 0);
  const CoefficientMatrix big = build_matrix(gauss, orders.back());
  for (std::size_t N : orders) {
    const CoefficientMatrix M = big.leading_block(N);
    const double mu1 = hermitian_eig(M).eigenvalues.front();
    const double bound = eigenvalue_error_bound(truncation_error(M), M.norm_F);
    v.check(mu0 - mu1 >= -1e-12 && mu0 - mu1 <= bound,
            "N=" + std::to_string(N) + " mu0-mu1=" + num(mu0 - mu1) + " bound " + num(bound));
  }
  return v;
}

// 9. Schatten guarantee on the alpha = 3 Gaussian: mu_n = (pi/2)(-1/2)^n.
Verdict schatten() {
  Verdict v;
  const GaussianSymbol F{1.0, 3.0, {}, {}};
  double worst_ratio = 0.0;
  for (std::size_t N : {4u, 8u, 16u}) {
    const CoefficientMatrix M = build_matrix(F, N);
    const Spectrum S = hermitian_eig(M);
    const double eps = truncation_error(M);
    for (double q : {2.0, 3.0, 4.0}) {
      const double exact = (kPi / 2) * std::pow(1.0 / (1.0 - std::pow(0.5, q)), 1.0 / q);
      const SchattenEstimate e = schatten_estimate(S, q, eps, M.norm_F);
      const double bound = std::sqrt(kTwoPi) * eps * M.norm_F;
      const double err = std::abs(exact - e.value);
      worst_ratio = std::max(worst_ratio, err / bound);
      v.check(err <= bound, "N=" + std::to_string(N) + " q=" + num(q) + ": |exact-estimate|=" + num(err) +
                                " > " + num(bound));
      if (N == 16 && q == 2.0) {
        const double hs = std::sqrt(kTwoPi) * M.norm_F;
        v.check(std::abs(e.value - hs) <= 1e-8, "q=2 N=16 estimate " + num(e.value, 12) + " vs " + num(hs, 12));
        v.note("q=2 N=16: estimate - sqrt(2pi)||F|| = " + num(e.value - hs, 3));
      }
    }
  }
  v.note("max error/bound ratio " + num(worst_ratio, 3));
  return v;
}

// 10. Property suites.
Verdict properties() {
  Verdict v;
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<SymbolSpec> symbols;
  for (int i = 0; i < 4; ++i) {
    const double a = 0.7 + 0.8 * u(rng), b = 0.6 * (u(rng) - 0.5);
    symbols.emplace_back(GaussianSymbol{0.2 + 1.8 * u(rng), 0.6 + 2.0 * u(rng), Mat2{a, b, b, (1 + b * b) / a},
                                        {u(rng) - 0.5, u(rng) - 0.5}});
  }
  symbols.emplace_back(cubic_snapshot(0.1));
  symbols.emplace_back(we0_symbol());

  double herm = 0.0, parseval = -1.0, resid = 0.0, ortho = 0.0, norm_identity = 0.0;
  for (const SymbolSpec& F : symbols) {
    const CoefficientMatrix M = build_matrix(F, 16);
    for (std::size_t n = 0; n < 16; ++n)
      for (std::size_t m = 0; m < 16; ++m) herm = std::max(herm, std::abs(M(n, m) - std::conj(M(m, n))));
    parseval = std::max(parseval, M.partial_norm_sq / kTwoPiPowD - M.norm_F * M.norm_F * (1 + 1e-12));
    const Spectrum S = hermitian_eig(M);
    for (std::size_t j = 0; j < 16; ++j)
      for (std::size_t r = 0; r < 16; ++r) {
        cplx s{}, d{};
        for (std::size_t c = 0; c < 16; ++c) {
          s += M(r, c) * S.eigenvectors[j][c];
          d += std::conj(S.eigenvectors[r][c]) * S.eigenvectors[j][c];
        }
        resid = std::max(resid, std::abs(s - S.eigenvalues[j] * S.eigenvectors[j][r]));
        ortho = std::max(ortho, std::abs(d - (r == j ? 1.0 : 0.0)));
      }
    const MinimizerResult mr = closest_wigner(F, 1e-5);
    norm_identity = std::max(norm_identity, std::abs(mr.c0.norm_sq() - mr.lambda_max) / mr.lambda_max);
  }
  v.check(herm == 0.0, "Hermitian defect " + num(herm));
  v.check(parseval <= 0.0, "Parseval inequality violated by " + num(parseval));
  v.check(resid <= 1e-12, "eigen residual " + num(resid));
  v.check(ortho <= 1e-12, "orthonormality defect " + num(ortho));
  v.check(norm_identity <= 1e-12, "| ||c0||^2 - lambda | / lambda = " + num(norm_identity));

  const std::string cfg = R"({"symbol": {"builtin": "gaussian", "alpha": 1.3, "A": [[1.25, 0.5], [0.5, 1.0]],
                              "z0": [0.3, -0.4]}, "epsilon": 1e-5})";
  const CliRun a = cli_run("closest", cfg, scratch("det_a"));
  const CliRun b = cli_run("closest", cfg, scratch("det_b"));
  const CliRun c = cli_run("closest", cfg, scratch("det_c"), 1);
  const CliRun d = cli_run("closest", cfg, scratch("det_d"), 4);
  v.check(a.status == 0 && b.status == 0 && c.status == 0 && d.status == 0, "determinism runs failed");
  v.check(!a.text.empty() && a.text == b.text, "two runs differ");
  v.check(c.text == d.text && a.text == c.text, "reports differ across thread counts");
  v.note("hermitian defect " + num(herm, 3) + ", residual " + num(resid, 3) + ", orthonormality " + num(ortho, 3) +
         ", norm identity " + num(norm_identity, 3) + ", reports byte-identical: " +
         (a.text == b.text && c.text == d.text && a.text == c.text ? "yes" : "no"));
  return v;
}

struct Criterion {
  std::string id;
  std::string title;
  std::function<Verdict()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {"1", "Gaussian closed-form spectrum", gaussian_spectrum},
      {"2", "Gaussian minimizer on the radial path", gaussian_minimizer},
      {"3", "We0 fixed point", fixed_point},
      {"4", "cubic-dispersion coefficients vs series", cubic_coefficients},
      {"5", "cubic-dispersion 2x2 spectrum", cubic_spectrum},
      {"6a", "worked example t=0.01: M1 = 0.478 +- 0.005", bound_M1},
      {"6b", "worked example t=0.01: eigenvalue bound", bound_eigenvalue},
      {"6c", "worked example t=0.01: eigenvector bound", bound_eigenvector},
      {"6d", "worked example t=0.01: Wigner-distance bound", bound_wigner},
      {"7", "Moyal Gram identity", gram},
      {"8", "monotonicity over leading blocks", monotonicity},
      {"9", "Schatten guarantee", schatten},
      {"10", "property suites and determinism", properties},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::string only;
  app.add_option("--criterion", only, "run a single criterion by id");
  CLI11_PARSE(app, argc, argv);

  bool all_ok = true, found = false;
  for (const Criterion& c : criteria()) {
    if (!only.empty() && c.id != only) continue;
    found = true;
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.check(false, std::string("exception: ") + e.what());
    }
    all_ok = all_ok && v.ok();
    std::cout << (v.ok() ? "PASS" : "FAIL") << " [" << c.id << "] " << c.title << " :: " << v.detail() << '\n';
  }
  if (!found) {
    std::cerr << "unknown criterion '" << only << "'\n";
    return 2;
  }
  return all_ok ? 0 : 1;
}
