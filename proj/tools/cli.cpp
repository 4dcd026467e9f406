#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "wnear/coefficients.hpp"
#include "wnear/dispersive.hpp"
#include "wnear/gram.hpp"
#include "wnear/kernels.hpp"
#include "wnear/optimizer.hpp"
#include "wnear/parallel.hpp"
#include "wnear/quadrature.hpp"
#include "wnear/radial.hpp"
#include "wnear/schatten.hpp"
#include "wnear/spectral.hpp"

namespace wnear::cli {
namespace {

std::string join(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

// The take_* helpers read obj[key], inserting the default when it is absent so
// that the echoed config records every value actually used.

double take_real(json& obj, const std::string& key, double def, const std::string& path) {
  if (!obj.contains(key)) obj[key] = def;
  const json& v = obj[key];
  if (!v.is_number()) throw ConfigError(join(path, key), "expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ConfigError(join(path, key), "must be finite");
  return x;
}

double require_real(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.contains(key)) throw ConfigError(join(path, key), "required");
  if (!obj[key].is_number()) throw ConfigError(join(path, key), "expected a number");
  return obj[key].get<double>();
}

std::size_t take_size(json& obj, const std::string& key, std::size_t def, const std::string& path) {
  if (!obj.contains(key)) obj[key] = def;
  const json& v = obj[key];
  if (!v.is_number_integer() || v.get<long long>() < 0)
    throw ConfigError(join(path, key), "expected a non-negative integer");
  return v.get<std::size_t>();
}

bool take_bool(json& obj, const std::string& key, bool def, const std::string& path) {
  if (!obj.contains(key)) obj[key] = def;
  if (!obj[key].is_boolean()) throw ConfigError(join(path, key), "expected true or false");
  return obj[key].get<bool>();
}

Mat2 take_mat2(json& obj, const std::string& key, const std::string& path) {
  if (!obj.contains(key)) obj[key] = json::array({json::array({1.0, 0.0}), json::array({0.0, 1.0})});
  const json& v = obj[key];
  auto bad = [&] { return ConfigError(join(path, key), "expected [[a, b], [c, d]]"); };
  if (!v.is_array() || v.size() != 2) throw bad();
  for (const json& row : v)
    if (!row.is_array() || row.size() != 2 || !row[0].is_number() || !row[1].is_number()) throw bad();
  return Mat2{v[0][0].get<double>(), v[0][1].get<double>(), v[1][0].get<double>(), v[1][1].get<double>()};
}

PhasePoint take_point(json& obj, const std::string& key, const std::string& path) {
  if (!obj.contains(key)) obj[key] = json::array({0.0, 0.0});
  const json& v = obj[key];
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
    throw ConfigError(join(path, key), "expected [x, k]");
  return PhasePoint{v[0].get<double>(), v[1].get<double>()};
}

Polynomial take_poly(json& obj, const std::string& key, const std::string& path, bool required) {
  if (!obj.contains(key)) {
    if (required) throw ConfigError(join(path, key), "required");
    obj[key] = json::array();
  }
  const json& v = obj[key];
  if (!v.is_array()) throw ConfigError(join(path, key), "expected ascending polynomial coefficients");
  Polynomial p;
  for (const json& c : v) {
    if (!c.is_number()) throw ConfigError(join(path, key), "coefficients must be numbers");
    p.coeffs.push_back(c.get<double>());
  }
  return p;
}

GaussianSymbol gaussian_from(json& sym, const std::string& path) {
  GaussianSymbol g;
  g.amplitude = take_real(sym, "amplitude", 1.0, path);
  g.alpha = take_real(sym, "alpha", 1.0, path);
  g.A = take_mat2(sym, "A", path);
  g.z0 = take_point(sym, "z0", path);
  return g;
}

SymbolSpec symbol_from(json& sym, const std::filesystem::path& base_dir, std::optional<double>* cubic_t) {
  const std::string path = "symbol";
  if (!sym.is_object()) throw ConfigError(path, "expected an object");
  std::string kind;
  if (sym.contains("builtin")) {
    if (!sym["builtin"].is_string()) throw ConfigError("symbol.builtin", "expected a string");
    kind = sym["builtin"].get<std::string>();
    if (kind == "we0") return we0_symbol();
    if (kind == "gaussian") return gaussian_from(sym, path);
    if (kind == "cubic_wigner_approx") {
      const double t = require_real(sym, "t", path);
      if (!(t >= 0.0) || !std::isfinite(t)) throw ConfigError("symbol.t", "must be finite and >= 0");
      if (cubic_t) *cubic_t = t;
      return cubic_snapshot(t);
    }
    throw ConfigError("symbol.builtin", "unknown builtin '" + kind + "' (we0, gaussian, cubic_wigner_approx)");
  }
  if (!sym.contains("type") || !sym["type"].is_string())
    throw ConfigError("symbol", "needs a 'builtin' or 'type' string");
  kind = sym["type"].get<std::string>();

  if (kind == "gaussian") return gaussian_from(sym, path);

  if (kind == "radial_profile") {
    RadialProfileSymbol r;
    r.A = take_mat2(sym, "A", path);
    r.z0 = take_point(sym, "z0", path);
    if (!sym.contains("profile")) sym["profile"] = "gaussian";
    if (!sym["profile"].is_string()) throw ConfigError("symbol.profile", "expected a string");
    const std::string profile = sym["profile"].get<std::string>();
    if (profile == "gaussian") {
      const double amp = take_real(sym, "amplitude", 1.0, path);
      const double alpha = take_real(sym, "alpha", 1.0, path);
      if (!(alpha > 0.0)) throw ConfigError("symbol.alpha", "must be positive");
      r.G = [amp, alpha](double rho) { return amp * std::exp(-alpha * rho * rho); };
      r.label = "gaussian";
    } else if (profile == "basis_terms") {
      // G = sum_n c_n F_n, so that mu_n = c_n.
      if (!sym.contains("terms") || !sym["terms"].is_array() || sym["terms"].empty())
        throw ConfigError("symbol.terms", "expected [[n, c], ...]");
      std::vector<std::pair<std::size_t, double>> terms;
      for (const json& t : sym["terms"]) {
        if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer() || t[0].get<long long>() < 0 ||
            !t[1].is_number())
          throw ConfigError("symbol.terms", "expected [[n, c], ...] with integer n >= 0");
        terms.emplace_back(t[0].get<std::size_t>(), t[1].get<double>());
      }
      r.G = [terms](double rho) {
        double s = 0.0;
        for (const auto& [n, c] : terms) s += c * radial_basis_fn(n, rho);
        return s;
      };
      r.label = "basis_terms";
    } else {
      throw ConfigError("symbol.profile", "unknown profile '" + profile + "' (gaussian, basis_terms)");
    }
    return r;
  }

  if (kind == "wigner_approx_snapshot") {
    SnapshotSymbol s;
    if (!sym.contains("initial") || !sym["initial"].is_array() || sym["initial"].empty())
      throw ConfigError("symbol.initial", "expected Hermite coefficients [c0, c1, ...] or [[re, im], ...]");
    for (const json& c : sym["initial"]) {
      if (c.is_number())
        s.initial.coeffs.emplace_back(c.get<double>(), 0.0);
      else if (c.is_array() && c.size() == 2 && c[0].is_number() && c[1].is_number())
        s.initial.coeffs.emplace_back(c[0].get<double>(), c[1].get<double>());
      else
        throw ConfigError("symbol.initial", "entries must be numbers or [re, im]");
    }
    Polynomial omega_R = take_poly(sym, "omega_R", path, true);
    Polynomial omega_I = take_poly(sym, "omega_I", path, false);
    s.dispersion = DispersionRelation::from_polynomials(std::move(omega_R), std::move(omega_I));
    s.t = require_real(sym, "t", path);
    return s;
  }

  if (kind == "grid") {
    if (!sym.contains("path") || !sym["path"].is_string()) throw ConfigError("symbol.path", "expected a CSV path");
    std::filesystem::path p = sym["path"].get<std::string>();
    if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
    return GridSymbol{read_grid_csv(p.string())};
  }

  throw ConfigError("symbol.type", "unknown type '" + kind +
                                       "' (gaussian, radial_profile, wigner_approx_snapshot, grid)");
}

GridSpec grid_from(json& doc) {
  if (!doc.contains("grid")) doc["grid"] = json::object();
  json& g = doc["grid"];
  if (!g.is_object()) throw ConfigError("grid", "expected an object");
  GridSpec s;
  s.x_min = take_real(g, "x_min", s.x_min, "grid");
  s.x_max = take_real(g, "x_max", s.x_max, "grid");
  s.k_min = take_real(g, "k_min", s.k_min, "grid");
  s.k_max = take_real(g, "k_max", s.k_max, "grid");
  s.nx = take_size(g, "nx", s.nx, "grid");
  s.nk = take_size(g, "nk", s.nk, "grid");
  if (s.nx > kMaxGridAxis || s.nk > kMaxGridAxis) throw ConfigError("grid", "at most 2048 points per axis");
  if (s.nx < 2 || s.nk < 2) throw ConfigError("grid", "at least 2 points per axis");
  if (!(s.x_min < s.x_max) || !(s.k_min < s.k_max)) throw ConfigError("grid", "need min < max on both axes");
  return s;
}

PhaseGrid sample_symbol(const SymbolSpec& F, const GridSpec& spec) {
  std::vector<double> x(spec.size()), k(spec.size());
  for (std::size_t i = 0; i < spec.nx; ++i)
    for (std::size_t j = 0; j < spec.nk; ++j) {
      x[i * spec.nk + j] = spec.x_at(i);
      k[i * spec.nk + j] = spec.k_at(j);
    }
  PhaseGrid g{spec, std::vector<double>(spec.size()), {}};
  evaluate_batch(F, x, k, g.values);
  return g;
}

std::vector<double> linspace(double a, double b, std::size_t n) {
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
  return v;
}

}  // namespace

SymbolSpec parse_symbol(const json& sym, const std::filesystem::path& base_dir, std::optional<double>* cubic_t) {
  json copy = sym;
  return symbol_from(copy, base_dir, cubic_t);
}

RunConfig parse_config(const std::string& command, const json& doc, const std::filesystem::path& base_dir) {
  if (std::find(kCommands.begin(), kCommands.end(), command) == kCommands.end())
    throw ConfigError("command", "unknown command '" + command + "'");
  if (!doc.is_object()) throw ConfigError("config", "expected a JSON object");

  RunConfig cfg;
  cfg.command = command;
  cfg.echo = doc;
  json& e = cfg.echo;

  if (command == "gram-check") {
    cfg.n_max = take_size(e, "n_max", 8, "");
    cfg.q = take_size(e, "q", 64, "");
    if (cfg.n_max > 12) throw ConfigError("n_max", "must be <= 12");
  } else {
    if (!e.contains("symbol")) throw ConfigError("symbol", "required");
    cfg.symbol = symbol_from(e["symbol"], base_dir, &cfg.cubic_t);
    validate(*cfg.symbol);
    cfg.epsilon = take_real(e, "epsilon", cfg.epsilon, "");
    if (!(cfg.epsilon > 0.0 && cfg.epsilon < 1.0)) throw ConfigError("epsilon", "must lie in (0, 1)");
    cfg.N_max = take_size(e, "N_max", cfg.N_max, "");
    if (cfg.N_max < 1) throw ConfigError("N_max", "must be >= 1");
    cfg.q = take_size(e, "q", cfg.q, "");
    if (e.contains("N")) {
      cfg.N = take_size(e, "N", 0, "");
      if (*cfg.N < 1) throw ConfigError("N", "must be >= 1");
    }
    cfg.grid = grid_from(e);
    cfg.emit_grid = take_bool(e, "emit_grid", false, "");
    if (command == "radial") {
      cfg.radial_q = take_size(e, "radial_q", cfg.radial_q, "");
      cfg.n_cap = take_size(e, "n_cap", cfg.n_cap, "");
    }
    if (command == "schatten") {
      if (!e.contains("schatten_q")) e["schatten_q"] = json::array({2.0});
      if (!e["schatten_q"].is_array() || e["schatten_q"].empty())
        throw ConfigError("schatten_q", "expected a non-empty list of exponents");
      for (const json& v : e["schatten_q"]) {
        if (!v.is_number() || !(v.get<double>() >= 2.0)) throw ConfigError("schatten_q", "exponents must be >= 2");
        cfg.schatten_q.push_back(v.get<double>());
      }
    }
    if (command == "dispersive" && !std::holds_alternative<SnapshotSymbol>(*cfg.symbol))
      throw ConfigError("symbol", "dispersive needs a wigner_approx_snapshot or cubic_wigner_approx symbol");
  }
  if (cfg.q < 1 || cfg.q > kMaxQuadratureOrder) throw ConfigError("q", "must lie in [1, 512]");
  return cfg;
}

Outcome execute(const RunConfig& cfg) {
  Outcome out;
  json& r = out.result;

  if (cfg.command == "gram-check") {
    r = gram_check(cfg.n_max, cfg.q);
    return out;
  }

  const SymbolSpec& F = *cfg.symbol;
  if (cfg.emit_grid) out.input_grid = sample_symbol(F, cfg.grid);

  if (cfg.command == "closest") {
    const MinimizerResult m = closest_wigner(F, cfg.epsilon, cfg.q, cfg.N_max);
    r = m;
    r["symbol"] = symbol_kind(F);
    if (cfg.emit_grid) out.minimizer_grid = evaluate_minimizer(m, cfg.grid);
  } else if (cfg.command == "radial") {
    const RadialMinimizer rm = radial_minimizer(radial_from(F), cfg.radial_q, cfg.n_cap);
    r = rm.descriptor;
    r["lambda_max"] = rm.result.lambda_max;
    r["min_distance"] = rm.result.min_distance;
    r["norm_F"] = rm.result.norm_F;
    r["search"] = rm.search;
    if (cfg.emit_grid) out.minimizer_grid = evaluate_descriptor(rm.descriptor, cfg.grid);
  } else if (cfg.command == "dispersive") {
    const auto& snap = std::get<SnapshotSymbol>(F);
    const std::vector<double> ks = linspace(-4.0, 4.0, 65);
    const std::size_t N = cfg.N.value_or(cfg.cubic_t ? 2 : 16);
    if (cfg.cubic_t) {
      r = cubic_example_report(*cfg.cubic_t, N, cfg.q);
    } else {
      const CoefficientMatrix M = build_matrix(F, N, cfg.q);
      const Spectrum S = hermitian_eig(M);
      const double eps = truncation_error(M);
      r = json::object();
      r["t"] = snap.t;
      r["N"] = N;
      r["lambda1"] = S.eigenvalues.front();
      r["lambda_minus1"] = lowest_negative(S);
      r["epsilon"] = eps;
      r["norm_F"] = M.norm_F;
      r["bounds"] = error_budget(S, eps, M.norm_F);
      if (cfg.emit_grid) {
        const MinimizerResult m = minimizer_from(M, S);
        if (!m.is_zero) out.minimizer_grid = evaluate_minimizer(m, cfg.grid);
      }
    }
    r["representability"] = is_exactly_representable(snap.dispersion, ks);
    r["diagnostic"] = representability_diagnostic(F, N, cfg.q);
  } else if (cfg.command == "schatten") {
    CoefficientMatrix M;
    if (cfg.N)
      M = build_matrix(F, *cfg.N, cfg.q);
    else
      M = select_order(F, cfg.epsilon, cfg.N_max, cfg.q).matrix;
    const Spectrum S = hermitian_eig(M);
    const double eps = truncation_error(M);
    json values = json::array();
    double bound = 0.0, hs = 0.0;
    for (double q : cfg.schatten_q) {
      const SchattenEstimate est = schatten_estimate(S, q, eps, M.norm_F);
      values.push_back(est.value);
      bound = est.error_bound;
      hs = est.hs_norm;
    }
    r = json::object();
    r["q"] = cfg.schatten_q;
    r["value"] = std::move(values);
    r["error_bound"] = bound;
    r["intervals"] = eigenvalue_bounds_schatten(S, eps, M.norm_F);
    r["N"] = M.order;
    r["epsilon"] = eps;
    r["norm_F"] = M.norm_F;
    r["hs_norm"] = hs;
  }
  return out;
}

json make_report(const RunConfig& cfg, const Outcome& out, const json& timings) {
  json rep = json::object();
  rep["command"] = cfg.command;
  rep["config_echo"] = cfg.echo;
  rep["result"] = out.result;
  rep["timings_ms"] = timings;
  rep["version"] = WNEAR_VERSION;
  return rep;
}

json error_json(const std::exception& e) {
  json err = json::object();
  if (const auto* w = dynamic_cast<const Error*>(&e)) {
    err["module"] = w->module();
    err["code"] = w->code();
  } else {
    err["module"] = "cli";
    err["code"] = "internal";
  }
  err["message"] = e.what();
  if (const auto* c = dynamic_cast<const ConfigError*>(&e)) err["field"] = c->field();
  if (const auto* c = dynamic_cast<const ConvergenceError*>(&e)) err["best"] = c->best();
  return json{{"error", err}};
}

int run(const Invocation& inv, std::istream& in, std::ostream& err) {
  using clock = std::chrono::steady_clock;
  auto ms_since = [](clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(clock::now() - t0).count();
  };
  try {
    const auto t_start = clock::now();
    if (inv.threads) set_thread_count(*inv.threads);
    if (inv.kernel) {
      const auto b = kernels::parse_backend(*inv.kernel);
      if (!b) throw ConfigError("kernel", "unknown backend '" + *inv.kernel + "' (scalar, avx2, neon)");
      kernels::set_active_backend(*b);
    }

    std::string text;
    std::filesystem::path base_dir;
    if (inv.config_path == "-") {
      std::ostringstream ss;
      ss << in.rdbuf();
      text = ss.str();
    } else {
      std::ifstream f(inv.config_path);
      if (!f) throw ConfigError("config", "cannot open '" + inv.config_path + "'");
      std::ostringstream ss;
      ss << f.rdbuf();
      text = ss.str();
      base_dir = std::filesystem::path(inv.config_path).parent_path();
    }
    json doc;
    try {
      doc = json::parse(text);
    } catch (const json::parse_error& e) {
      throw ConfigError("config", std::string("invalid JSON: ") + e.what());
    }

    const RunConfig cfg = parse_config(inv.command, doc, base_dir);
    const auto t_exec = clock::now();
    const Outcome out = execute(cfg);
    const double exec_ms = ms_since(t_exec);

    // Wall-clock numbers would break byte-identical reports, so they are only
    // recorded on request.
    json timings = json::object();
    if (inv.timings) {
      timings["execute"] = exec_ms;
      timings["total"] = ms_since(t_start);
    }

    std::filesystem::create_directories(inv.output_dir);
    {
      std::ofstream f(inv.output_dir / "report.json");
      if (!f) throw Error("cli", "io_error", "cannot write report.json");
      f << make_report(cfg, out, timings).dump(2) << '\n';
    }
    if (out.minimizer_grid) write_grid_csv((inv.output_dir / "minimizer.csv").string(), *out.minimizer_grid);
    if (out.input_grid) write_grid_csv((inv.output_dir / "input_symbol.csv").string(), *out.input_grid);
    return 0;
  } catch (const ConfigError& e) {
    err << error_json(e).dump() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << error_json(e).dump() << '\n';
    return 1;
  }
}

}  // namespace wnear::cli
