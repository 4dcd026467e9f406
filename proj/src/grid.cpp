#include "wnear/grid.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "wnear/error.hpp"

namespace wnear {

double GridSpec::x_at(std::size_t i) const {
  if (i + 1 == nx) return x_max;
  return x_min + (x_max - x_min) * static_cast<double>(i) / static_cast<double>(nx - 1);
}

double GridSpec::k_at(std::size_t j) const {
  if (j + 1 == nk) return k_max;
  return k_min + (k_max - k_min) * static_cast<double>(j) / static_cast<double>(nk - 1);
}

void GridSpec::validate() const {
  if (!(x_min < x_max) || !(k_min < k_max) || !std::isfinite(x_min) || !std::isfinite(x_max) ||
      !std::isfinite(k_min) || !std::isfinite(k_max))
    throw Error("grid", "invalid_argument", "grid bounds must be finite with min < max");
  if (nx < 2 || nk < 2) throw Error("grid", "invalid_argument", "grid needs at least 2 points per axis");
}

double PhaseGrid::interpolate(PhasePoint z) const {
  const GridSpec& s = spec;
  if (z.x < s.x_min || z.x > s.x_max || z.k < s.k_min || z.k > s.k_max) return 0.0;
  const double hx = (s.x_max - s.x_min) / static_cast<double>(s.nx - 1);
  const double hk = (s.k_max - s.k_min) / static_cast<double>(s.nk - 1);
  const double fx = (z.x - s.x_min) / hx;
  const double fk = (z.k - s.k_min) / hk;
  const std::size_t i = std::min(static_cast<std::size_t>(fx), s.nx - 2);
  const std::size_t j = std::min(static_cast<std::size_t>(fk), s.nk - 2);
  const double tx = fx - static_cast<double>(i);
  const double tk = fk - static_cast<double>(j);
  return (1.0 - tx) * ((1.0 - tk) * at(i, j) + tk * at(i, j + 1)) +
         tx * ((1.0 - tk) * at(i + 1, j) + tk * at(i + 1, j + 1));
}

void write_grid_csv(std::ostream& out, const PhaseGrid& grid) {
  const GridSpec& s = grid.spec;
  out << (grid.is_complex() ? "x,k,re,im\n" : "x,k,value\n");
  out << std::setprecision(17);
  for (std::size_t i = 0; i < s.nx; ++i) {
    for (std::size_t j = 0; j < s.nk; ++j) {
      const std::size_t p = i * s.nk + j;
      out << s.x_at(i) << ',' << s.k_at(j) << ',' << grid.values[p];
      if (grid.is_complex()) out << ',' << grid.imag[p];
      out << '\n';
    }
  }
}

void write_grid_csv(const std::string& path, const PhaseGrid& grid) {
  std::ofstream out(path);
  if (!out) throw Error("grid", "io_error", "cannot open " + path + " for writing");
  write_grid_csv(out, grid);
  if (!out) throw Error("grid", "io_error", "failed writing " + path);
}

namespace {

double parse_field(std::string_view text, std::size_t line) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r'))
    text.remove_suffix(1);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw Error("grid", "parse_error", "bad number on line " + std::to_string(line));
  return v;
}

std::vector<double> distinct_axis(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

PhaseGrid read_grid_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw Error("grid", "parse_error", "empty grid file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  bool complex_values = false;
  if (line == "x,k,re,im")
    complex_values = true;
  else if (line != "x,k,value")
    throw Error("grid", "parse_error", "unexpected header '" + line + "'");

  const std::size_t columns = complex_values ? 4 : 3;
  std::vector<double> xs, ks, re, im;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line == "\r") continue;
    std::vector<std::string_view> fields;
    std::string_view rest(line);
    for (std::size_t pos; (pos = rest.find(',')) != std::string_view::npos;) {
      fields.push_back(rest.substr(0, pos));
      rest.remove_prefix(pos + 1);
    }
    fields.push_back(rest);
    if (fields.size() != columns)
      throw Error("grid", "parse_error", "wrong column count on line " + std::to_string(lineno));
    xs.push_back(parse_field(fields[0], lineno));
    ks.push_back(parse_field(fields[1], lineno));
    re.push_back(parse_field(fields[2], lineno));
    if (complex_values) im.push_back(parse_field(fields[3], lineno));
  }

  const std::vector<double> ux = distinct_axis(xs);
  const std::vector<double> uk = distinct_axis(ks);
  PhaseGrid g;
  g.spec = {ux.front(), ux.back(), uk.front(), uk.back(), ux.size(), uk.size()};
  g.spec.validate();
  if (xs.size() != g.spec.size())
    throw Error("grid", "parse_error", "rows do not form a complete rectangular grid");
  for (std::size_t i = 0; i < ux.size(); ++i)
    if (std::abs(ux[i] - g.spec.x_at(i)) > 1e-9 * std::max(1.0, std::abs(ux[i])))
      throw Error("grid", "parse_error", "x axis is not uniformly spaced");
  for (std::size_t j = 0; j < uk.size(); ++j)
    if (std::abs(uk[j] - g.spec.k_at(j)) > 1e-9 * std::max(1.0, std::abs(uk[j])))
      throw Error("grid", "parse_error", "k axis is not uniformly spaced");

  g.values.assign(g.spec.size(), 0.0);
  if (complex_values) g.imag.assign(g.spec.size(), 0.0);
  std::vector<char> seen(g.spec.size(), 0);
  for (std::size_t r = 0; r < xs.size(); ++r) {
    const std::size_t i = std::lower_bound(ux.begin(), ux.end(), xs[r]) - ux.begin();
    const std::size_t j = std::lower_bound(uk.begin(), uk.end(), ks[r]) - uk.begin();
    const std::size_t p = i * g.spec.nk + j;
    if (seen[p]) throw Error("grid", "parse_error", "duplicate grid point");
    seen[p] = 1;
    g.values[p] = re[r];
    if (complex_values) g.imag[p] = im[r];
  }
  return g;
}

PhaseGrid read_grid_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("grid", "io_error", "cannot open " + path);
  return read_grid_csv(in);
}

}  // namespace wnear
