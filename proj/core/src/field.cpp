#include "vsheet/field.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <numbers>
#include <sstream>

#include "vsheet/spectral.hpp"

namespace vsheet {

void validate(const GridSpec& grid) {
  if (!is_power_of_two(grid.n_t) || !is_power_of_two(grid.n_x1)) {
    throw DomainError("n_t and n_x1 must be powers of two");
  }
  if (grid.n_x2 < 16) throw DomainError("n_x2 must be at least 16");
  for (double L : {grid.L_t, grid.L_x1, grid.L_x2}) {
    if (!(L > 0.0) || !std::isfinite(L)) {
      throw DomainError("grid lengths must be positive and finite");
    }
  }
}

double default_depth(double gamma, double c, double tolerance) {
  if (!(gamma > 0.0) || !(c > 0.0) || !(tolerance > 0.0 && tolerance < 1.0)) {
    throw DomainError("default_depth needs gamma > 0, c > 0, 0 < tolerance < 1");
  }
  return -std::log(tolerance) * std::numbers::sqrt2 * c / gamma;
}

FieldGrid::FieldGrid(const GridSpec& grid)
    : grid_(grid), f_plus_(grid.total_size()), f_minus_(grid.total_size()) {
  validate(grid);
}

std::vector<double> FieldGrid::plane(bool plus_side, std::size_t k) const {
  if (k >= grid_.n_x2) throw DomainError("x2 level out of range");
  const auto& src = plus_side ? f_plus_ : f_minus_;
  std::vector<double> out(grid_.plane_size());
  for (std::size_t p = 0; p < out.size(); ++p) out[p] = src[p * grid_.n_x2 + k];
  return out;
}

double FieldGrid::decay_ratio() const {
  double global = 0.0;
  double last = 0.0;
  const std::size_t n2 = grid_.n_x2;
  for (const auto* src : {&f_plus_, &f_minus_}) {
    for (std::size_t i = 0; i < src->size(); ++i) {
      const double a = std::abs((*src)[i]);
      global = std::max(global, a);
      if (i % n2 == n2 - 1) last = std::max(last, a);
    }
  }
  return global == 0.0 ? 0.0 : last / global;
}

void FieldGrid::check(double max_decay_ratio) const {
  for (const auto* src : {&f_plus_, &f_minus_}) {
    for (double x : *src) {
      if (!std::isfinite(x)) throw DomainError("field contains non-finite samples");
    }
  }
  const double ratio = decay_ratio();
  if (ratio > max_decay_ratio) {
    std::ostringstream os;
    os << "forcing does not decay in x2: last level / max = " << ratio
       << " > " << max_decay_ratio;
    throw DomainError(os.str());
  }
}

FieldGrid& FieldGrid::operator*=(double a) {
  for (auto& x : f_plus_) x *= a;
  for (auto& x : f_minus_) x *= a;
  return *this;
}

FieldGrid& FieldGrid::operator+=(const FieldGrid& other) {
  const GridSpec& g = other.grid_;
  if (g.n_t != grid_.n_t || g.n_x1 != grid_.n_x1 || g.n_x2 != grid_.n_x2 ||
      g.L_t != grid_.L_t || g.L_x1 != grid_.L_x1 || g.L_x2 != grid_.L_x2) {
    throw DomainError("cannot add fields on different grids");
  }
  for (std::size_t i = 0; i < f_plus_.size(); ++i) {
    f_plus_[i] += other.f_plus_[i];
    f_minus_[i] += other.f_minus_[i];
  }
  return *this;
}

double bump(double r) {
  const double q = 1.0 - r * r;
  if (q <= 0.0) return 0.0;
  return std::exp(1.0 - 1.0 / q);
}

FieldGrid bump_field(const GridSpec& grid, const BumpSpec& spec) {
  FieldGrid field(grid);
  const double rt = spec.r_t * grid.L_t;
  const double rx = spec.r_x1 * grid.L_x1;
  const double ry = spec.r_x2 * grid.L_x2;
  for (std::size_t it = 0; it < grid.n_t; ++it) {
    const double t = grid.dt() * static_cast<double>(it);
    const double bt = bump((t - spec.t0 * grid.L_t) / rt);
    for (std::size_t ix = 0; ix < grid.n_x1; ++ix) {
      const double x = grid.dx1() * static_cast<double>(ix);
      const double btx = bt * bump((x - spec.x0 * grid.L_x1) / rx);
      if (btx == 0.0) continue;
      for (std::size_t k = 0; k < grid.n_x2; ++k) {
        const double y = grid.dx2() * static_cast<double>(k);
        field.plus(it, ix, k) =
            spec.a_plus * btx * bump((y - spec.y_plus * grid.L_x2) / ry);
        field.minus(it, ix, k) =
            spec.a_minus * btx * bump((y - spec.y_minus * grid.L_x2) / ry);
      }
    }
  }
  return field;
}

void write_vfgrid(std::ostream& os, const FieldGrid& field) {
  const GridSpec& g = field.grid();
  os << std::setprecision(17);
  os << "VFGRID 1 " << g.n_t << ' ' << g.n_x1 << ' ' << g.n_x2 << ' ' << g.L_t
     << ' ' << g.L_x1 << ' ' << g.L_x2 << '\n';
  for (std::size_t i = 0; i < g.total_size(); ++i) {
    os << field.f_plus()[i] << ' ' << field.f_minus()[i] << '\n';
  }
}

void write_vfgrid(const std::string& path, const FieldGrid& field) {
  std::ofstream os(path);
  if (!os) throw IoError("cannot open " + path + " for writing");
  write_vfgrid(os, field);
  if (!os) throw IoError("failed writing " + path);
}

FieldGrid read_vfgrid(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw DomainError("empty field file");
  std::istringstream header(line);
  std::string magic;
  int version = 0;
  GridSpec g;
  if (!(header >> magic >> version >> g.n_t >> g.n_x1 >> g.n_x2 >> g.L_t >>
        g.L_x1 >> g.L_x2) ||
      magic != "VFGRID") {
    throw DomainError("malformed VFGRID header");
  }
  if (version != 1) throw DomainError("unsupported VFGRID version");
  std::string rest;
  if (header >> rest) throw DomainError("trailing tokens in VFGRID header");
  validate(g);

  FieldGrid field(g);
  for (std::size_t i = 0; i < g.total_size(); ++i) {
    if (!(is >> field.f_plus()[i] >> field.f_minus()[i])) {
      std::ostringstream os;
      os << "VFGRID body ends after " << i << " of " << g.total_size()
         << " records";
      throw DomainError(os.str());
    }
  }
  std::string extra;
  if (is >> extra) throw DomainError("trailing data after VFGRID body");
  return field;
}

FieldGrid read_vfgrid(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw IoError("cannot open " + path);
  return read_vfgrid(is);
}

}  // namespace vsheet
