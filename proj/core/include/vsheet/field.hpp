#pragma once

// Forcing fields sampled on a space-time half-space grid and the VFGRID
// text format used to exchange them.

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "vsheet/types.hpp"

namespace vsheet {

/// Geometry of the sampling grid.  t and x1 are periodic with n_t, n_x1
/// samples on [0, L); x2 has n_x2 nodes k h, h = L_x2 / (n_x2 - 1), on the
/// closed interval [0, L_x2].
struct GridSpec {
  std::size_t n_t = 0;
  std::size_t n_x1 = 0;
  std::size_t n_x2 = 0;
  double L_t = 0.0;
  double L_x1 = 0.0;
  double L_x2 = 0.0;

  [[nodiscard]] double dt() const { return L_t / static_cast<double>(n_t); }
  [[nodiscard]] double dx1() const { return L_x1 / static_cast<double>(n_x1); }
  [[nodiscard]] double dx2() const {
    return L_x2 / static_cast<double>(n_x2 - 1);
  }
  [[nodiscard]] std::size_t plane_size() const { return n_t * n_x1; }
  [[nodiscard]] std::size_t total_size() const { return n_t * n_x1 * n_x2; }
};

/// Throws DomainError unless n_t, n_x1 are powers of two, n_x2 >= 16 and all
/// lengths are positive and finite.
void validate(const GridSpec& grid);

/// Truncation depth for which e^{-gamma L / (sqrt(2) c)} equals `tolerance`.
[[nodiscard]] double default_depth(double gamma, double c,
                                   double tolerance = 1e-10);

/// Samples of F+(t, x1, x2) and F-(t, x1, -x2), x2 >= 0, row-major in
/// (t, x1, x2).
class FieldGrid {
 public:
  FieldGrid() = default;
  explicit FieldGrid(const GridSpec& grid);

  [[nodiscard]] const GridSpec& grid() const { return grid_; }

  [[nodiscard]] std::size_t index(std::size_t it, std::size_t ix,
                                  std::size_t k) const {
    return (it * grid_.n_x1 + ix) * grid_.n_x2 + k;
  }
  double& plus(std::size_t it, std::size_t ix, std::size_t k) {
    return f_plus_[index(it, ix, k)];
  }
  double& minus(std::size_t it, std::size_t ix, std::size_t k) {
    return f_minus_[index(it, ix, k)];
  }
  [[nodiscard]] double plus(std::size_t it, std::size_t ix,
                            std::size_t k) const {
    return f_plus_[index(it, ix, k)];
  }
  [[nodiscard]] double minus(std::size_t it, std::size_t ix,
                             std::size_t k) const {
    return f_minus_[index(it, ix, k)];
  }

  [[nodiscard]] std::vector<double>& f_plus() { return f_plus_; }
  [[nodiscard]] std::vector<double>& f_minus() { return f_minus_; }
  [[nodiscard]] const std::vector<double>& f_plus() const { return f_plus_; }
  [[nodiscard]] const std::vector<double>& f_minus() const { return f_minus_; }

  /// (t, x1) plane of F+ (or F-) at x2 level k, row-major in (t, x1).
  [[nodiscard]] std::vector<double> plane(bool plus_side, std::size_t k) const;

  /// Largest |F| on the last x2 level divided by the largest |F| overall
  /// (0 for an identically zero field).
  [[nodiscard]] double decay_ratio() const;

  /// Throws DomainError on non-finite samples or when decay_ratio exceeds
  /// `max_decay_ratio`.
  void check(double max_decay_ratio = 1e-6) const;

  FieldGrid& operator*=(double a);
  FieldGrid& operator+=(const FieldGrid& other);

 private:
  GridSpec grid_;
  std::vector<double> f_plus_;
  std::vector<double> f_minus_;
};

/// Parameters of the smooth compactly supported test forcing
///   F+ = a_plus  b((t - t0)/r_t) b((x1 - x0)/r_x1) b((x2 - y_plus)/r_x2)
///   F- = a_minus b((t - t0)/r_t) b((x1 - x0)/r_x1) b((x2 - y_minus)/r_x2)
/// with b(r) = exp(1 - 1/(1 - r^2)) on |r| < 1 and 0 elsewhere.  Centres
/// and radii are fractions of the box lengths.
struct BumpSpec {
  double a_plus = 1.0;
  double a_minus = 0.5;
  double t0 = 0.25;
  double x0 = 0.5;
  double r_t = 0.125;
  double r_x1 = 0.25;
  double y_plus = 0.25;
  double y_minus = 0.3;
  double r_x2 = 0.2;
};

[[nodiscard]] double bump(double r);

[[nodiscard]] FieldGrid bump_field(const GridSpec& grid,
                                   const BumpSpec& spec = {});

/// Writes the VFGRID text format with 17 significant digits.
void write_vfgrid(std::ostream& os, const FieldGrid& field);
void write_vfgrid(const std::string& path, const FieldGrid& field);

/// Parses the VFGRID format; throws DomainError on malformed content and
/// IoError when the file cannot be opened.
[[nodiscard]] FieldGrid read_vfgrid(std::istream& is);
[[nodiscard]] FieldGrid read_vfgrid(const std::string& path);

/// Raised when a file cannot be opened or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace vsheet
