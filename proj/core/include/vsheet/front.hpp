#pragma once

// Spectral solution of the front equation
//   Sigma(tau, eta) f^ + (mu+ mu- / (mu+ + mu-)) M = 0
// on a periodic (t, x1) box, with the forcing functional
//   M = (1/mu+) int_0^L e^{-mu+ y} F^+(y) dy - (1/mu-) int_0^L e^{-mu- y} F^-(-y) dy,
// together with weighted Sobolev norms and numerical checks of the energy
// estimate.

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "vsheet/field.hpp"
#include "vsheet/spectral.hpp"
#include "vsheet/symbol.hpp"
#include "vsheet/types.hpp"

namespace vsheet {

/// Weighted transforms of F+ and F- on every x2 level.  Per-bin level
/// profiles are stored contiguously.  Nyquist bins are set to zero.
class TransformedField {
 public:
  TransformedField(const FieldGrid& field, double gamma);

  [[nodiscard]] const GridSpec& grid() const { return grid_; }
  [[nodiscard]] double gamma() const { return gamma_; }
  [[nodiscard]] std::size_t n_t() const { return grid_.n_t; }
  [[nodiscard]] std::size_t n_x1() const { return grid_.n_x1; }
  [[nodiscard]] double h() const { return grid_.dx2(); }

  /// F^+(delta_kt, eta_kx, y_k) for k = 0 .. n_x2-1.
  [[nodiscard]] std::span<const Complex> plus(std::size_t kt,
                                              std::size_t kx) const;
  /// F^-(delta_kt, eta_kx, -y_k) for k = 0 .. n_x2-1.
  [[nodiscard]] std::span<const Complex> minus(std::size_t kt,
                                               std::size_t kx) const;

  /// The empty spectrum carrying the frequency axes of this grid.
  [[nodiscard]] const Spectrum& axes() const { return axes_; }
  [[nodiscard]] Frequency frequency(std::size_t kt, std::size_t kx) const;

  /// Transformed slice at one level.
  [[nodiscard]] Spectrum level(bool plus_side, std::size_t k) const;

 private:
  GridSpec grid_;
  double gamma_ = 0.0;
  Spectrum axes_;
  std::vector<Complex> plus_;
  std::vector<Complex> minus_;
};

struct MResult {
  Complex M;
  Complex I_plus;   ///< int_0^L e^{-mu+ y} F^+(y) dy
  Complex I_minus;  ///< int_0^L e^{-mu- y} F^-(-y) dy
  /// Bound on the contribution of [L, inf) assuming |F^| beyond L stays
  /// below its value on the last level.
  double truncation_bound = 0.0;
  RootPair roots;
};

/// M at one frequency from level samples with spacing h.  Requires
/// Re mu+- > 0.
[[nodiscard]] MResult compute_M(std::span<const Complex> f_plus_levels,
                                std::span<const Complex> f_minus_levels,
                                double h, const Frequency& freq,
                                const MediumParams& params);

/// M at grid bin (kt, kx).
[[nodiscard]] MResult compute_M(const TransformedField& field, std::size_t kt,
                                std::size_t kx, const MediumParams& params);

/// Everything computed at one frequency bin.  g = g1 - g2 with
/// g1 = -mu- I+ / (mu+ + mu-) and g2 = -mu+ I- / (mu+ + mu-).
struct FrontBin {
  Complex f_hat;
  Complex g;
  Complex g1;
  Complex g2;
  Complex sigma;
  MResult m;
};

/// Symbol division at one frequency.
[[nodiscard]] FrontBin solve_bin(std::span<const Complex> f_plus_levels,
                                 std::span<const Complex> f_minus_levels,
                                 double h, const Frequency& freq,
                                 const MediumParams& params);

struct FrontSolution {
  GridSpec grid;
  double gamma = 0.0;
  MediumParams params;
  Spectrum f_hat;
  Spectrum g_hat;
  Spectrum g1_hat;
  Spectrum g2_hat;
  Spectrum sigma;
  /// e^{-gamma t} f on the (t, x1) grid.
  std::vector<double> f_weighted;
  /// f itself; may overflow for large gamma L_t.
  std::vector<double> f_phys;
  /// max |Im| / max |Re| of the inverse transform before taking real parts.
  double imag_residual = 0.0;
  /// ||f||_{H^s_gamma} for each requested s.
  std::map<double, double> norms;
};

/// Throws RegimeError unless the medium is weakly stable and DomainError
/// unless gamma >= 1 and the velocities are symmetric.
void require_solvable(const MediumParams& params, double gamma);

[[nodiscard]] FrontSolution solve_front(const TransformedField& field,
                                        const MediumParams& params,
                                        const std::vector<double>& s_values = {
                                            0.0, 1.0});

/// Checks the field (finite, decaying) and solves.
[[nodiscard]] FrontSolution solve_front(const FieldGrid& field,
                                        const MediumParams& params,
                                        double gamma,
                                        const std::vector<double>& s_values = {
                                            0.0, 1.0});

struct ForcingNorms {
  double plus_sq = 0.0;   ///< ||F+||^2 in L^2(R+; H^s_gamma)
  double minus_sq = 0.0;  ///< ||F-||^2 in L^2(R-; H^s_gamma)
};

[[nodiscard]] ForcingNorms forcing_norm_sq(const TransformedField& field,
                                           double s);

/// Lower bounds of |Sigma| sampled on the unit hemisphere
/// gamma^2 + delta^2 + eta^2 = 1, gamma >= 0.
struct EstimateConstants {
  double C_ell = 0.0;      ///< min |Sigma| / Lambda^2 away from the roots
  double C_H = 0.0;        ///< min |H| / Lambda inside the root neighbourhoods
  double C = 0.0;          ///< min(C_ell, C_H)^2
  double sigma_max = 0.0;  ///< max |Sigma| / Lambda^2
  double radius = kRootNeighbourhood;
  std::size_t samples = 0;
};

[[nodiscard]] EstimateConstants estimate_constants(
    const MediumParams& params, std::size_t n_polar = 512,
    std::size_t n_azimuth = 2048, double radius = kRootNeighbourhood);

struct EstimateRow {
  double gamma = 0.0;
  double f_norm_sq = 0.0;  ///< ||f||^2_{s+1, gamma}
  double g_norm_sq = 0.0;  ///< ||g||^2_{s, gamma}
  double g1_norm_sq = 0.0;
  double g2_norm_sq = 0.0;
  ForcingNorms forcing;
  double r = 0.0;         ///< gamma^3 ||f||^2_{s+1} / (||F+||^2 + ||F-||^2)
  double r_prime = 0.0;   ///< gamma^2 ||f||^2_{s+1} / ||g||^2_s
  double g1_ratio = 0.0;  ///< gamma ||g1||^2_s / ||F+||^2
  double g2_ratio = 0.0;  ///< gamma ||g2||^2_s / ||F-||^2
  /// min over bins of |g^|^2 / (C gamma^2 Lambda^2 |f^|^2); >= 1 when the
  /// pointwise bound holds everywhere.
  double pointwise_margin = 0.0;
  std::size_t bins_checked = 0;
  bool pointwise_ok = false;
};

struct EstimateTable {
  EstimateConstants constants;
  double s = 0.0;
  std::vector<EstimateRow> rows;
};

[[nodiscard]] EstimateTable verify_estimate(const FieldGrid& field,
                                            const MediumParams& params,
                                            const std::vector<double>& gammas,
                                            double s,
                                            const EstimateConstants& constants);

[[nodiscard]] EstimateTable verify_estimate(const FieldGrid& field,
                                            const MediumParams& params,
                                            const std::vector<double>& gammas,
                                            double s);

struct ProbeRow {
  double gamma = 0.0;
  double distance = 0.0;  ///< gamma - c Y1 |eta0|
  double abs_inv_sigma = 0.0;
};

struct ProbeTable {
  double root = 0.0;  ///< c Y1 |eta0|
  std::vector<ProbeRow> rows;
  /// Least-squares slope of log |1/Sigma| against log |distance|.
  double exponent = 0.0;
};

/// |1/Sigma(gamma, eta0)| along real gamma in the elliptic regime.
[[nodiscard]] ProbeTable blowup_probe(const MediumParams& params, double eta0,
                                      const std::vector<double>& gammas);

/// Least-squares slope of log y against log x.
[[nodiscard]] double fit_power_law(std::span<const double> x,
                                   std::span<const double> y);

}  // namespace vsheet
