#pragma once

// Roots mu+/- of the characteristic equation of the transformed pressure,
// the order-2 symbol Sigma(tau, eta) of the front equation, and the
// stability classification that follows from its zeros.

#include <optional>
#include <string_view>
#include <vector>

#include "vsheet/types.hpp"

namespace vsheet {

/// Which formula produced a root.  interior: gamma > 0.  On the boundary
/// gamma = 0 the continuous extension is either positive real, zero (on the
/// vanishing lines), or purely imaginary with the given sign of Im mu.
enum class BranchCase {
  interior,
  boundary_real,
  boundary_zero,
  boundary_imag_neg,
  boundary_imag_pos
};

[[nodiscard]] std::string_view to_string(BranchCase b);

struct RootPair {
  Complex mu_plus;
  Complex mu_minus;
  BranchCase case_plus = BranchCase::interior;
  BranchCase case_minus = BranchCase::interior;
};

struct RegimeReport {
  MachClass mach_class = MachClass::subsonic;
  StabilityClass stability_class = StabilityClass::elliptic_unstable;
  double Y0 = 0.0;
  std::optional<double> Y1;
  std::optional<double> Y2;
};

/// The square root sgn(b) sqrt((r+a)/2) + i sqrt((r-a)/2) of a + ib, with
/// r = |a + ib| and sgn(0) = 1.  Evaluated without cancellation.
[[nodiscard]] Complex complex_sqrt_pos(double a, double b);

/// Root of s^2 = ((tau + i v1 eta)/c)^2 + eta^2 with Re s > 0 for gamma > 0,
/// continuously extended to gamma = 0.
[[nodiscard]] Complex mu(const Frequency& freq, double v1, double c);

/// Same as mu() but also reports which branch formula was used.
[[nodiscard]] Complex mu(const Frequency& freq, double v1, double c,
                         BranchCase& branch);

/// mu(freq, v1+, c) and mu(freq, v1-, c).
[[nodiscard]] RootPair mu_pair(const Frequency& freq,
                               const MediumParams& params);

/// ((tau'/c) / (mu+ + mu-))^2 with tau' = tau + i w1 eta, continuously
/// extended to the points tau' = 0 where mu+ + mu- vanishes.
[[nodiscard]] Complex ratio_sq(const Frequency& freq,
                               const MediumParams& params);

/// Sigma = tau'^2 + V1^2 eta^2 (8 ratio_sq - 1).
[[nodiscard]] Complex sigma(const Frequency& freq, const MediumParams& params);

/// Sigma = c^2 (mu+ mu- - eta^2).
[[nodiscard]] Complex sigma_factored(const Frequency& freq,
                                     const MediumParams& params);

/// The intermediate form tau'^2 - V1^2 eta^2 - 2 i V1 eta tau' (mu+ - mu-)/(mu+ + mu-)
/// obtained from the boundary system before the ratio identity is applied.
/// Requires mu+ + mu- != 0.
[[nodiscard]] Complex sigma_difference_form(const Frequency& freq,
                                            const MediumParams& params);

[[nodiscard]] RegimeReport classify(const MediumParams& params);

/// Zeros tau of Sigma(., eta) in the closed right half plane.
/// Throws RegimeError in the transition case v/c = sqrt(2).
[[nodiscard]] std::vector<Complex> symbol_roots(const MediumParams& params,
                                                double eta);

/// Default neighbourhood radius (relative to Lambda) accepted by factor_H.
inline constexpr double kRootNeighbourhood = 0.25;

/// H = Sigma / (tau - i c Y2 eta) near the neutral root ray.  Switches to
/// the analytic value c eta dsigma/dX at the root when within 1e-8 relative.
[[nodiscard]] Complex factor_H(const Frequency& freq,
                               const MediumParams& params,
                               double radius = kRootNeighbourhood);

/// Classification of a boundary root.
enum class RootKind { imaginary, positive_real, zero, other };

[[nodiscard]] std::string_view to_string(RootKind k);

/// One row of the boundary sign tables for v > c, v < c and v = c.
struct SignRow {
  int table = 0;   ///< 3: v > c, 4: v < c, 5: v = c
  int row = 0;     ///< 1-based row within the table
  RootKind mu_plus_kind = RootKind::other;
  RootKind mu_minus_kind = RootKind::other;
  bool sum_nonzero = true;
  int re_product_sign = 0;
};

/// The tabulated row for the ratio delta/(c eta) in the regime of params.
/// Throws DomainError on an interval endpoint.
[[nodiscard]] SignRow expected_sign_row(const MediumParams& params,
                                        double delta_over_c_eta,
                                        bool delta_is_zero);

struct SignCheck {
  RootKind mu_plus_kind = RootKind::other;
  RootKind mu_minus_kind = RootKind::other;
  bool sum_nonzero = true;
  int re_product_sign = 0;
  SignRow expected;
  bool matches = false;
};

/// Computes the root kinds at a boundary point (gamma = 0, eta != 0) and
/// compares with the tabulated row.
[[nodiscard]] SignCheck sign_table_check(const Frequency& freq,
                                         const MediumParams& params);

}  // namespace vsheet
