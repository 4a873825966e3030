#pragma once

// Transformed pressure in the two half-spaces: the boundary values at
// x2 = 0, the decaying profiles in x2 and residual checks.

#include <span>
#include <vector>

#include "vsheet/symbol.hpp"
#include "vsheet/types.hpp"

namespace vsheet {

/// P^+-(0) and the x2-derivatives at the sheet.
struct BoundaryState {
  Complex p_plus0;
  Complex p_minus0;
  Complex dp_plus0;
  Complex dp_minus0;
};

/// Jump of d2 P^ across the sheet forced by the front:
/// -4 i eta (V1/c) ((tau + i w1 eta)/c) f^.
[[nodiscard]] Complex derivative_jump(const Frequency& freq,
                                      const MediumParams& params,
                                      Complex f_hat);

/// Solves
///   P+(0) - P-(0) = 0
///   d2P+(0) - d2P-(0) = derivative_jump
///   mu+ P+(0) + d2P+(0) = I+ / c^2
///   mu- P-(0) - d2P-(0) = I- / c^2
/// with I+- the decay integrals int_0^inf e^{-mu+- y} F^+-(+-y) dy.
/// Throws DomainError when |mu+ + mu-| is too small for a reliable solve.
[[nodiscard]] BoundaryState solve_boundary_system(const Frequency& freq,
                                                  const MediumParams& params,
                                                  Complex f_hat, Complex I_plus,
                                                  Complex I_minus);

/// Relative residuals of the four rows, each scaled by the largest term of
/// its row.
struct BoundaryResiduals {
  double continuity = 0.0;
  double jump = 0.0;
  double decay_plus = 0.0;
  double decay_minus = 0.0;

  [[nodiscard]] double max() const;
};

[[nodiscard]] BoundaryResiduals boundary_residuals(const Frequency& freq,
                                                   const MediumParams& params,
                                                   const BoundaryState& state,
                                                   Complex f_hat, Complex I_plus,
                                                   Complex I_minus);

struct PressureProfile {
  std::vector<double> x2_nodes;
  std::vector<Complex> p_plus;   ///< P^+(x2)
  std::vector<Complex> p_minus;  ///< P^-(-x2)
  /// int_0^{x2} e^{-mu (x2 - y)} F^(y) dy at every node.
  std::vector<Complex> tail_plus;
  std::vector<Complex> tail_minus;
  /// Coefficients of the growing exponential e^{mu x2} / 2 that were kept
  /// because the boundary data did not satisfy the decay rows.
  Complex growth_plus;
  Complex growth_minus;
  bool growth_warning = false;
};

/// Relative size below which the growing coefficient counts as rounding.
inline constexpr double kGrowthTolerance = 1e-10;

/// Evaluates the profiles at x2 = k h from the boundary state and the
/// forcing levels F^+(y_k), F^-(-y_k).
[[nodiscard]] PressureProfile reconstruct(const Frequency& freq,
                                          const MediumParams& params,
                                          const BoundaryState& state,
                                          std::span<const Complex> f_plus_levels,
                                          std::span<const Complex> f_minus_levels,
                                          double h);

/// Residual of the front equation at x2 = 0,
///   (tau')^2 f^ - V1^2 eta^2 f^ + (c^2/2)(d2P+(0) + d2P-(0)),
/// as an absolute value.
[[nodiscard]] double check_front_equation(const Frequency& freq,
                                          const MediumParams& params,
                                          const BoundaryState& state,
                                          Complex f_hat);

/// Residual of the front equation written with the roots,
///   Sigma f^ + (mu+ mu- / (mu+ + mu-)) M, in the difference form.
[[nodiscard]] double check_reduced_front_equation(const Frequency& freq,
                                                  const MediumParams& params,
                                                  Complex f_hat, Complex M);

/// Centred second-difference residual of
///   (tau + i v1 eta)^2 P + c^2 eta^2 P - c^2 P'' = F
/// at every interior node, in absolute value.
[[nodiscard]] std::vector<double> ode_residual(const Frequency& freq,
                                               double v1, double c,
                                               std::span<const Complex> p,
                                               std::span<const Complex> f,
                                               double h);

/// Decay rows P(0) +- d2P(0)/mu - I/(c^2 mu) = 0, recomputed from the
/// reconstructed profiles with the same quadrature, relative to the largest
/// term.
struct DecayResiduals {
  double plus = 0.0;
  double minus = 0.0;
};

[[nodiscard]] DecayResiduals decay_residuals(
    const Frequency& freq, const MediumParams& params,
    const BoundaryState& state, const PressureProfile& profile,
    std::span<const Complex> f_plus_levels,
    std::span<const Complex> f_minus_levels, double h);

}  // namespace vsheet
