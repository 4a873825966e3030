#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

namespace vsheet {

using Complex = std::complex<double>;

/// Relative tolerance used when comparing v/c against the thresholds 1 and sqrt(2).
inline constexpr double kRegimeTolerance = 1e-12;

/// A point (tau, eta) of the frequency set, with tau = gamma + i delta.
///
/// gamma is the exponential weight (1/time), delta the time frequency (1/time)
/// and eta the tangential space frequency (1/length).
struct Frequency {
  double gamma = 0.0;
  double delta = 0.0;
  double eta = 0.0;

  [[nodiscard]] Complex tau() const { return {gamma, delta}; }

  /// |tau|^2 + eta^2, i.e. Lambda^2.
  [[nodiscard]] double lambda_sq() const {
    return gamma * gamma + delta * delta + eta * eta;
  }

  [[nodiscard]] Frequency scaled(double k) const {
    return {k * gamma, k * delta, k * eta};
  }

  /// gamma >= 0 and (tau, eta) != (0, 0).
  [[nodiscard]] bool in_frequency_set() const {
    return gamma >= 0.0 && lambda_sq() > 0.0;
  }
};

enum class MachClass { subsonic, sonic, supersonic };
enum class StabilityClass { elliptic_unstable, transition, weakly_stable };

[[nodiscard]] std::string_view to_string(MachClass m);
[[nodiscard]] std::string_view to_string(StabilityClass s);

/// Invalid arguments: points outside the frequency set, non-positive
/// sound speed, malformed grids and so on.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation that is only defined in some stability regime was invoked
/// outside of it.
class RegimeError : public std::domain_error {
 public:
  RegimeError(StabilityClass regime, const std::string& what)
      : std::domain_error(what), regime_(regime) {}

  [[nodiscard]] StabilityClass regime() const noexcept { return regime_; }

 private:
  StabilityClass regime_;
};

/// Sound speed and the tangential velocities on both sides of the sheet.
///
/// The symmetric configuration v1_plus = v, v1_minus = -v (so w1 = 0, V1 = v)
/// is the one the stability analysis applies to; general velocities are
/// accepted for evaluating the roots and the symbol only.
struct MediumParams {
  double c = 1.0;
  double v1_plus = 0.0;
  double v1_minus = 0.0;

  [[nodiscard]] static MediumParams symmetric(double c, double v) {
    return {c, v, -v};
  }
  [[nodiscard]] static MediumParams general(double c, double v1_plus,
                                            double v1_minus) {
    return {c, v1_plus, v1_minus};
  }

  /// Mean tangential velocity (v1+ + v1-)/2.
  [[nodiscard]] double w1() const { return 0.5 * (v1_plus + v1_minus); }
  /// Half jump (v1+ - v1-)/2.
  [[nodiscard]] double V1() const { return 0.5 * (v1_plus - v1_minus); }
  /// Half jump of the symmetric configuration; equals V1().
  [[nodiscard]] double v() const { return V1(); }
  [[nodiscard]] double mach() const { return V1() / c; }

  [[nodiscard]] bool is_symmetric() const {
    return w1() == 0.0 || std::abs(w1()) <= kRegimeTolerance * std::abs(V1());
  }
};

/// Throws DomainError unless c > 0.
void require_valid(const MediumParams& params);

/// Throws DomainError unless c > 0, v > 0 and w1 = 0.
void require_symmetric(const MediumParams& params);

/// Throws DomainError unless freq lies in the frequency set.
void require_in_frequency_set(const Frequency& freq);

}  // namespace vsheet
