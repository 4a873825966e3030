#include "vsheet/symbol.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

namespace vsheet {

namespace {

constexpr Complex kI{0.0, 1.0};

// Frequencies within this relative distance of an interval endpoint
// delta/(c eta) = +/-(v/c +/- 1) are treated as lying on it.
constexpr double kEndpointTolerance = 1e-12;

// Root kinds are decided with this relative tolerance.
constexpr double kKindTolerance = 1e-12;

constexpr double kNearRoot = 1e-8;

double sgn(double x) { return x < 0.0 ? -1.0 : 1.0; }

// tau' = tau + i w1 eta, so that general velocities reduce to the symmetric
// configuration with half jump V1.
Complex shifted_tau(const Frequency& freq, const MediumParams& params) {
  return {freq.gamma, freq.delta + params.w1() * freq.eta};
}

}  // namespace

std::string_view to_string(BranchCase b) {
  switch (b) {
    case BranchCase::interior:
      return "interior";
    case BranchCase::boundary_real:
      return "boundary_real";
    case BranchCase::boundary_zero:
      return "boundary_zero";
    case BranchCase::boundary_imag_neg:
      return "boundary_imag_neg";
    case BranchCase::boundary_imag_pos:
      return "boundary_imag_pos";
  }
  return "unknown";
}

std::string_view to_string(RootKind k) {
  switch (k) {
    case RootKind::imaginary:
      return "imaginary";
    case RootKind::positive_real:
      return "positive_real";
    case RootKind::zero:
      return "zero";
    case RootKind::other:
      return "other";
  }
  return "unknown";
}

Complex complex_sqrt_pos(double a, double b) {
  const double r = std::hypot(a, b);
  if (r == 0.0) return {0.0, 0.0};
  // Of (r+a)/2 and (r-a)/2 only the larger one is computed directly; the
  // other follows from x y = |b|/2.
  double x = 0.0;
  double y = 0.0;
  if (a >= 0.0) {
    x = std::sqrt(0.5 * (r + a));
    y = std::abs(b) / (2.0 * x);
  } else {
    y = std::sqrt(0.5 * (r - a));
    x = std::abs(b) / (2.0 * y);
  }
  return {sgn(b) * x, y};
}

Complex mu(const Frequency& freq, double v1, double c, BranchCase& branch) {
  require_in_frequency_set(freq);
  if (!(c > 0.0)) throw DomainError("sound speed c must be positive");

  const Complex tau = freq.tau();
  if (freq.eta == 0.0) {
    if (freq.gamma > 0.0) {
      branch = BranchCase::interior;
    } else {
      branch = freq.delta >= 0.0 ? BranchCase::boundary_imag_pos
                                 : BranchCase::boundary_imag_neg;
    }
    return tau / c;
  }

  const double s = freq.delta + v1 * freq.eta;
  const double p = s / c;
  const double abs_eta = std::abs(freq.eta);

  if (freq.gamma > 0.0) {
    branch = BranchCase::interior;
    const double g = freq.gamma / c;
    const double a = g * g + (abs_eta - std::abs(p)) * (abs_eta + std::abs(p));
    const double b = 2.0 * g * p;
    // complex_sqrt_pos carries the sign of b on its real part.
    const Complex root = complex_sqrt_pos(a, b);
    return b < 0.0 ? -root : root;
  }

  if (std::abs(std::abs(s) - c * abs_eta) <= kEndpointTolerance * c * abs_eta) {
    branch = BranchCase::boundary_zero;
    return {0.0, 0.0};
  }
  const double q = (std::abs(p) - abs_eta) * (std::abs(p) + abs_eta);
  if (q < 0.0) {
    branch = BranchCase::boundary_real;
    return {std::sqrt(-q), 0.0};
  }
  const double im = sgn(s) * std::sqrt(q);
  branch = im < 0.0 ? BranchCase::boundary_imag_neg
                    : BranchCase::boundary_imag_pos;
  return {0.0, im};
}

Complex mu(const Frequency& freq, double v1, double c) {
  BranchCase ignored{};
  return mu(freq, v1, c, ignored);
}

RootPair mu_pair(const Frequency& freq, const MediumParams& params) {
  require_valid(params);
  RootPair out;
  out.mu_plus = mu(freq, params.v1_plus, params.c, out.case_plus);
  out.mu_minus = mu(freq, params.v1_minus, params.c, out.case_minus);
  return out;
}

namespace {

Complex ratio_from_roots(const Frequency& freq, const MediumParams& params,
                         const RootPair& roots) {
  const double c = params.c;
  const double V = params.V1();
  const Complex tau = shifted_tau(freq, params);

  if (freq.eta == 0.0 || V == 0.0) {
    // mu+ = mu- = tau'/c.
    return {0.5, 0.0};
  }
  if (tau == Complex{0.0, 0.0}) {
    // mu+ + mu- vanishes for v >= c; the continuous extension is used.
    const double m = V / c;
    if (m >= 1.0) return std::sqrt((m * m - 1.0) / (4.0 * m * m));
    return {0.0, 0.0};
  }

  const Complex sum = roots.mu_plus + roots.mu_minus;
  const Complex diff = roots.mu_plus - roots.mu_minus;
  if (std::abs(sum) >= std::abs(diff)) {
    return (tau / c) / sum;
  }
  // (mu+^2 - mu-^2) = 4 i V eta tau'/c^2 turns the quotient into a
  // difference, well conditioned where mu+ + mu- is small.
  return c * diff / (4.0 * kI * V * freq.eta);
}

}  // namespace

Complex ratio_sq(const Frequency& freq, const MediumParams& params) {
  const RootPair roots = mu_pair(freq, params);
  const Complex r = ratio_from_roots(freq, params, roots);
  return r * r;
}

Complex sigma(const Frequency& freq, const MediumParams& params) {
  const Complex tau = shifted_tau(freq, params);
  const double V = params.V1();
  const double ve = V * freq.eta;
  return tau * tau + ve * ve * (8.0 * ratio_sq(freq, params) - 1.0);
}

Complex sigma_factored(const Frequency& freq, const MediumParams& params) {
  const RootPair roots = mu_pair(freq, params);
  const double c = params.c;
  return c * c * (roots.mu_plus * roots.mu_minus - freq.eta * freq.eta);
}

Complex sigma_difference_form(const Frequency& freq,
                              const MediumParams& params) {
  const RootPair roots = mu_pair(freq, params);
  const Complex sum = roots.mu_plus + roots.mu_minus;
  if (sum == Complex{0.0, 0.0}) {
    throw DomainError("mu+ + mu- vanishes; difference form undefined");
  }
  const Complex tau = shifted_tau(freq, params);
  const double V = params.V1();
  const double eta = freq.eta;
  return tau * tau - V * V * eta * eta -
         2.0 * kI * V * eta * tau * (roots.mu_plus - roots.mu_minus) / sum;
}

RegimeReport classify(const MediumParams& params) {
  require_symmetric(params);
  const double m = params.mach();
  const double sqrt2 = std::numbers::sqrt2;

  RegimeReport rep;
  if (std::abs(m - 1.0) <= kRegimeTolerance) {
    rep.mach_class = MachClass::sonic;
  } else {
    rep.mach_class = m < 1.0 ? MachClass::subsonic : MachClass::supersonic;
  }

  const double disc = std::sqrt(4.0 * m * m + 1.0);
  rep.Y0 = std::sqrt(m * m + 1.0 + disc);
  // Y1^2 and Y2^2 are +/-(m^2 + 1 - disc) = +/-m^2 (m^2 - 2) / Y0^2; the
  // product form avoids the cancellation near m = sqrt(2).
  if (std::abs(m - sqrt2) <= kRegimeTolerance * sqrt2) {
    rep.stability_class = StabilityClass::transition;
  } else if (m < sqrt2) {
    rep.stability_class = StabilityClass::elliptic_unstable;
    rep.Y1 = m * std::sqrt(2.0 - m * m) / rep.Y0;
  } else {
    rep.stability_class = StabilityClass::weakly_stable;
    rep.Y2 = m * std::sqrt(m * m - 2.0) / rep.Y0;
  }
  return rep;
}

std::vector<Complex> symbol_roots(const MediumParams& params, double eta) {
  if (eta == 0.0 || !std::isfinite(eta)) {
    throw DomainError("symbol_roots requires a finite eta != 0");
  }
  const RegimeReport rep = classify(params);
  const double c = params.c;
  switch (rep.stability_class) {
    case StabilityClass::elliptic_unstable:
      return {Complex{c * *rep.Y1 * std::abs(eta), 0.0}};
    case StabilityClass::weakly_stable:
      return {Complex{0.0, c * *rep.Y2 * eta},
              Complex{0.0, -c * *rep.Y2 * eta}};
    case StabilityClass::transition:
      break;
  }
  throw RegimeError(StabilityClass::transition,
                    "symbol roots are degenerate at v/c = sqrt(2)");
}

Complex factor_H(const Frequency& freq, const MediumParams& params,
                 double radius) {
  const RegimeReport rep = classify(params);
  if (rep.stability_class != StabilityClass::weakly_stable) {
    std::ostringstream os;
    os << "factor_H requires v/c > sqrt(2); regime is "
       << to_string(rep.stability_class);
    throw RegimeError(rep.stability_class, os.str());
  }
  require_in_frequency_set(freq);

  const double c = params.c;
  const double m = params.mach();
  const double y2 = *rep.Y2;
  const Complex root{0.0, c * y2 * freq.eta};
  const Complex offset = freq.tau() - root;
  const double lambda = std::sqrt(freq.lambda_sq());
  if (std::abs(offset) > radius * lambda) {
    std::ostringstream os;
    os << "frequency is outside the root neighbourhood (distance "
       << std::abs(offset) / lambda << " > " << radius << ")";
    throw DomainError(os.str());
  }
  if (std::abs(offset) <= kNearRoot * lambda) {
    // H(root) = c eta dsigma/dX(X3) with dsigma/dX = 2 X (X^2 + m^2 + 1)
    // at X3 = i Y2, where mu~+ mu~- = 1.
    const double k = m * m + 1.0 - y2 * y2;
    return c * freq.eta * 2.0 * Complex{0.0, y2} * k;
  }
  return sigma(freq, params) / offset;
}

SignRow expected_sign_row(const MediumParams& params, double x,
                          bool delta_is_zero) {
  const RegimeReport rep = classify(params);
  const double m = params.mach();
  const auto I = RootKind::imaginary;
  const auto R = RootKind::positive_real;

  auto on_endpoint = [x](double e) {
    return std::abs(x - e) <= kEndpointTolerance * std::max(1.0, std::abs(e));
  };

  if (rep.mach_class == MachClass::sonic) {
    const std::array<double, 3> ends{-2.0, 0.0, 2.0};
    for (double e : ends) {
      if (on_endpoint(e)) throw DomainError("delta/(c eta) on an interval endpoint");
    }
    if (x < -2.0) return {5, 1, I, I, true, -1};
    if (x < 0.0) return {5, 2, R, I, true, 0};
    if (x < 2.0) return {5, 3, I, R, true, 0};
    return {5, 4, I, I, true, -1};
  }

  // Endpoints in ascending order; the middle pair swaps between regimes.
  std::array<double, 4> ends{-(m + 1.0), -(m - 1.0), m - 1.0, m + 1.0};
  if (m < 1.0) std::swap(ends[1], ends[2]);
  for (double e : ends) {
    if (on_endpoint(e)) throw DomainError("delta/(c eta) on an interval endpoint");
  }

  if (rep.mach_class == MachClass::supersonic) {
    if (x < ends[0]) return {3, 1, I, I, true, -1};
    if (x < ends[1]) return {3, 2, R, I, true, 0};
    if (x < ends[2]) return {3, 3, I, I, !delta_is_zero, 1};
    if (x < ends[3]) return {3, 4, I, R, true, 0};
    return {3, 5, I, I, true, -1};
  }
  if (x < ends[0]) return {4, 1, I, I, true, -1};
  if (x < ends[1]) return {4, 2, R, I, true, 0};
  if (x < ends[2]) return {4, 3, R, R, true, 1};
  if (x < ends[3]) return {4, 4, I, R, true, 0};
  return {4, 5, I, I, true, -1};
}

namespace {

RootKind kind_of(Complex z, double scale) {
  const double a = std::abs(z);
  if (a <= kKindTolerance * scale) return RootKind::zero;
  if (std::abs(z.real()) <= kKindTolerance * a) return RootKind::imaginary;
  if (z.real() > 0.0 && std::abs(z.imag()) <= kKindTolerance * a) {
    return RootKind::positive_real;
  }
  return RootKind::other;
}

}  // namespace

SignCheck sign_table_check(const Frequency& freq, const MediumParams& params) {
  if (freq.gamma != 0.0 || freq.eta == 0.0) {
    throw DomainError("sign tables apply on gamma = 0 with eta != 0");
  }
  require_symmetric(params);
  const double c = params.c;
  const double x = freq.delta / (c * freq.eta);

  SignCheck out;
  out.expected = expected_sign_row(params, x, freq.delta == 0.0);

  const RootPair roots = mu_pair(freq, params);
  const double scale = std::abs(freq.eta);
  out.mu_plus_kind = kind_of(roots.mu_plus, scale);
  out.mu_minus_kind = kind_of(roots.mu_minus, scale);

  const Complex sum = roots.mu_plus + roots.mu_minus;
  out.sum_nonzero = std::abs(sum) >
                    kKindTolerance * (std::abs(roots.mu_plus) + std::abs(roots.mu_minus));

  const double re_prod = (roots.mu_plus * roots.mu_minus).real();
  const double prod_scale = std::abs(roots.mu_plus) * std::abs(roots.mu_minus);
  if (std::abs(re_prod) <= kKindTolerance * prod_scale) {
    out.re_product_sign = 0;
  } else {
    out.re_product_sign = re_prod > 0.0 ? 1 : -1;
  }

  out.matches = out.mu_plus_kind == out.expected.mu_plus_kind &&
                out.mu_minus_kind == out.expected.mu_minus_kind &&
                out.sum_nonzero == out.expected.sum_nonzero &&
                out.re_product_sign == out.expected.re_product_sign;
  return out;
}

}  // namespace vsheet
