#include "vsheet/pressure.hpp"

#include <algorithm>
#include <cmath>

#include "vsheet/quadrature.hpp"

namespace vsheet {

namespace {

constexpr Complex kI{0.0, 1.0};

// |mu+ + mu-| below this multiple of |mu+| + |mu-| makes the boundary
// system numerically singular.
constexpr double kSingularTolerance = 1e-14;

double rel(Complex residual, std::initializer_list<Complex> terms) {
  double scale = 0.0;
  for (Complex t : terms) scale = std::max(scale, std::abs(t));
  const double r = std::abs(residual);
  return scale > 0.0 ? r / scale : r;
}

Complex shifted_tau(const Frequency& freq, const MediumParams& params) {
  return {freq.gamma, freq.delta + params.w1() * freq.eta};
}

struct SideProfile {
  std::vector<Complex> p;
  std::vector<Complex> tail;
  Complex growth;
  bool warned = false;
};

// P(x) = A cosh(mu x) + B sinh(mu x)/mu - int_0^x sinh(mu (x - y)) F(y) dy / (c^2 mu)
// rewritten without growing exponentials:
//   P(x) = (A - B/mu) e^{-mu x} / 2
//        + (int_0^x e^{-mu (x-y)} F dy + int_x^L e^{-mu (y-x)} F dy) / (2 c^2 mu)
//        + R e^{mu x} / 2,   R = A + B/mu - I/(c^2 mu).
SideProfile side_profile(Complex A, Complex B, Complex m, double c,
                         std::span<const Complex> f, double h) {
  const std::size_t n = f.size();
  SideProfile out;
  out.p.resize(n);
  out.tail.resize(n);
  const double c2 = c * c;
  const Complex I = exp_integral(f, h, m);
  Complex R = A + B / m - I / (c2 * m);
  if (std::abs(R) <= kGrowthTolerance *
                         std::max({std::abs(A), std::abs(B / m), std::abs(I / (c2 * m))})) {
    R = 0.0;
  } else {
    out.warned = true;
  }
  out.growth = R;
  for (std::size_t k = 0; k < n; ++k) {
    const double x = h * static_cast<double>(k);
    const Complex left = exp_integral_backward(f, 0, k, h, m);
    const Complex right = exp_integral_forward(f, k, n - 1, h, m);
    Complex p = 0.5 * (A - B / m) * std::exp(-m * x) + (left + right) / (2.0 * c2 * m);
    if (R != Complex{0.0, 0.0}) p += 0.5 * R * std::exp(m * x);
    out.p[k] = p;
    out.tail[k] = left;
  }
  return out;
}

}  // namespace

double BoundaryResiduals::max() const {
  return std::max({continuity, jump, decay_plus, decay_minus});
}

Complex derivative_jump(const Frequency& freq, const MediumParams& params,
                        Complex f_hat) {
  const double c = params.c;
  return -4.0 * kI * freq.eta * (params.V1() / c) * (shifted_tau(freq, params) / c) *
         f_hat;
}

BoundaryState solve_boundary_system(const Frequency& freq,
                                    const MediumParams& params, Complex f_hat,
                                    Complex I_plus, Complex I_minus) {
  const RootPair roots = mu_pair(freq, params);
  const Complex mp = roots.mu_plus;
  const Complex mm = roots.mu_minus;
  const Complex det = mp + mm;
  if (std::abs(det) <= kSingularTolerance * (std::abs(mp) + std::abs(mm)) ||
      det == Complex{0.0, 0.0}) {
    throw DomainError("boundary system is singular: mu+ + mu- vanishes");
  }
  const double c2 = params.c * params.c;
  const Complex J = derivative_jump(freq, params, f_hat);
  BoundaryState s;
  const Complex p0 = ((I_plus + I_minus) / c2 - J) / det;
  s.p_plus0 = p0;
  s.p_minus0 = p0;
  s.dp_plus0 = I_plus / c2 - mp * p0;
  s.dp_minus0 = mm * p0 - I_minus / c2;
  return s;
}

BoundaryResiduals boundary_residuals(const Frequency& freq,
                                     const MediumParams& params,
                                     const BoundaryState& s, Complex f_hat,
                                     Complex I_plus, Complex I_minus) {
  const RootPair roots = mu_pair(freq, params);
  const double c2 = params.c * params.c;
  const Complex J = derivative_jump(freq, params, f_hat);
  BoundaryResiduals r;
  r.continuity = rel(s.p_plus0 - s.p_minus0, {s.p_plus0, s.p_minus0});
  r.jump = rel(s.dp_plus0 - s.dp_minus0 - J, {s.dp_plus0, s.dp_minus0, J});
  const Complex a = roots.mu_plus * s.p_plus0;
  r.decay_plus = rel(a + s.dp_plus0 - I_plus / c2, {a, s.dp_plus0, I_plus / c2});
  const Complex b = roots.mu_minus * s.p_minus0;
  r.decay_minus = rel(b - s.dp_minus0 - I_minus / c2, {b, s.dp_minus0, I_minus / c2});
  return r;
}

PressureProfile reconstruct(const Frequency& freq, const MediumParams& params,
                            const BoundaryState& state,
                            std::span<const Complex> f_plus_levels,
                            std::span<const Complex> f_minus_levels, double h) {
  if (f_plus_levels.size() != f_minus_levels.size() || f_plus_levels.size() < 3) {
    throw DomainError("reconstruct needs matching level arrays of length >= 3");
  }
  const RootPair roots = mu_pair(freq, params);
  if (!(roots.mu_plus.real() > 0.0) || !(roots.mu_minus.real() > 0.0)) {
    throw DomainError("reconstruct needs Re mu+- > 0 (gamma > 0)");
  }
  const double c = params.c;
  SideProfile plus = side_profile(state.p_plus0, state.dp_plus0, roots.mu_plus, c,
                                  f_plus_levels, h);
  SideProfile minus = side_profile(state.p_minus0, -state.dp_minus0,
                                   roots.mu_minus, c, f_minus_levels, h);
  PressureProfile out;
  out.x2_nodes.resize(f_plus_levels.size());
  for (std::size_t k = 0; k < out.x2_nodes.size(); ++k) {
    out.x2_nodes[k] = h * static_cast<double>(k);
  }
  out.p_plus = std::move(plus.p);
  out.p_minus = std::move(minus.p);
  out.tail_plus = std::move(plus.tail);
  out.tail_minus = std::move(minus.tail);
  out.growth_plus = plus.growth;
  out.growth_minus = minus.growth;
  out.growth_warning = plus.warned || minus.warned;
  return out;
}

double check_front_equation(const Frequency& freq, const MediumParams& params,
                            const BoundaryState& state, Complex f_hat) {
  const Complex tau = shifted_tau(freq, params);
  const double ve = params.V1() * freq.eta;
  const double c2 = params.c * params.c;
  const Complex r = tau * tau * f_hat - ve * ve * f_hat +
                    0.5 * c2 * (state.dp_plus0 + state.dp_minus0);
  return std::abs(r);
}

double check_reduced_front_equation(const Frequency& freq,
                                    const MediumParams& params, Complex f_hat,
                                    Complex M) {
  const RootPair roots = mu_pair(freq, params);
  const Complex sum = roots.mu_plus + roots.mu_minus;
  const Complex coeff = sigma_difference_form(freq, params);
  return std::abs(coeff * f_hat + roots.mu_plus * roots.mu_minus / sum * M);
}

std::vector<double> ode_residual(const Frequency& freq, double v1, double c,
                                 std::span<const Complex> p,
                                 std::span<const Complex> f, double h) {
  if (p.size() != f.size() || p.size() < 3) {
    throw DomainError("ode_residual needs matching arrays of length >= 3");
  }
  const Complex a{freq.gamma, freq.delta + v1 * freq.eta};
  const Complex k2 = a * a + c * c * freq.eta * freq.eta;
  std::vector<double> out(p.size() - 2);
  for (std::size_t k = 1; k + 1 < p.size(); ++k) {
    const Complex d2 = (p[k + 1] - 2.0 * p[k] + p[k - 1]) / (h * h);
    out[k - 1] = std::abs(k2 * p[k] - c * c * d2 - f[k]);
  }
  return out;
}

DecayResiduals decay_residuals(const Frequency& freq,
                               const MediumParams& params,
                               const BoundaryState& state,
                               const PressureProfile& profile,
                               std::span<const Complex> f_plus_levels,
                               std::span<const Complex> f_minus_levels,
                               double h) {
  const RootPair roots = mu_pair(freq, params);
  const double c2 = params.c * params.c;
  const Complex mp = roots.mu_plus;
  const Complex mm = roots.mu_minus;
  const Complex ip = exp_integral(f_plus_levels, h, mp) / (c2 * mp);
  const Complex im = exp_integral(f_minus_levels, h, mm) / (c2 * mm);
  const Complex pp = profile.p_plus.front();
  const Complex pm = profile.p_minus.front();
  DecayResiduals out;
  out.plus = rel(pp + state.dp_plus0 / mp - ip, {pp, state.dp_plus0 / mp, ip});
  out.minus = rel(pm - state.dp_minus0 / mm - im, {pm, state.dp_minus0 / mm, im});
  return out;
}

}  // namespace vsheet
