#include "vsheet/front.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "vsheet/quadrature.hpp"

namespace vsheet {

TransformedField::TransformedField(const FieldGrid& field, double gamma)
    : grid_(field.grid()), gamma_(gamma) {
  validate(grid_);
  const std::size_t nb = grid_.plane_size();
  const std::size_t n2 = grid_.n_x2;
  axes_ = Spectrum(grid_.n_t, grid_.n_x1, grid_.L_t, grid_.L_x1);
  plus_.assign(nb * n2, Complex{});
  minus_.assign(nb * n2, Complex{});

  for (std::size_t k = 0; k < n2; ++k) {
    for (int side = 0; side < 2; ++side) {
      const std::vector<double> samples = field.plane(side == 0, k);
      const Spectrum s = weighted_forward(samples, grid_.n_t, grid_.n_x1,
                                          grid_.L_t, grid_.L_x1, gamma);
      auto& dst = side == 0 ? plus_ : minus_;
      for (std::size_t b = 0; b < nb; ++b) dst[b * n2 + k] = s.data()[b];
    }
  }
  for (std::size_t kt = 0; kt < grid_.n_t; ++kt) {
    for (std::size_t kx = 0; kx < grid_.n_x1; ++kx) {
      if (!axes_.is_nyquist(kt, kx)) continue;
      const std::size_t b = kt * grid_.n_x1 + kx;
      std::fill_n(plus_.begin() + static_cast<std::ptrdiff_t>(b * n2), n2, Complex{});
      std::fill_n(minus_.begin() + static_cast<std::ptrdiff_t>(b * n2), n2, Complex{});
    }
  }
}

std::span<const Complex> TransformedField::plus(std::size_t kt,
                                                std::size_t kx) const {
  const std::size_t n2 = grid_.n_x2;
  return {plus_.data() + (kt * grid_.n_x1 + kx) * n2, n2};
}

std::span<const Complex> TransformedField::minus(std::size_t kt,
                                                 std::size_t kx) const {
  const std::size_t n2 = grid_.n_x2;
  return {minus_.data() + (kt * grid_.n_x1 + kx) * n2, n2};
}

Frequency TransformedField::frequency(std::size_t kt, std::size_t kx) const {
  return {gamma_, axes_.delta(kt), axes_.eta(kx)};
}

Spectrum TransformedField::level(bool plus_side, std::size_t k) const {
  if (k >= grid_.n_x2) throw DomainError("x2 level out of range");
  Spectrum out = axes_;
  const auto& src = plus_side ? plus_ : minus_;
  for (std::size_t b = 0; b < out.size(); ++b) {
    out.data()[b] = src[b * grid_.n_x2 + k];
  }
  return out;
}

MResult compute_M(std::span<const Complex> f_plus_levels,
                  std::span<const Complex> f_minus_levels, double h,
                  const Frequency& freq, const MediumParams& params) {
  if (f_plus_levels.size() != f_minus_levels.size()) {
    throw DomainError("F+ and F- level counts differ");
  }
  MResult out;
  out.roots = mu_pair(freq, params);
  const Complex mp = out.roots.mu_plus;
  const Complex mm = out.roots.mu_minus;
  if (!(mp.real() > 0.0) || !(mm.real() > 0.0)) {
    throw DomainError("compute_M needs Re mu+- > 0 (gamma > 0)");
  }
  out.I_plus = exp_integral(f_plus_levels, h, mp);
  out.I_minus = exp_integral(f_minus_levels, h, mm);
  out.M = out.I_plus / mp - out.I_minus / mm;

  const double L = h * static_cast<double>(f_plus_levels.size() - 1);
  auto tail = [L](Complex m, Complex last) {
    return std::exp(-m.real() * L) * std::abs(last) / (m.real() * std::abs(m));
  };
  out.truncation_bound = tail(mp, f_plus_levels.back()) +
                         tail(mm, f_minus_levels.back());
  return out;
}

MResult compute_M(const TransformedField& field, std::size_t kt,
                  std::size_t kx, const MediumParams& params) {
  return compute_M(field.plus(kt, kx), field.minus(kt, kx), field.h(),
                   field.frequency(kt, kx), params);
}

FrontBin solve_bin(std::span<const Complex> f_plus_levels,
                   std::span<const Complex> f_minus_levels, double h,
                   const Frequency& freq, const MediumParams& params) {
  FrontBin out;
  out.m = compute_M(f_plus_levels, f_minus_levels, h, freq, params);
  const Complex mp = out.m.roots.mu_plus;
  const Complex mm = out.m.roots.mu_minus;
  const Complex sum = mp + mm;
  out.g1 = -mm * out.m.I_plus / sum;
  out.g2 = -mp * out.m.I_minus / sum;
  out.g = -(mp * mm / sum) * out.m.M;
  out.sigma = sigma(freq, params);
  out.f_hat = out.g / out.sigma;
  return out;
}

void require_solvable(const MediumParams& params, double gamma) {
  require_symmetric(params);
  const RegimeReport rep = classify(params);
  if (rep.stability_class != StabilityClass::weakly_stable) {
    std::ostringstream os;
    os << "the front equation is only solved in the weakly stable regime "
          "(v/c > sqrt(2)); this medium is "
       << to_string(rep.stability_class);
    throw RegimeError(rep.stability_class, os.str());
  }
  if (!(gamma >= 1.0) || !std::isfinite(gamma)) {
    throw DomainError("solving requires gamma >= 1");
  }
}

FrontSolution solve_front(const TransformedField& field,
                          const MediumParams& params,
                          const std::vector<double>& s_values) {
  require_solvable(params, field.gamma());

  FrontSolution out;
  out.grid = field.grid();
  out.gamma = field.gamma();
  out.params = params;
  out.f_hat = field.axes();
  out.g_hat = field.axes();
  out.g1_hat = field.axes();
  out.g2_hat = field.axes();
  out.sigma = field.axes();

  const std::size_t n_t = field.n_t();
  const std::size_t n_x1 = field.n_x1();
  for (std::size_t kt = 0; kt < n_t; ++kt) {
    for (std::size_t kx = 0; kx < n_x1; ++kx) {
      const Frequency freq = field.frequency(kt, kx);
      out.sigma(kt, kx) = sigma(freq, params);
      if (field.axes().is_nyquist(kt, kx)) continue;
      const FrontBin bin =
          solve_bin(field.plus(kt, kx), field.minus(kt, kx), field.h(), freq, params);
      out.f_hat(kt, kx) = bin.f_hat;
      out.g_hat(kt, kx) = bin.g;
      out.g1_hat(kt, kx) = bin.g1;
      out.g2_hat(kt, kx) = bin.g2;
    }
  }

  // Real forcing gives conjugate-symmetric spectra up to rounding; the
  // symmetry is imposed exactly so that the physical front is real.
  Spectrum sym = out.f_hat;
  for (std::size_t kt = 0; kt < n_t; ++kt) {
    for (std::size_t kx = 0; kx < n_x1; ++kx) {
      const Complex mirror =
          out.f_hat(out.f_hat.mirror_t(kt), out.f_hat.mirror_x1(kx));
      sym(kt, kx) = 0.5 * (out.f_hat(kt, kx) + std::conj(mirror));
    }
  }
  out.f_hat = std::move(sym);

  const std::vector<Complex> weighted = plain_inverse(out.f_hat);
  double max_re = 0.0;
  double max_im = 0.0;
  out.f_weighted.resize(weighted.size());
  out.f_phys.resize(weighted.size());
  const double dt = out.grid.dt();
  for (std::size_t it = 0; it < n_t; ++it) {
    const double w = std::exp(out.gamma * dt * static_cast<double>(it));
    for (std::size_t ix = 0; ix < n_x1; ++ix) {
      const std::size_t i = it * n_x1 + ix;
      max_re = std::max(max_re, std::abs(weighted[i].real()));
      max_im = std::max(max_im, std::abs(weighted[i].imag()));
      out.f_weighted[i] = weighted[i].real();
      out.f_phys[i] = w * weighted[i].real();
    }
  }
  out.imag_residual = max_re > 0.0 ? max_im / max_re : max_im;

  for (double s : s_values) out.norms[s] = sobolev_norm(out.f_hat, s, out.gamma);
  return out;
}

FrontSolution solve_front(const FieldGrid& field, const MediumParams& params,
                          double gamma, const std::vector<double>& s_values) {
  require_solvable(params, gamma);
  field.check();
  const TransformedField transformed(field, gamma);
  return solve_front(transformed, params, s_values);
}

ForcingNorms forcing_norm_sq(const TransformedField& field, double s) {
  const std::size_t n2 = field.grid().n_x2;
  std::vector<double> plus(n2);
  std::vector<double> minus(n2);
  for (std::size_t k = 0; k < n2; ++k) {
    plus[k] = sobolev_norm_sq(field.level(true, k), s, field.gamma());
    minus[k] = sobolev_norm_sq(field.level(false, k), s, field.gamma());
  }
  return {plain_integral(plus, field.h()), plain_integral(minus, field.h())};
}

EstimateConstants estimate_constants(const MediumParams& params,
                                     std::size_t n_polar, std::size_t n_azimuth,
                                     double radius) {
  require_solvable(params, 1.0);
  if (n_polar < 2 || n_azimuth < 4) throw DomainError("sample counts too small");
  if (!(radius > 0.0)) throw DomainError("neighbourhood radius must be positive");

  const double c = params.c;
  const double y2 = *classify(params).Y2;
  EstimateConstants out;
  out.radius = radius;
  out.C_ell = std::numeric_limits<double>::infinity();
  out.C_H = std::numeric_limits<double>::infinity();

  for (std::size_t i = 0; i <= n_polar; ++i) {
    const double alpha = 0.5 * std::numbers::pi * static_cast<double>(i) /
                         static_cast<double>(n_polar);
    const double gamma = std::sin(alpha);
    const double rho = std::cos(alpha);
    const std::size_t n_phi = i == n_polar ? 1 : n_azimuth;
    for (std::size_t j = 0; j < n_phi; ++j) {
      const double phi = 2.0 * std::numbers::pi * static_cast<double>(j) /
                         static_cast<double>(n_azimuth);
      Frequency f{gamma, rho * std::cos(phi), rho * std::sin(phi)};
      const double lambda = std::sqrt(f.lambda_sq());
      const double abs_sigma = std::abs(sigma(f, params));
      out.sigma_max = std::max(out.sigma_max, abs_sigma / (lambda * lambda));

      const Complex tau = f.tau();
      const double d_plus = std::abs(tau - Complex{0.0, c * y2 * f.eta});
      const double d_minus = std::abs(tau + Complex{0.0, c * y2 * f.eta});
      if (d_plus <= radius * lambda) {
        out.C_H = std::min(out.C_H, std::abs(factor_H(f, params, radius)) / lambda);
      } else if (d_minus <= radius * lambda) {
        // Sigma is even in eta, so the factor at the conjugate root is H at -eta.
        const Frequency g{f.gamma, f.delta, -f.eta};
        out.C_H = std::min(out.C_H, std::abs(factor_H(g, params, radius)) / lambda);
      } else {
        out.C_ell = std::min(out.C_ell, abs_sigma / (lambda * lambda));
      }
      ++out.samples;
    }
  }
  const double lo = std::min(out.C_ell, out.C_H);
  out.C = lo * lo;
  return out;
}

EstimateTable verify_estimate(const FieldGrid& field,
                              const MediumParams& params,
                              const std::vector<double>& gammas, double s,
                              const EstimateConstants& constants) {
  field.check();
  EstimateTable table;
  table.constants = constants;
  table.s = s;
  for (double gamma : gammas) {
    require_solvable(params, gamma);
    const TransformedField transformed(field, gamma);
    const FrontSolution sol = solve_front(transformed, params, {s + 1.0});

    EstimateRow row;
    row.gamma = gamma;
    row.f_norm_sq = sobolev_norm_sq(sol.f_hat, s + 1.0, gamma);
    row.g_norm_sq = sobolev_norm_sq(sol.g_hat, s, gamma);
    row.g1_norm_sq = sobolev_norm_sq(sol.g1_hat, s, gamma);
    row.g2_norm_sq = sobolev_norm_sq(sol.g2_hat, s, gamma);
    row.forcing = forcing_norm_sq(transformed, s);
    const double forcing = row.forcing.plus_sq + row.forcing.minus_sq;
    const double g3 = gamma * gamma * gamma;
    row.r = forcing > 0.0 ? g3 * row.f_norm_sq / forcing : 0.0;
    row.r_prime = row.g_norm_sq > 0.0
                      ? gamma * gamma * row.f_norm_sq / row.g_norm_sq
                      : 0.0;
    row.g1_ratio = row.forcing.plus_sq > 0.0
                       ? gamma * row.g1_norm_sq / row.forcing.plus_sq
                       : 0.0;
    row.g2_ratio = row.forcing.minus_sq > 0.0
                       ? gamma * row.g2_norm_sq / row.forcing.minus_sq
                       : 0.0;

    row.pointwise_margin = std::numeric_limits<double>::infinity();
    for (std::size_t kt = 0; kt < sol.f_hat.n_t(); ++kt) {
      for (std::size_t kx = 0; kx < sol.f_hat.n_x1(); ++kx) {
        const double f2 = std::norm(sol.f_hat(kt, kx));
        if (f2 == 0.0) continue;
        const double lam_sq = transformed.frequency(kt, kx).lambda_sq();
        const double lhs = constants.C * gamma * gamma * lam_sq * f2;
        row.pointwise_margin =
            std::min(row.pointwise_margin, std::norm(sol.g_hat(kt, kx)) / lhs);
        ++row.bins_checked;
      }
    }
    row.pointwise_ok = row.pointwise_margin >= 1.0;
    table.rows.push_back(row);
  }
  return table;
}

EstimateTable verify_estimate(const FieldGrid& field,
                              const MediumParams& params,
                              const std::vector<double>& gammas, double s) {
  return verify_estimate(field, params, gammas, s, estimate_constants(params));
}

double fit_power_law(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw DomainError("power-law fit needs at least two matching points");
  }
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) {
      throw DomainError("power-law fit needs positive data");
    }
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double n = static_cast<double>(x.size());
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0) throw DomainError("power-law fit needs distinct abscissae");
  return (n * sxy - sx * sy) / denom;
}

ProbeTable blowup_probe(const MediumParams& params, double eta0,
                        const std::vector<double>& gammas) {
  const RegimeReport rep = classify(params);
  if (rep.stability_class != StabilityClass::elliptic_unstable) {
    std::ostringstream os;
    os << "blowup_probe needs v/c < sqrt(2); this medium is "
       << to_string(rep.stability_class);
    throw RegimeError(rep.stability_class, os.str());
  }
  if (eta0 == 0.0 || !std::isfinite(eta0)) {
    throw DomainError("blowup_probe needs a finite eta0 != 0");
  }
  ProbeTable out;
  out.root = params.c * *rep.Y1 * std::abs(eta0);
  std::vector<double> dist;
  std::vector<double> vals;
  for (double g : gammas) {
    if (!(g > 0.0) || !std::isfinite(g)) throw DomainError("probe gammas must be positive");
    ProbeRow row;
    row.gamma = g;
    row.distance = g - out.root;
    row.abs_inv_sigma = 1.0 / std::abs(sigma({g, 0.0, eta0}, params));
    out.rows.push_back(row);
    dist.push_back(std::abs(row.distance));
    vals.push_back(row.abs_inv_sigma);
  }
  if (out.rows.size() >= 2) out.exponent = fit_power_law(dist, vals);
  return out;
}

}  // namespace vsheet
