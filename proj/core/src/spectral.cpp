#include "vsheet/spectral.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace vsheet {

namespace {

double signed_index(std::size_t k, std::size_t n) {
  // Bins above n/2 are negative frequencies; the Nyquist bin n/2 is taken
  // as negative as well.
  return k < (n + 1) / 2 ? static_cast<double>(k)
                         : static_cast<double>(k) - static_cast<double>(n);
}

void check_shape(std::size_t n_t, std::size_t n_x1, double L_t, double L_x1) {
  if (n_t == 0 || n_x1 == 0) throw DomainError("transform dimensions must be positive");
  if (!(L_t > 0.0) || !(L_x1 > 0.0)) throw DomainError("box lengths must be positive");
}

}  // namespace

Spectrum::Spectrum(std::size_t n_t, std::size_t n_x1, double L_t, double L_x1)
    : n_t_(n_t), n_x1_(n_x1), L_t_(L_t), L_x1_(L_x1), data_(n_t * n_x1) {
  check_shape(n_t, n_x1, L_t, L_x1);
}

double Spectrum::delta(std::size_t kt) const {
  return 2.0 * std::numbers::pi * signed_index(kt, n_t_) / L_t_;
}

double Spectrum::eta(std::size_t kx) const {
  return 2.0 * std::numbers::pi * signed_index(kx, n_x1_) / L_x1_;
}

bool Spectrum::is_nyquist(std::size_t kt, std::size_t kx) const {
  const bool t_nyq = n_t_ % 2 == 0 && kt == n_t_ / 2;
  const bool x_nyq = n_x1_ % 2 == 0 && kx == n_x1_ / 2;
  return t_nyq || x_nyq;
}

std::size_t Spectrum::mirror_t(std::size_t kt) const {
  return (n_t_ - kt) % n_t_;
}

std::size_t Spectrum::mirror_x1(std::size_t kx) const {
  return (n_x1_ - kx) % n_x1_;
}

double Spectrum::bin_area() const {
  return (2.0 * std::numbers::pi / L_t_) * (2.0 * std::numbers::pi / L_x1_);
}

struct Fft2d::Impl {
  std::size_t n = 0;
  fftw_complex* buf_in = nullptr;
  fftw_complex* buf_out = nullptr;
  fftw_plan fwd = nullptr;
  fftw_plan bwd = nullptr;

  Impl(std::size_t n_t, std::size_t n_x1) : n(n_t * n_x1) {
    buf_in = fftw_alloc_complex(n);
    buf_out = fftw_alloc_complex(n);
    // FFTW_ESTIMATE keeps the plan (and hence the rounding) deterministic.
    fwd = fftw_plan_dft_2d(static_cast<int>(n_t), static_cast<int>(n_x1),
                           buf_in, buf_out, FFTW_FORWARD, FFTW_ESTIMATE);
    bwd = fftw_plan_dft_2d(static_cast<int>(n_t), static_cast<int>(n_x1),
                           buf_in, buf_out, FFTW_BACKWARD, FFTW_ESTIMATE);
  }
  ~Impl() {
    fftw_destroy_plan(fwd);
    fftw_destroy_plan(bwd);
    fftw_free(buf_in);
    fftw_free(buf_out);
  }

  void run(fftw_plan plan, std::span<const Complex> in, std::span<Complex> out) {
    if (in.size() != n || out.size() != n) {
      throw DomainError("FFT input size does not match the plan");
    }
    std::copy(in.begin(), in.end(), reinterpret_cast<Complex*>(buf_in));
    fftw_execute(plan);
    const auto* res = reinterpret_cast<const Complex*>(buf_out);
    std::copy(res, res + n, out.begin());
  }
};

Fft2d::Fft2d(std::size_t n_t, std::size_t n_x1)
    : impl_(std::make_unique<Impl>(n_t, n_x1)) {}
Fft2d::~Fft2d() = default;
Fft2d::Fft2d(Fft2d&&) noexcept = default;
Fft2d& Fft2d::operator=(Fft2d&&) noexcept = default;

void Fft2d::forward(std::span<const Complex> in, std::span<Complex> out) {
  impl_->run(impl_->fwd, in, out);
}

void Fft2d::backward(std::span<const Complex> in, std::span<Complex> out) {
  impl_->run(impl_->bwd, in, out);
}

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

Spectrum weighted_forward(std::span<const double> samples, std::size_t n_t,
                          std::size_t n_x1, double L_t, double L_x1,
                          double gamma) {
  check_shape(n_t, n_x1, L_t, L_x1);
  if (samples.size() != n_t * n_x1) {
    throw DomainError("sample count does not match n_t * n_x1");
  }
  if (!(gamma >= 0.0)) throw DomainError("gamma must be non-negative");

  const double dt = L_t / static_cast<double>(n_t);
  const double dx = L_x1 / static_cast<double>(n_x1);
  std::vector<Complex> weighted(samples.size());
  for (std::size_t it = 0; it < n_t; ++it) {
    const double w = std::exp(-gamma * dt * static_cast<double>(it));
    for (std::size_t ix = 0; ix < n_x1; ++ix) {
      weighted[it * n_x1 + ix] = w * samples[it * n_x1 + ix];
    }
  }
  Spectrum out(n_t, n_x1, L_t, L_x1);
  Fft2d fft(n_t, n_x1);
  fft.forward(weighted, out.data());
  for (auto& z : out.data()) z *= dt * dx;
  return out;
}

std::vector<Complex> plain_inverse(const Spectrum& spectrum) {
  const std::size_t n_t = spectrum.n_t();
  const std::size_t n_x1 = spectrum.n_x1();
  std::vector<Complex> out(spectrum.size());
  Fft2d fft(n_t, n_x1);
  fft.backward(spectrum.data(), out);
  // Undo dt dx and the 1/N of the unnormalised backward transform.
  const double scale = 1.0 / (spectrum.L_t() * spectrum.L_x1());
  for (auto& z : out) z *= scale;
  return out;
}

std::vector<Complex> weighted_inverse(const Spectrum& spectrum, double gamma) {
  std::vector<Complex> out = plain_inverse(spectrum);
  const std::size_t n_t = spectrum.n_t();
  const std::size_t n_x1 = spectrum.n_x1();
  const double dt = spectrum.L_t() / static_cast<double>(n_t);
  for (std::size_t it = 0; it < n_t; ++it) {
    const double w = std::exp(gamma * dt * static_cast<double>(it));
    for (std::size_t ix = 0; ix < n_x1; ++ix) out[it * n_x1 + ix] *= w;
  }
  return out;
}

double sobolev_norm_sq(const Spectrum& v_hat, double s, double gamma) {
  double sum = 0.0;
  for (std::size_t kt = 0; kt < v_hat.n_t(); ++kt) {
    const double d = v_hat.delta(kt);
    for (std::size_t kx = 0; kx < v_hat.n_x1(); ++kx) {
      const double e = v_hat.eta(kx);
      const double lam_sq = gamma * gamma + d * d + e * e;
      const double a = std::norm(v_hat(kt, kx));
      if (a == 0.0) continue;
      sum += (s == 0.0 ? 1.0 : std::pow(lam_sq, s)) * a;
    }
  }
  const double two_pi = 2.0 * std::numbers::pi;
  return sum * v_hat.bin_area() / (two_pi * two_pi);
}

double sobolev_norm(const Spectrum& v_hat, double s, double gamma) {
  return std::sqrt(sobolev_norm_sq(v_hat, s, gamma));
}

}  // namespace vsheet
