#pragma once

// Exponentially weighted Fourier transforms in (t, x1) on a periodic box.
//
// The forward transform approximates the continuous transform
//   u^(delta, eta) = int int e^{-i (delta t + eta x1)} e^{-gamma t} u(t, x1) dt dx1
// by dt dx1 times the DFT, so that the discrete Plancherel identity reads
//   (1/(2 pi)^2) sum |u^|^2 d_delta d_eta = dt dx1 sum |e^{-gamma t} u|^2.

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "vsheet/types.hpp"

namespace vsheet {

/// Complex values on the (delta, eta) frequency grid of an n_t x n_x1 box,
/// stored row-major in (k_t, k_x1).
class Spectrum {
 public:
  Spectrum() = default;
  Spectrum(std::size_t n_t, std::size_t n_x1, double L_t, double L_x1);

  [[nodiscard]] std::size_t n_t() const { return n_t_; }
  [[nodiscard]] std::size_t n_x1() const { return n_x1_; }
  [[nodiscard]] double L_t() const { return L_t_; }
  [[nodiscard]] double L_x1() const { return L_x1_; }
  [[nodiscard]] std::size_t size() const { return data_.size(); }

  Complex& operator()(std::size_t kt, std::size_t kx) {
    return data_[kt * n_x1_ + kx];
  }
  const Complex& operator()(std::size_t kt, std::size_t kx) const {
    return data_[kt * n_x1_ + kx];
  }

  /// Signed angular frequency of bin kt; the Nyquist bin maps to -pi/dt.
  [[nodiscard]] double delta(std::size_t kt) const;
  [[nodiscard]] double eta(std::size_t kx) const;
  [[nodiscard]] bool is_nyquist(std::size_t kt, std::size_t kx) const;
  /// Index of the bin holding frequency (-delta, -eta).
  [[nodiscard]] std::size_t mirror_t(std::size_t kt) const;
  [[nodiscard]] std::size_t mirror_x1(std::size_t kx) const;

  /// d_delta d_eta = (2 pi / L_t) (2 pi / L_x1).
  [[nodiscard]] double bin_area() const;

  [[nodiscard]] std::span<Complex> data() { return data_; }
  [[nodiscard]] std::span<const Complex> data() const { return data_; }

 private:
  std::size_t n_t_ = 0;
  std::size_t n_x1_ = 0;
  double L_t_ = 0.0;
  double L_x1_ = 0.0;
  std::vector<Complex> data_;
};

/// Reusable 2-D FFT of fixed shape.  Not thread safe.
class Fft2d {
 public:
  Fft2d(std::size_t n_t, std::size_t n_x1);
  ~Fft2d();
  Fft2d(const Fft2d&) = delete;
  Fft2d& operator=(const Fft2d&) = delete;
  Fft2d(Fft2d&&) noexcept;
  Fft2d& operator=(Fft2d&&) noexcept;

  /// Unnormalised forward (e^{-i...}) transform.
  void forward(std::span<const Complex> in, std::span<Complex> out);
  /// Unnormalised backward (e^{+i...}) transform.
  void backward(std::span<const Complex> in, std::span<Complex> out);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

[[nodiscard]] bool is_power_of_two(std::size_t n);

/// Multiplies samples (row-major in (t, x1), t_j = j L_t / n_t) by
/// e^{-gamma t} and applies the scaled 2-D DFT.
[[nodiscard]] Spectrum weighted_forward(std::span<const double> samples,
                                        std::size_t n_t, std::size_t n_x1,
                                        double L_t, double L_x1, double gamma);

/// Inverse of weighted_forward, including the e^{gamma t} factor.  The
/// result is complex; its imaginary part measures the conjugate asymmetry of
/// the input spectrum.
[[nodiscard]] std::vector<Complex> weighted_inverse(const Spectrum& spectrum,
                                                    double gamma);

/// Inverse transform without the e^{gamma t} factor (the weighted function).
[[nodiscard]] std::vector<Complex> plain_inverse(const Spectrum& spectrum);

/// (1/(2 pi)^2) sum Lambda^{2s} |v^|^2 d_delta d_eta, Lambda^2 = gamma^2 + delta^2 + eta^2.
[[nodiscard]] double sobolev_norm_sq(const Spectrum& v_hat, double s,
                                     double gamma);

/// Square root of sobolev_norm_sq.
[[nodiscard]] double sobolev_norm(const Spectrum& v_hat, double s,
                                  double gamma);

}  // namespace vsheet
