#include "vsheet/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

namespace vsheet {

namespace {

constexpr int kMaxDegree = 4;
using Moments = std::array<Complex, kMaxDegree + 1>;

// G_j(z) = int_0^1 e^{-z u} u^j du for j = 0..4.
Moments unit_moments(Complex z) {
  Moments g{};
  if (std::abs(z) < 2.0) {
    for (int j = 0; j <= kMaxDegree; ++j) {
      Complex term{1.0, 0.0};
      Complex sum{0.0, 0.0};
      for (int k = 0; k < 45; ++k) {
        sum += term / static_cast<double>(j + k + 1);
        term *= -z / static_cast<double>(k + 1);
      }
      g[j] = sum;
    }
    return g;
  }
  const Complex e = std::exp(-z);
  g[0] = (1.0 - e) / z;
  for (int j = 1; j <= kMaxDegree; ++j) {
    g[j] = (static_cast<double>(j) * g[j - 1] - e) / z;
  }
  return g;
}

// m_j = int_0^w e^{-z u} u^j du.
Moments moments(Complex z, double w) {
  Moments g = unit_moments(w * z);
  double p = w;
  for (auto& x : g) {
    x *= p;
    p *= w;
  }
  return g;
}

// Weights of the interpolant through nodes d (in units of h) against the
// moments m.
std::array<Complex, kMaxDegree + 1> lagrange_weights(std::span<const double> d,
                                                     const Moments& m) {
  std::array<Complex, kMaxDegree + 1> w{};
  const std::size_t n = d.size();
  for (std::size_t k = 0; k < n; ++k) {
    std::array<double, kMaxDegree + 1> poly{};
    poly[0] = 1.0;
    std::size_t deg = 0;
    double denom = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      for (std::size_t j = deg + 1; j > 0; --j) {
        poly[j] = poly[j - 1] - d[i] * poly[j];
      }
      poly[0] = -d[i] * poly[0];
      ++deg;
      denom *= d[k] - d[i];
    }
    Complex s{0.0, 0.0};
    for (std::size_t j = 0; j <= deg; ++j) s += poly[j] * m[j];
    w[k] = s / denom;
  }
  return w;
}

// Integrates over local coordinate j in [0, count] with kernel e^{-z j};
// get(j) is valid for j in [j_min, j_max].
template <class Get>
Complex integrate(const Get& get, long count, long j_min, long j_max, double h,
                  Complex mu) {
  if (count == 0) return {0.0, 0.0};
  if (j_max - j_min < 2) {
    throw DomainError("exponential product rule needs at least three nodes");
  }
  if (mu.real() < 0.0) {
    throw DomainError("exponential product rule requires Re mu >= 0");
  }
  const long deg = std::min<long>(kMaxDegree, j_max - j_min);
  const Complex z = mu * h;

  std::array<double, kMaxDegree + 1> nodes{};
  for (long k = 0; k <= deg; ++k) nodes[k] = static_cast<double>(k);
  const std::span<const double> panel_nodes(nodes.data(), deg + 1);
  const auto wp = lagrange_weights(panel_nodes, moments(z, static_cast<double>(deg)));

  const Complex step = std::exp(-static_cast<double>(deg) * z);
  Complex scale{1.0, 0.0};
  Complex sum{0.0, 0.0};
  const long panels = count / deg;
  for (long p = 0; p < panels; ++p) {
    const long j = deg * p;
    Complex part{0.0, 0.0};
    for (long k = 0; k <= deg; ++k) part += wp[k] * get(j + k);
    sum += scale * part;
    scale *= step;
  }

  const long rest = count - panels * deg;
  if (rest > 0) {
    const long s = panels * deg;
    const long first = std::max(j_min, count - deg);
    for (long k = 0; k <= deg; ++k) nodes[k] = static_cast<double>(first + k - s);
    const auto w = lagrange_weights(panel_nodes, moments(z, static_cast<double>(rest)));
    Complex part{0.0, 0.0};
    for (long k = 0; k <= deg; ++k) part += w[k] * get(first + k);
    sum += std::exp(-z * static_cast<double>(s)) * part;
  }
  return h * sum;
}

void check_range(std::span<const Complex> f, std::size_t lo, std::size_t hi) {
  if (lo > hi || hi >= f.size()) {
    throw DomainError("integration range outside the sample array");
  }
}

}  // namespace

Complex exp_integral(std::span<const Complex> f, double h, Complex mu) {
  if (f.size() <= 1) return {0.0, 0.0};
  return exp_integral_forward(f, 0, f.size() - 1, h, mu);
}

Complex exp_integral_forward(std::span<const Complex> f, std::size_t lo,
                             std::size_t hi, double h, Complex mu) {
  check_range(f, lo, hi);
  const long base = static_cast<long>(lo);
  auto get = [&](long j) { return f[static_cast<std::size_t>(base + j)]; };
  return integrate(get, static_cast<long>(hi - lo), -base,
                   static_cast<long>(f.size()) - 1 - base, h, mu);
}

Complex exp_integral_backward(std::span<const Complex> f, std::size_t lo,
                              std::size_t hi, double h, Complex mu) {
  check_range(f, lo, hi);
  const long base = static_cast<long>(hi);
  auto get = [&](long j) { return f[static_cast<std::size_t>(base - j)]; };
  return integrate(get, static_cast<long>(hi - lo),
                   base - (static_cast<long>(f.size()) - 1), base, h, mu);
}

double plain_integral(std::span<const double> f, double h) {
  std::vector<Complex> c(f.begin(), f.end());
  return exp_integral(c, h, Complex{0.0, 0.0}).real();
}

}  // namespace vsheet
