#pragma once

// Composite product rules with an exactly integrated exponential kernel.
//
// On every panel of four intervals the sampled function is replaced by its
// quartic interpolant and multiplied by e^{-mu y}; the product is integrated
// in closed form.  For mu = 0 this is Boole's rule.  A remainder of one to
// three intervals is integrated against the quartic through the five nodes
// nearest the end of the range.  Arrays with three or four nodes fall back
// to the quadratic or cubic interpolant.

#include <cstddef>
#include <span>

#include "vsheet/types.hpp"

namespace vsheet {

/// Integral over [y_0, y_{n-1}] of e^{-mu (y - y_0)} f(y) for samples on a
/// uniform grid with spacing h.  Requires n >= 3 (n = 1 gives 0) and
/// Re mu >= 0.
[[nodiscard]] Complex exp_integral(std::span<const Complex> f, double h,
                                   Complex mu);

/// Integral over [y_lo, y_hi] of e^{-mu (y - y_lo)} f(y).  Nodes outside
/// [lo, hi] may be used to close a remainder panel.
[[nodiscard]] Complex exp_integral_forward(std::span<const Complex> f,
                                           std::size_t lo, std::size_t hi,
                                           double h, Complex mu);

/// Integral over [y_lo, y_hi] of e^{-mu (y_hi - y)} f(y).
[[nodiscard]] Complex exp_integral_backward(std::span<const Complex> f,
                                            std::size_t lo, std::size_t hi,
                                            double h, Complex mu);

/// The same rule with mu = 0 on real samples.
[[nodiscard]] double plain_integral(std::span<const double> f, double h);

}  // namespace vsheet
