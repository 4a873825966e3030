#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "vsheet/symbol.hpp"

using vsheet::Complex;
using vsheet::Frequency;
using vsheet::MediumParams;

namespace {

const Complex kI{0.0, 1.0};

double rel_err(Complex a, Complex b) {
  const double s = std::max(std::abs(a), std::abs(b));
  return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

// Frozen from a 40-digit evaluation of the closed forms; the bisection
// oracles below reproduce them independently.
constexpr double kY0_v2 = 3.0204479180442195716;
constexpr double kY2_v2 = 0.93642638492427126302;
constexpr double kY1_v1 = 0.48586827175664567818;
constexpr double kY2_v3 = 1.9792012201142612248;
constexpr double kY2_v15 = 0.2961795736232002006;
constexpr double kY1_v05 = 0.40523272618718129489;

}  // namespace

TEST_SUITE("complex_sqrt_pos") {
  TEST_CASE("documented values") {
    CHECK(vsheet::complex_sqrt_pos(1.0, 0.0) == Complex{1.0, 0.0});
    const Complex r = vsheet::complex_sqrt_pos(0.0, 2.0);
    CHECK(r.real() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(r.imag() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(vsheet::complex_sqrt_pos(-1.0, 0.0) == Complex{0.0, 1.0});
    CHECK(vsheet::complex_sqrt_pos(0.0, 0.0) == Complex{0.0, 0.0});
  }

  TEST_CASE("squares back and carries the sign of b on the real part") {
    oracle::FrequencySampler rng(11);
    for (int i = 0; i < 20000; ++i) {
      const double a = rng.uniform(-1.0, 1.0) * rng.log_uniform(1e-8, 1e8);
      const double b = rng.uniform(-1.0, 1.0) * rng.log_uniform(1e-8, 1e8);
      const Complex r = vsheet::complex_sqrt_pos(a, b);
      REQUIRE(rel_err(r * r, Complex{a, b}) <= 1e-14);
      REQUIRE(r.imag() >= 0.0);
      REQUIRE((r.real() < 0.0) == (b < 0.0));
    }
  }
}

TEST_SUITE("mu") {
  TEST_CASE("eta = 0 gives tau / c") {
    CHECK(vsheet::mu({1.0, 0.0, 0.0}, 2.0, 1.0) == Complex{1.0, 0.0});
    CHECK(vsheet::mu({0.0, 3.0, 0.0}, 2.0, 2.0) == Complex{0.0, 1.5});
  }

  TEST_CASE("boundary values at tau = 0 for v = 2") {
    const Complex plus = vsheet::mu({0.0, 0.0, 1.0}, 2.0, 1.0);
    const Complex minus = vsheet::mu({0.0, 0.0, 1.0}, -2.0, 1.0);
    CHECK(plus.real() == 0.0);
    CHECK(plus.imag() == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));
    CHECK(minus.imag() == doctest::Approx(-std::sqrt(3.0)).epsilon(1e-15));
    CHECK(plus + minus == Complex{0.0, 0.0});
    CHECK(std::abs(plus * plus - Complex{-3.0, 0.0}) < 1e-14);
  }

  TEST_CASE("rejects the origin") {
    CHECK_THROWS_AS((void)vsheet::mu({0.0, 0.0, 0.0}, 1.0, 1.0), vsheet::DomainError);
    CHECK_THROWS_AS((void)vsheet::mu({-1.0, 0.0, 1.0}, 1.0, 1.0), vsheet::DomainError);
    CHECK_THROWS_AS((void)vsheet::mu({1.0, 0.0, 1.0}, 1.0, 0.0), vsheet::DomainError);
  }

  TEST_CASE("matches the principal square root for gamma > 0") {
    oracle::FrequencySampler rng(3);
    for (int i = 0; i < 20000; ++i) {
      const Frequency f{rng.log_uniform(1e-3, 1e3), rng.uniform(-50, 50),
                        rng.uniform(-50, 50)};
      const double v1 = rng.uniform(-4, 4);
      const double c = rng.log_uniform(0.1, 10);
      REQUIRE(rel_err(vsheet::mu(f, v1, c), oracle::mu(f.tau(), f.eta, v1, c)) <= 1e-12);
    }
  }

  TEST_CASE("boundary values match the limit from gamma > 0") {
    oracle::FrequencySampler rng(5);
    for (int i = 0; i < 5000; ++i) {
      const Frequency f{0.0, rng.uniform(-10, 10), rng.uniform(-10, 10)};
      const double v1 = rng.uniform(-3, 3);
      vsheet::BranchCase branch{};
      const Complex m = vsheet::mu(f, v1, 1.0, branch);
      const Complex ref = oracle::mu({oracle::kTinyGamma, f.delta}, f.eta, v1, 1.0);
      REQUIRE(std::abs(m - ref) <= 1e-12 * std::max(1.0, std::abs(ref)));
      REQUIRE(branch != vsheet::BranchCase::interior);
    }
  }

  TEST_CASE("branch metadata") {
    vsheet::BranchCase b{};
    (void)vsheet::mu({1.0, 0.0, 1.0}, 2.0, 1.0, b);
    CHECK(b == vsheet::BranchCase::interior);
    (void)vsheet::mu({0.0, 0.0, 1.0}, 0.5, 1.0, b);
    CHECK(b == vsheet::BranchCase::boundary_real);
    (void)vsheet::mu({0.0, -3.0, 1.0}, 2.0, 1.0, b);
    CHECK(b == vsheet::BranchCase::boundary_zero);
    (void)vsheet::mu({0.0, 0.0, 1.0}, 2.0, 1.0, b);
    CHECK(b == vsheet::BranchCase::boundary_imag_pos);
    (void)vsheet::mu({0.0, 0.0, 1.0}, -2.0, 1.0, b);
    CHECK(b == vsheet::BranchCase::boundary_imag_neg);
  }
}

TEST_SUITE("mu_pair") {
  TEST_CASE("real parts bounded below by gamma / (sqrt(2) c)") {
    const auto r = vsheet::mu_pair({1.0, 0.3, 0.7}, MediumParams::symmetric(1.0, 2.0));
    CHECK(r.mu_plus.real() > 1.0 / std::numbers::sqrt2);
    CHECK(r.mu_minus.real() > 1.0 / std::numbers::sqrt2);
  }

  TEST_CASE("sum vanishes at tau = 0 for v > c") {
    for (double eta : {-2.0, -0.5, 0.25, 3.0}) {
      const auto r = vsheet::mu_pair({0.0, 0.0, eta}, MediumParams::symmetric(1.0, 2.0));
      CHECK(std::abs(r.mu_plus + r.mu_minus) == 0.0);
    }
  }

  TEST_CASE("eta = 0 gives equal roots") {
    const Frequency f{0.4, -1.3, 0.0};
    const auto r = vsheet::mu_pair(f, MediumParams::symmetric(2.0, 3.0));
    CHECK(r.mu_plus == r.mu_minus);
    CHECK(rel_err(r.mu_plus, f.tau() / 2.0) == 0.0);
  }
}

TEST_SUITE("ratio_sq") {
  const MediumParams v2 = MediumParams::symmetric(1.0, 2.0);

  TEST_CASE("continuous extension at tau = 0") {
    CHECK(vsheet::ratio_sq({0.0, 0.0, 1.0}, v2).real() == doctest::Approx(0.1875).epsilon(1e-15));
    CHECK(std::abs(vsheet::ratio_sq({0.0, 0.0, 1.0}, MediumParams::symmetric(1.0, 1.0))) == 0.0);
  }

  TEST_CASE("limit along gamma -> 0 approaches the extension") {
    double prev = 1.0;
    for (double g : {1e-2, 1e-4, 1e-6}) {
      const double err = std::abs(vsheet::ratio_sq({g, 0.0, 1.0}, v2) - 0.1875);
      CHECK(err < prev);
      prev = err;
    }
    CHECK(prev < 1e-5);
  }

  TEST_CASE("eta = 0 gives one quarter") {
    CHECK(vsheet::ratio_sq({1.0, 2.0, 0.0}, v2) == Complex{0.25, 0.0});
  }

  TEST_CASE("subsonic tau = 0 is evaluated directly") {
    const Complex r = vsheet::ratio_sq({0.0, 0.0, 1.0}, MediumParams::symmetric(1.0, 0.5));
    CHECK(std::abs(r) == 0.0);
  }

  TEST_CASE("difference form is used where the sum is small") {
    // Near tau = 0, v > c, the direct quotient divides two small numbers.
    const Frequency f{1e-9, 1e-9, 1.0};
    const Complex ref = [&] {
      const Complex s = oracle::mu(f.tau(), 1.0, 2.0, 1.0) + oracle::mu(f.tau(), 1.0, -2.0, 1.0);
      return (f.tau() / s) * (f.tau() / s);
    }();
    CHECK(rel_err(vsheet::ratio_sq(f, v2), ref) < 1e-6);
    CHECK(std::abs(vsheet::ratio_sq(f, v2) - 0.1875) < 1e-6);
  }
}

TEST_SUITE("sigma") {
  const MediumParams v2 = MediumParams::symmetric(1.0, 2.0);

  TEST_CASE("value at tau = 0") {
    const Complex s = vsheet::sigma({0.0, 0.0, 1.0}, v2);
    CHECK(s.real() == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(s.imag() == 0.0);
    const Complex f = vsheet::sigma_factored({0.0, 0.0, 1.0}, v2);
    CHECK(f.real() == doctest::Approx(2.0).epsilon(1e-14));
  }

  TEST_CASE("vanishes at the neutral root") {
    const double y2 = std::sqrt(5.0 - std::sqrt(17.0));
    CHECK(std::abs(vsheet::sigma({0.0, y2, 1.0}, v2)) < 1e-10);
    CHECK(std::abs(vsheet::sigma({0.0, -y2, 1.0}, v2)) < 1e-10);
  }

  TEST_CASE("eta = 0 gives tau squared") {
    CHECK(vsheet::sigma({1.0, 0.0, 0.0}, v2) == Complex{1.0, 0.0});
    const Frequency f{0.0, 2.0, 0.0};
    CHECK(vsheet::sigma(f, v2) == f.tau() * f.tau());
    CHECK(vsheet::sigma_factored(f, v2) == f.tau() * f.tau());
  }

  TEST_CASE("agrees with the factored and difference forms and the oracle") {
    oracle::FrequencySampler rng(17);
    for (double m : {0.5, 1.0, 1.2, 1.5, 2.0, 3.0}) {
      const MediumParams p = MediumParams::symmetric(1.3, 1.3 * m);
      for (int i = 0; i < 2000; ++i) {
        const Frequency f{rng.log_uniform(1e-3, 1e2), rng.uniform(-20, 20), rng.uniform(-20, 20)};
        const Complex s = vsheet::sigma(f, p);
        const double lam2 = f.lambda_sq();
        REQUIRE(std::abs(s - vsheet::sigma_factored(f, p)) <= 1e-12 * lam2);
        REQUIRE(std::abs(s - vsheet::sigma_difference_form(f, p)) <= 1e-11 * lam2);
        REQUIRE(std::abs(s - oracle::sigma(f.tau(), f.eta, p.v(), p.c)) <= 1e-11 * lam2);
      }
    }
  }

  TEST_CASE("sigma at gamma = 0 matches the limit from gamma > 0") {
    oracle::FrequencySampler rng(23);
    for (int i = 0; i < 2000; ++i) {
      const Frequency f{0.0, rng.uniform(-5, 5), rng.uniform(-5, 5)};
      if (f.lambda_sq() < 1e-6) continue;
      const Complex ref = oracle::sigma_boundary(f.delta, f.eta, 2.0, 1.0);
      const Complex s = vsheet::sigma(f, v2);
      // Near tau = 0 the oracle's ratio loses digits; the factored form
      // does not.
      REQUIRE(std::abs(s - ref) <= 1e-10 * f.lambda_sq());
    }
  }

  TEST_CASE("general velocities reduce to the symmetric case with shifted tau") {
    oracle::FrequencySampler rng(29);
    const MediumParams g = MediumParams::general(1.0, 3.0, -1.0);  // w1 = 1, V1 = 2
    for (int i = 0; i < 500; ++i) {
      const Frequency f{rng.log_uniform(1e-2, 10), rng.uniform(-5, 5), rng.uniform(-5, 5)};
      const Frequency shifted{f.gamma, f.delta + g.w1() * f.eta, f.eta};
      const Complex a = vsheet::sigma(f, g);
      const Complex b = vsheet::sigma(shifted, MediumParams::symmetric(1.0, 2.0));
      REQUIRE(std::abs(a - b) <= 1e-12 * f.lambda_sq() * 10.0);
      REQUIRE(std::abs(a - vsheet::sigma_factored(f, g)) <= 1e-11 * f.lambda_sq() * 10.0);
      const auto r = vsheet::mu_pair(f, g);
      REQUIRE(rel_err(r.mu_plus, oracle::mu(f.tau(), f.eta, 3.0, 1.0)) < 1e-12);
      REQUIRE(rel_err(r.mu_minus, oracle::mu(f.tau(), f.eta, -1.0, 1.0)) < 1e-12);
    }
  }
}

TEST_SUITE("classify") {
  TEST_CASE("supersonic, weakly stable") {
    const auto r = vsheet::classify(MediumParams::symmetric(1.0, 2.0));
    CHECK(r.mach_class == vsheet::MachClass::supersonic);
    CHECK(r.stability_class == vsheet::StabilityClass::weakly_stable);
    CHECK(r.Y0 == doctest::Approx(kY0_v2).epsilon(1e-14));
    REQUIRE(r.Y2.has_value());
    CHECK(*r.Y2 == doctest::Approx(kY2_v2).epsilon(1e-14));
    CHECK_FALSE(r.Y1.has_value());
    CHECK(r.Y0 > 2.0 + 1.0);
  }

  TEST_CASE("sonic, elliptic") {
    const auto r = vsheet::classify(MediumParams::symmetric(1.0, 1.0));
    CHECK(r.mach_class == vsheet::MachClass::sonic);
    CHECK(r.stability_class == vsheet::StabilityClass::elliptic_unstable);
    REQUIRE(r.Y1.has_value());
    CHECK(*r.Y1 == doctest::Approx(kY1_v1).epsilon(1e-14));
    CHECK(*r.Y1 == doctest::Approx(std::sqrt(-2.0 + std::sqrt(5.0))).epsilon(1e-14));
  }

  TEST_CASE("transition has no roots") {
    const auto r = vsheet::classify(MediumParams::symmetric(1.0, std::numbers::sqrt2));
    CHECK(r.stability_class == vsheet::StabilityClass::transition);
    CHECK_FALSE(r.Y1.has_value());
    CHECK_FALSE(r.Y2.has_value());
    CHECK_THROWS_AS((void)vsheet::symbol_roots(MediumParams::symmetric(1.0, std::numbers::sqrt2), 1.0),
                    vsheet::RegimeError);
  }

  TEST_CASE("threshold tolerance is relative") {
    const double s2 = std::numbers::sqrt2;
    CHECK(vsheet::classify(MediumParams::symmetric(2.0, 2.0 * s2 * (1 + 1e-13))).stability_class ==
          vsheet::StabilityClass::transition);
    CHECK(vsheet::classify(MediumParams::symmetric(2.0, 2.0 * s2 * (1 + 1e-9))).stability_class ==
          vsheet::StabilityClass::weakly_stable);
    CHECK(vsheet::classify(MediumParams::symmetric(3.0, 3.0 * (1 - 1e-13))).mach_class ==
          vsheet::MachClass::sonic);
  }

  TEST_CASE("Y0 exceeds v/c + 1 and the roots vary continuously") {
    for (double m = 0.05; m < 5.0; m += 0.05) {
      const auto r = vsheet::classify(MediumParams::symmetric(1.0, m));
      CHECK(r.Y0 > m + 1.0);
    }
  }

  TEST_CASE("rejects invalid media") {
    CHECK_THROWS_AS((void)vsheet::classify(MediumParams::symmetric(1.0, 0.0)), vsheet::DomainError);
    CHECK_THROWS_AS((void)vsheet::classify(MediumParams::symmetric(0.0, 1.0)), vsheet::DomainError);
    CHECK_THROWS_AS((void)vsheet::classify(MediumParams::symmetric(-1.0, 1.0)), vsheet::DomainError);
    CHECK_THROWS_AS((void)vsheet::classify(MediumParams::general(1.0, 3.0, -1.0)),
                    vsheet::DomainError);
  }
}

TEST_SUITE("symbol_roots") {
  TEST_CASE("bisection oracle reproduces the frozen constants") {
    CHECK(oracle::neutral_root(2.0, 1.0) == doctest::Approx(kY2_v2).epsilon(1e-13));
    CHECK(oracle::neutral_root(3.0, 1.0) == doctest::Approx(kY2_v3).epsilon(1e-13));
    CHECK(oracle::neutral_root(1.5, 1.0) == doctest::Approx(kY2_v15).epsilon(1e-13));
    CHECK(oracle::unstable_root(1.0, 1.0) == doctest::Approx(kY1_v1).epsilon(1e-13));
    CHECK(oracle::unstable_root(0.5, 1.0) == doctest::Approx(kY1_v05).epsilon(1e-13));
    CHECK(oracle::unstable_root(1.2, 1.0) == doctest::Approx(0.4).epsilon(1e-13));
  }

  TEST_CASE("weakly stable: pair of imaginary roots") {
    const auto roots = vsheet::symbol_roots(MediumParams::symmetric(1.0, 2.0), 1.0);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].real() == 0.0);
    CHECK(roots[0].imag() == doctest::Approx(kY2_v2).epsilon(1e-14));
    CHECK(roots[1].imag() == doctest::Approx(-kY2_v2).epsilon(1e-14));
  }

  TEST_CASE("elliptic: one real root using |eta|") {
    const MediumParams p = MediumParams::symmetric(1.0, 1.0);
    const auto roots = vsheet::symbol_roots(p, -3.0);
    REQUIRE(roots.size() == 1);
    CHECK(roots[0].real() == doctest::Approx(3.0 * kY1_v1).epsilon(1e-14));
    CHECK(roots[0].imag() == 0.0);
  }

  TEST_CASE("returned roots annihilate sigma") {
    for (double m : {0.5, 1.0, 1.2, 1.5, 2.0, 3.0}) {
      const MediumParams p = MediumParams::symmetric(2.0, 2.0 * m);
      for (double eta : {-2.5, -1.0, 0.3, 4.0}) {
        for (Complex t : vsheet::symbol_roots(p, eta)) {
          const Frequency f{t.real(), t.imag(), eta};
          CHECK(std::abs(vsheet::sigma(f, p)) <= 1e-10 * f.lambda_sq());
        }
      }
    }
  }

  TEST_CASE("the Y0 candidates are not roots") {
    const MediumParams p = MediumParams::symmetric(1.0, 2.0);
    for (double sgn : {1.0, -1.0}) {
      const Frequency f{0.0, sgn * kY0_v2, 1.0};
      CHECK(std::abs(vsheet::sigma(f, p)) > 0.5);
      const auto r = vsheet::mu_pair(f, p);
      CHECK((r.mu_plus * r.mu_minus).real() < 0.0);
    }
  }

  TEST_CASE("rejects eta = 0") {
    CHECK_THROWS_AS((void)vsheet::symbol_roots(MediumParams::symmetric(1.0, 2.0), 0.0),
                    vsheet::DomainError);
  }
}

TEST_SUITE("factor_H") {
  const MediumParams v2 = MediumParams::symmetric(1.0, 2.0);

  TEST_CASE("value at the exact root matches the limit from gamma > 0") {
    const Complex at_root = vsheet::factor_H({0.0, kY2_v2, 1.0}, v2);
    CHECK(std::abs(at_root) > 0.1);
    // Difference quotient along gamma with the oracle symbol.
    const double g = 1e-6;
    const Complex dq = oracle::sigma_product({g, kY2_v2}, 1.0, 2.0, 1.0) / Complex{g, 0.0};
    CHECK(rel_err(at_root, dq) < 1e-5);
  }

  TEST_CASE("continuity near the root") {
    const Complex at_root = vsheet::factor_H({0.0, kY2_v2, 1.0}, v2);
    for (Frequency f : {Frequency{1e-3, kY2_v2, 1.0}, Frequency{0.0, kY2_v2 + 1e-3, 1.0},
                        Frequency{7e-4, kY2_v2 - 7e-4, 1.0}}) {
      CHECK(rel_err(vsheet::factor_H(f, v2), at_root) < 1e-2);
    }
  }

  TEST_CASE("homogeneous of degree one") {
    const Frequency f{0.05, 0.9, 1.0};
    CHECK(rel_err(vsheet::factor_H(f.scaled(2.0), v2), 2.0 * vsheet::factor_H(f, v2)) < 1e-12);
    const Frequency r{0.0, kY2_v2, 1.0};
    CHECK(rel_err(vsheet::factor_H(r.scaled(2.0), v2), 2.0 * vsheet::factor_H(r, v2)) < 1e-14);
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS((void)vsheet::factor_H({0.0, kY1_v1, 1.0}, MediumParams::symmetric(1.0, 1.0)),
                    vsheet::RegimeError);
    CHECK_THROWS_AS((void)vsheet::factor_H({1.0, 0.0, 1.0}, v2), vsheet::DomainError);
  }
}

TEST_SUITE("sign tables") {
  TEST_CASE("documented rows") {
    auto check = [](double v, double x, int table, int row) {
      const MediumParams p = MediumParams::symmetric(1.0, v);
      const auto s = vsheet::sign_table_check({0.0, x, 1.0}, p);
      CHECK(s.matches);
      CHECK(s.expected.table == table);
      CHECK(s.expected.row == row);
      return s;
    };
    const auto a = check(2.0, -3.5, 3, 1);
    CHECK(a.mu_plus_kind == vsheet::RootKind::imaginary);
    CHECK(a.mu_minus_kind == vsheet::RootKind::imaginary);
    CHECK(a.re_product_sign == -1);
    const auto b = check(0.5, 0.0, 4, 3);
    CHECK(b.mu_plus_kind == vsheet::RootKind::positive_real);
    CHECK(b.mu_minus_kind == vsheet::RootKind::positive_real);
    CHECK(b.re_product_sign == 1);
    const auto c = check(1.0, 1.0, 5, 3);
    CHECK(c.mu_plus_kind == vsheet::RootKind::imaginary);
    CHECK(c.mu_minus_kind == vsheet::RootKind::positive_real);
    CHECK(c.re_product_sign == 0);
    // Supersonic middle row at delta = 0: the sum vanishes.
    const auto d = check(2.0, 0.0, 3, 3);
    CHECK_FALSE(d.sum_nonzero);
  }

  TEST_CASE("endpoints are rejected") {
    const MediumParams p = MediumParams::symmetric(1.0, 2.0);
    for (double x : {-3.0, -1.0, 1.0, 3.0}) {
      CHECK_THROWS_AS((void)vsheet::sign_table_check({0.0, x, 1.0}, p), vsheet::DomainError);
    }
    CHECK_THROWS_AS((void)vsheet::sign_table_check({0.0, 0.0, 1.0}, MediumParams::symmetric(1.0, 1.0)),
                    vsheet::DomainError);
    CHECK_THROWS_AS((void)vsheet::sign_table_check({1.0, 0.5, 1.0}, p), vsheet::DomainError);
  }
}

TEST_SUITE("symbol properties") {
  TEST_CASE("square residual and real-part bound") {
    oracle::FrequencySampler rng(41);
    for (int i = 0; i < 20000; ++i) {
      const double c = rng.log_uniform(0.2, 5.0);
      const double v = c * rng.uniform(0.1, 4.0);
      const Frequency f{rng.log_uniform(1e-3, 1e3), rng.uniform(-1e3, 1e3), rng.uniform(-1e3, 1e3)};
      for (double v1 : {v, -v}) {
        const Complex m = vsheet::mu(f, v1, c);
        const Complex a = (f.tau() + Complex{0.0, v1 * f.eta}) / c;
        REQUIRE(std::abs(m * m - (a * a + f.eta * f.eta)) <= 1e-13 * (std::norm(a) + f.eta * f.eta));
        REQUIRE(m.real() > 0.0);
        REQUIRE(m.real() >= f.gamma / (std::numbers::sqrt2 * c));
      }
    }
  }

  TEST_CASE("homogeneity of mu and sigma") {
    oracle::FrequencySampler rng(43);
    const MediumParams p = MediumParams::symmetric(1.0, 2.0);
    for (int i = 0; i < 1000; ++i) {
      const Frequency f{rng.uniform(0.0, 3.0), rng.uniform(-3, 3), rng.uniform(-3, 3)};
      for (double k : {0.5, 2.0, 10.0}) {
        const auto r = vsheet::mu_pair(f, p);
        const auto rk = vsheet::mu_pair(f.scaled(k), p);
        REQUIRE(rel_err(rk.mu_plus, k * r.mu_plus) <= 1e-12);
        REQUIRE(rel_err(rk.mu_minus, k * r.mu_minus) <= 1e-12);
        const Complex s = vsheet::sigma(f, p);
        REQUIRE(std::abs(vsheet::sigma(f.scaled(k), p) - k * k * s) <= 1e-12 * k * k * f.lambda_sq());
      }
    }
  }

  TEST_CASE("boundary continuity is first order in gamma") {
    const MediumParams p = MediumParams::symmetric(1.0, 2.0);
    for (Frequency base : {Frequency{0.0, 0.5, 1.0}, Frequency{0.0, -4.0, 1.0}, Frequency{0.0, 2.0, -1.0}}) {
      const auto r0 = vsheet::mu_pair(base, p);
      double prev = 0.0;
      for (double g : {1e-2, 1e-4, 1e-6}) {
        const auto r = vsheet::mu_pair({g, base.delta, base.eta}, p);
        const double err = std::abs(r.mu_plus - r0.mu_plus) + std::abs(r.mu_minus - r0.mu_minus);
        if (prev > 0.0) CHECK(prev / err == doctest::Approx(100.0).epsilon(0.05));
        prev = err;
      }
    }
  }

  TEST_CASE("vanishing loci") {
    for (double v : {0.5, 2.0}) {
      const MediumParams p = MediumParams::symmetric(1.0, v);
      for (double eta : {-2.0, 1.0}) {
        for (double sgn : {1.0, -1.0}) {
          const double d = -(v + sgn) * eta;
          CHECK(std::abs(vsheet::mu({0.0, d, eta}, v, 1.0)) <= 1e-8 * std::abs(eta));
          CHECK(std::abs(vsheet::mu({0.0, -d, eta}, -v, 1.0)) <= 1e-8 * std::abs(eta));
        }
      }
    }
  }

  TEST_CASE("coincidence loci") {
    CHECK(vsheet::mu_pair({0.0, 0.0, 1.0}, MediumParams::symmetric(1.0, 0.5)).mu_plus ==
          vsheet::mu_pair({0.0, 0.0, 1.0}, MediumParams::symmetric(1.0, 0.5)).mu_minus);
    const auto r = vsheet::mu_pair({0.0, 0.0, 1.0}, MediumParams::symmetric(1.0, 1.0));
    CHECK(std::abs(r.mu_plus - r.mu_minus) < 1e-15);
    const auto s = vsheet::mu_pair({0.1, 0.0, 1.0}, MediumParams::symmetric(1.0, 0.5));
    CHECK(std::abs(s.mu_plus - s.mu_minus) > 1e-3);
  }

  TEST_CASE("sum of roots near tau = 0 grows linearly in gamma") {
    for (double m : {1.5, 2.0, 3.0}) {
      const MediumParams p = MediumParams::symmetric(1.0, m);
      const double slope = 2.0 * m / std::sqrt(m * m - 1.0);
      for (double g : {1e-4, 1e-6}) {
        const auto r = vsheet::mu_pair({g, 0.0, 1.0}, p);
        CHECK((r.mu_plus + r.mu_minus).real() / g == doctest::Approx(slope).epsilon(1e-3));
      }
    }
  }

  TEST_CASE("elliptic symbols do not vanish on the imaginary axis") {
    for (double m : {0.5, 1.0, 1.2}) {
      const MediumParams p = MediumParams::symmetric(1.0, m);
      double lo = 1e300;
      for (double eta : {-1.0, 1.0}) {
        for (int i = 0; i <= 4000; ++i) {
          const double d = -10.0 + 20.0 * i / 4000.0;
          lo = std::min(lo, std::abs(vsheet::sigma({0.0, d, eta}, p)));
        }
      }
      CHECK(lo > 1e-3);
    }
  }

  TEST_CASE("sigma bounded by a multiple of Lambda^2") {
    oracle::FrequencySampler rng(47);
    const MediumParams p = MediumParams::symmetric(1.0, 2.0);
    double c_max = 0.0;
    for (int i = 0; i < 20000; ++i) {
      const Frequency f{rng.uniform(0.0, 1.0), rng.uniform(-1, 1), rng.uniform(-1, 1)};
      c_max = std::max(c_max, std::abs(vsheet::sigma(f, p)) / f.lambda_sq());
    }
    CHECK(c_max < 10.0);
    CHECK(c_max > 0.5);
  }
}
