#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "taugrav/interferometer.hpp"
#include "taugrav/quadrature.hpp"
#include "taugrav/rng.hpp"

using namespace taugrav;
using std::numbers::pi;

namespace {
const PhysicalConstants k = codata2018();
}

TEST_CASE("visibility limits and the paper's working points") {
  const double bph = 2.0 * pi * 1e7, ba = 2.0 * pi * 300.0;
  CHECK(visibility(bph, ba, 1.0) == 1.0);
  CHECK(visibility(bph, ba, 1e12) == doctest::Approx(1.0 / 3.0).epsilon(1e-4));
  CHECK(visibility(bph, ba, 1e4) == doctest::Approx(0.68).epsilon(0.01));

  double prev = 2.0;
  for (double g : {1.0, 2.0, 10.0, 1e3, 1e6, 1e12}) {
    const double v = visibility(bph, ba, g);
    CHECK(v > 1.0 / 3.0);
    CHECK(v <= 1.0);
    CHECK(v < prev + 1e-15);
    prev = v;
  }
}

TEST_CASE("dark-port flux formula") {
  InterferometerSpec spec;
  spec.amplifier.gain = 50.0;
  spec.amplifier.bandwidth = 10.0 * spec.photon_bandwidth;
  auto f1 = [](double t) {
    const double B = 2.0 * pi * 1e7;
    if (t == 0.0) return B / (2.0 * pi);
    const double s = std::sin(0.5 * B * t);
    return 2.0 * s * s / (pi * B * t * t);
  };

  SUBCASE("zero phase difference leaves only amplifier noise") {
    spec.phase_difference = 0.0;
    CHECK(output_flux_f6(spec, f1, 0.0) ==
          doctest::Approx(spec.amplifier.bandwidth / (2.0 * pi) *
                          (spec.amplifier.gain - 1.0)));
  }
  SUBCASE("unit gain at the bright fringe passes the photon through") {
    spec.amplifier.gain = 1.0;
    spec.phase_difference = pi;
    for (double t : {0.0, 1e-8, 3e-7})
      CHECK(output_flux_f6(spec, f1, t) == doctest::Approx(f1(t)));
  }
  SUBCASE("integrated signal term counts (G/2)(1-cos dphi) photons") {
    spec.phase_difference = 2.0;
    const double noise = spec.amplifier.bandwidth / (2.0 * pi) *
                         (spec.amplifier.gain - 1.0);
    auto signal = [&](double t) { return output_flux_f6(spec, f1, t) - noise; };
    // the 1/t^2 flux tail converges slowly; +-1e-3 s leaves ~1e-5 outside
    const auto q = integrate_1d(signal, -1e-3, 1e-3, 1e-8);
    const double expected = 0.5 * spec.amplifier.gain *
                            (1.0 - std::cos(spec.phase_difference));
    CHECK(q.value == doctest::Approx(expected).epsilon(1e-4));
  }
  SUBCASE("narrow amplifiers are out of regime") {
    spec.amplifier.bandwidth = 2.0 * pi * 300.0;
    CHECK_THROWS_AS(output_flux_f6(spec, f1, 0.0), RegimeError);
  }
}

TEST_CASE("squeezer input-output relations") {
  SUBCASE("unit gain is the identity up to arm phase") {
    AmplifierSpec amp;
    amp.gain = 1.0;
    const std::pair<Complex, Complex> in{{0.3, -0.4}, {0.1, 0.9}};
    const auto out = squeezer_io(in, amp, 0.7);
    const Complex phase = std::polar(1.0, 0.7);
    CHECK(std::abs(out.first - phase * in.first) < 1e-14);
    CHECK(std::abs(out.second - phase * in.second) < 1e-14);
  }
  SUBCASE("bosonic metric is preserved across the gain range") {
    CounterRng rng(11, 0);
    for (int i = 0; i < 20; ++i) {
      AmplifierSpec amp;
      amp.gain = std::pow(10.0, 10.0 * rng.uniform());
      // cosh^2 - sinh^2 = 1 checked through both factors separately;
      // the literal difference cancels catastrophically at high gain
      const double s = amp.squeeze_parameter();
      CHECK(std::cosh(s) * std::cosh(s) ==
            doctest::Approx(amp.gain).epsilon(1e-12));
      CHECK(std::sinh(s) * std::sinh(s) ==
            doctest::Approx(amp.gain - 1.0).epsilon(1e-11).scale(1.0));
    }
  }
  SUBCASE("opposite squeeze phases compose to the identity") {
    AmplifierSpec fwd;
    fwd.gain = 7.0;
    fwd.theta = 0.9;
    AmplifierSpec bwd = fwd;
    bwd.theta = fwd.theta + pi;
    const std::pair<Complex, Complex> in{{0.25, 0.5}, {-0.3, 0.1}};
    const auto mid = squeezer_io(in, fwd, 0.0);
    const auto out = squeezer_io(mid, bwd, 0.0);
    CHECK(std::abs(out.first - in.first) < 1e-12);
    CHECK(std::abs(out.second - in.second) < 1e-12);
  }
}

TEST_CASE("hybrid scattering and the Mach-Zehnder fringe") {
  HybridSpec h;
  const Eigen::Matrix2cd S = h.scattering();
  CHECK((S * S.adjoint() - Eigen::Matrix2cd::Identity()).norm() < 1e-12);

  for (double dphi : {0.0, 0.4, pi / 2, 2.2, pi}) {
    Eigen::Vector2cd v(1.0, 0.0);
    v = S * v;
    v[0] *= std::polar(1.0, dphi);
    v = S * v;
    const double p0 = std::norm(v[0]), p1 = std::norm(v[1]);
    CHECK(p0 == doctest::Approx((1.0 - std::cos(dphi)) / 2.0).epsilon(1e-12));
    CHECK(p1 == doctest::Approx((1.0 + std::cos(dphi)) / 2.0).epsilon(1e-12));
    CHECK(p0 + p1 == doctest::Approx(1.0).epsilon(1e-12));
  }

  HybridSpec lossy;
  lossy.transmission = 0.5;
  CHECK_THROWS_AS(lossy.validate(), GeometryError);
}

TEST_CASE("voltage-potential conversions") {
  CHECK(phi_from_voltage(0.0, 20.0, k) == 0.0);
  CHECK(phi_from_voltage(1.0, 20.0, k) ==
        doctest::Approx(8.4e-31).epsilon(0.01));
  const double a = phi_from_voltage(2.0, 20.0, k),
               b = phi_from_voltage(3.0, 20.0, k);
  CHECK(phi_from_voltage(2.0 * 2.0 + 3.0, 20.0, k) ==
        doctest::Approx(2.0 * a + b).epsilon(1e-14));

  const double omega = 2.0 * pi * 1e9;
  CHECK(std::abs(coherent_voltage(0.0, omega, 20.0, 0.0, 0.0, k)) == 0.0);
  const double amp0 = std::abs(coherent_voltage(1.0, omega, 20.0, 0.0, 0.0, k));
  CHECK(amp0 == doctest::Approx(4.3e-8).epsilon(0.01));
  CHECK(std::abs(coherent_voltage(1.0, omega, 20.0, 0.35, 1.7e-9, k)) ==
        doctest::Approx(amp0).epsilon(1e-12));
}

TEST_CASE("overlap amplitude symmetry and normalization") {
  AmplifierSpec amp;
  amp.gain = 1.0;
  CHECK(std::abs(overlap_amplitude(0.0, 0.0, amp)) == 0.0);

  const Complex aL(0.3, -0.2), aR(-0.1, 0.45);
  CHECK(std::abs(overlap_amplitude(aL, aR, amp) -
                 overlap_amplitude(aR, aL, amp)) < 1e-15);

  // |overlap|^2 integrated over both coherent planes (d^2 a / pi each)
  auto norm_at = [&](double gain) {
    AmplifierSpec a;
    a.gain = gain;
    using V4 = Eigen::Matrix<double, 4, 1>;
    auto f = [&](const V4& u) {
      return std::norm(
          overlap_amplitude(Complex(u[0], u[1]), Complex(u[2], u[3]), a));
    };
    const double L = 6.0;
    auto q = integrate_cell<4>(f, V4::Constant(-L), V4::Constant(L), 1e-6);
    return q.value / (pi * pi);
  };
  CHECK(norm_at(1.0) == doctest::Approx(1.0).epsilon(1e-4));
  CHECK(norm_at(2.0) == doctest::Approx(1.0).epsilon(1e-4));
}

TEST_CASE("gaussian moments against closed forms") {
  AmplifierSpec amp;
  amp.gain = 2.0;
  CHECK(gaussian_moment(0, amp) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-6));
  amp.gain = 4.0;
  CHECK(gaussian_moment(2, amp) == doctest::Approx(8.0).epsilon(1e-6));

  // p = 4: the paper's 3 G^(5/2) only at large gain ...
  amp.gain = 1e4;
  CHECK(gaussian_moment(4, amp) ==
        doctest::Approx(3.0 * std::pow(1e4, 2.5)).epsilon(1e-3));
  // ... while quadrature arbitrates the unamplified value to 2, not 3
  amp.gain = 1.0;
  CHECK(gaussian_moment(4, amp) == doctest::Approx(2.0).epsilon(1e-6));

  CHECK_THROWS_AS(gaussian_moment(3, amp), GeometryError);
}

TEST_CASE("variance of the amplified potential") {
  CoaxSpec coax;
  AmplifierSpec amp;

  SUBCASE("closed form is linear in the gain") {
    amp.gain = 5.0;
    const double v5 = variance_phi(amp, coax, 1000, 1, k).closed_form;
    amp.gain = 10.0;
    const double v10 = variance_phi(amp, coax, 1000, 1, k).closed_form;
    CHECK(v10 == doctest::Approx(2.0 * v5).epsilon(1e-14));
  }
  SUBCASE("vanishes with Newton's constant") {
    PhysicalConstants k0 = k;
    k0.G = 0.0;
    amp.gain = 5.0;
    CHECK(variance_phi(amp, coax, 1000, 1, k0).closed_form == 0.0);
  }
  SUBCASE("Monte Carlo tracks the closed form across gains") {
    for (double gain : {10.0, 100.0, 1000.0}) {
      amp.gain = gain;
      const auto v = variance_phi(amp, coax, 500000, 20260823, k);
      const double tol = 0.05 * v.closed_form + 4.0 * v.mc_error;
      CHECK(std::abs(v.monte_carlo - v.closed_form) < tol);
    }
  }
}

TEST_CASE("timescale versus gain") {
  CoaxSpec coax;
  const double t1 = tau_vs_gain(1.0, coax, k);
  CHECK(t1 == doctest::Approx(1.7e4).epsilon(0.02));
  CHECK(tau_vs_gain(1e20, coax, k) == doctest::Approx(1.7e-6).epsilon(0.02));
  CHECK(tau_vs_gain(4.0, coax, k) == doctest::Approx(t1 / 2.0).epsilon(1e-12));

  CHECK(critical_gain_db(1e-6, coax, k) == doctest::Approx(200.0).epsilon(0.025));
  CHECK(critical_gain_db(t1, coax, k) == doctest::Approx(0.0).scale(1.0).epsilon(1e-10));
  const double db = critical_gain_db(3.7e-5, coax, k);
  CHECK(tau_vs_gain(std::pow(10.0, db / 10.0), coax, k) ==
        doctest::Approx(3.7e-5).epsilon(1e-8));
}

TEST_CASE("parameter validation") {
  AmplifierSpec amp;
  amp.gain = 0.5;
  CHECK_THROWS_AS(amp.validate(), GeometryError);
  CoaxSpec coax;
  coax.radius = 0.0;
  CHECK_THROWS_AS(coax.validate(), GeometryError);
  CHECK_THROWS_AS(critical_gain_db(-1.0, CoaxSpec{}, k), GeometryError);
}
