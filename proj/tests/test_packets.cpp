#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "pointerlab/errors.hpp"
#include "pointerlab/packets.hpp"

using namespace pointerlab;

namespace {
GaussianPacket natural_packet(double x, double p, double sigma = 1.0) {
  return {x, p, sigma, 1.0, 0.0};
}
}  // namespace

TEST_CASE("overlap of a packet with itself is exactly one") {
  GaussianPacket g{3.2e-10, 1.5e-24, 1e-10, constants::electron_mass, 0.0};
  const Amplitude z = overlap(g, g);
  CHECK(z.real() == 1.0);
  CHECK(z.imag() == 0.0);
}

TEST_CASE("overlap magnitude, position and momentum splits") {
  // dx = 2 sigma
  const double m1 = std::abs(overlap(natural_packet(2.0, 0.0), natural_packet(0.0, 0.0), 1.0));
  CHECK(m1 == doctest::Approx(std::exp(-0.5)).epsilon(1e-12));

  // dp = 2 hbar / sigma, in SI units with the default constants
  GaussianPacket a{0.0, 0.0, 1e-10, constants::electron_mass, 0.0};
  GaussianPacket b = a;
  b.p_center = 2.0 * constants::hbar / a.sigma_x;
  CHECK(std::abs(overlap(a, b)) == doctest::Approx(std::exp(-2.0)).epsilon(1e-12));
}

TEST_CASE("overlap agrees with direct quadrature of the wavefunctions") {
  const GaussianPacket g1 = natural_packet(2.0, 0.0);
  const GaussianPacket g2 = natural_packet(0.0, 0.0);
  const Amplitude direct = oracles::quad_overlap(g1, g2, 1.0);
  const Amplitude closed = overlap(g1, g2, 1.0);
  CHECK(std::abs(closed - direct) < 1e-8);

  const GaussianPacket g3 = natural_packet(0.0, 2.0);
  CHECK(std::abs(overlap(g2, g3, 1.0) - oracles::quad_overlap(g2, g3, 1.0)) < 1e-8);

  oracles::Draw draw(101);
  for (int i = 0; i < 40; ++i) {
    const GaussianPacket u = natural_packet(draw.uniform(-4, 4), draw.uniform(-1.5, 1.5),
                                            draw.uniform(0.6, 1.8));
    GaussianPacket v = natural_packet(draw.uniform(-4, 4), draw.uniform(-1.5, 1.5));
    v.sigma_x = u.sigma_x;
    CHECK(std::abs(overlap(u, v, 1.0) - oracles::quad_overlap(u, v, 1.0)) < 1e-8);
  }
}

TEST_CASE("overlap is conjugate symmetric with magnitude at most one") {
  oracles::Draw draw(7);
  for (int i = 0; i < 200; ++i) {
    const double sigma = draw.uniform(0.3, 3.0);
    GaussianPacket u = natural_packet(draw.uniform(-5, 5), draw.uniform(-3, 3), sigma);
    GaussianPacket v = natural_packet(draw.uniform(-5, 5), draw.uniform(-3, 3), sigma);
    const Amplitude zuv = overlap(u, v, 1.0);
    const Amplitude zvu = overlap(v, u, 1.0);
    CHECK(std::abs(zuv - std::conj(zvu)) < 1e-15);
    CHECK(std::abs(zuv) <= 1.0);
  }
}

TEST_CASE("overlap rejects mismatched packet pairs") {
  const GaussianPacket g = natural_packet(0.0, 0.0);
  GaussianPacket wide = g;
  wide.sigma_x = 2.0;
  CHECK_THROWS_AS((void)overlap(g, wide), UnsupportedPacketPair);

  GaussianPacket heavy = g;
  heavy.mass = 2.0;
  CHECK_THROWS_AS((void)overlap(g, heavy), UnsupportedPacketPair);

  GaussianPacket later = g;
  later.time = 1.0;
  CHECK_THROWS_AS((void)overlap(g, later), UnsupportedPacketPair);
}

TEST_CASE("superposition moments: separated equal-weight packets") {
  // centers at 2d and d with sigma much smaller than d
  const double d = 1.0;
  const double sigma = 0.01;
  const Amplitude c{std::sqrt(0.5), 0.0};
  const auto m = superposition_moments(c, natural_packet(2.0 * d, 0.0, sigma), c,
                                       natural_packet(d, 0.0, sigma), 1.0);
  CHECK(m.mean_x == doctest::Approx(1.5 * d).epsilon(1e-9));
  CHECK(m.std_x == doctest::Approx(std::sqrt(sigma * sigma + 0.25 * d * d)).epsilon(1e-9));
  CHECK(m.stability_ratio == doctest::Approx(3.0).epsilon(0.01));
}

TEST_CASE("superposition moments: degenerate cases") {
  const GaussianPacket g1 = natural_packet(1.3, 0.4, 0.8);

  SUBCASE("single packet") {
    const auto m = superposition_moments({1.0, 0.0}, g1, {0.0, 0.0}, natural_packet(0, 0, 0.8), 1.0);
    CHECK(m.mean_x == doctest::Approx(g1.x_center).epsilon(1e-12));
    CHECK(m.std_x == doctest::Approx(g1.sigma_x).epsilon(1e-12));
  }

  SUBCASE("identical packets with equal weights") {
    const Amplitude c{std::sqrt(0.5), 0.0};
    const auto m = superposition_moments(c, g1, c, g1, 1.0);
    CHECK(m.mean_x == doctest::Approx(g1.x_center).epsilon(1e-12));
    CHECK(m.std_x == doctest::Approx(g1.sigma_x).epsilon(1e-12));
  }

  SUBCASE("opposite amplitudes on one packet have no norm") {
    CHECK_THROWS_AS(
        (void)superposition_moments({1.0, 0.0}, g1, {-1.0, 0.0}, g1, 1.0),
        InvalidStateError);
  }
}

TEST_CASE("superposition moments match quadrature on random draws") {
  oracles::Draw draw(2024);
  int checked = 0;
  while (checked < 150) {
    const double sigma = draw.uniform(0.5, 2.0);
    const GaussianPacket g1 = natural_packet(draw.uniform(-5, 5), draw.uniform(-1, 1), sigma);
    const GaussianPacket g2 = natural_packet(draw.uniform(-5, 5), draw.uniform(-1, 1), sigma);
    const Amplitude c1 = draw.amplitude(1.0);
    const Amplitude c2 = draw.amplitude(1.0);
    const auto quad = oracles::quad_moments(c1, g1, c2, g2, 1.0);
    if (quad.norm < 1e-3) continue;  // skip nearly cancelled superpositions
    const auto m = superposition_moments(c1, g1, c2, g2, 1.0);
    CHECK(std::abs(m.mean_x - quad.mean_x) <= 1e-8 * std::max(1.0, std::abs(quad.mean_x)));
    CHECK(std::abs(m.std_x - quad.std_x) <= 1e-8 * std::max(1.0, quad.std_x));
    ++checked;
  }
}

TEST_CASE("weak interference criterion") {
  const GaussianPacket base = natural_packet(0.0, 0.0);

  CHECK_FALSE(weakly_interfering(base, base, 1.0, 1.0));
  CHECK(weakly_interfering(natural_packet(5.0, 0.0), base, 1.0, 1.0));
  CHECK(weakly_interfering(natural_packet(0.0, 10.0), base, 1.0, 1.0));

  SUBCASE("both sub-criteria are reported") {
    const auto check = interference_check(natural_packet(0.0, 10.0), base, 1.0, 1.0);
    CHECK_FALSE(check.position_separated);
    CHECK(check.overlap_suppressed);
    CHECK(check.overlap_magnitude == doctest::Approx(std::exp(-50.0)));
  }

  SUBCASE("k must be positive") {
    CHECK_THROWS_AS((void)weakly_interfering(base, base, 0.0, 1.0), ParameterError);
  }

  SUBCASE("monotone in separation") {
    bool seen_true = false;
    for (double dx = 0.0; dx <= 6.0; dx += 0.25) {
      const bool weak = weakly_interfering(natural_packet(dx, 0.0), base, 1.0, 1.0);
      if (seen_true) CHECK(weak);
      seen_true = seen_true || weak;
    }
    CHECK(seen_true);
  }
}

TEST_CASE("packet stability against the dominance ratio") {
  CHECK(packet_stable(natural_packet(100.0, 0.0), 10.0));
  CHECK_FALSE(packet_stable(natural_packet(1.0, 0.0), 10.0));
  CHECK(packet_stable(natural_packet(10.0, 0.0), 10.0));  // boundary inclusive
}

TEST_CASE("free evolution") {
  SUBCASE("dt = 0 is the identity") {
    const GaussianPacket g = natural_packet(1.0, 2.0, 0.7);
    const GaussianPacket e = evolve_free(g, 0.0, 1.0);
    CHECK(e.x_center == g.x_center);
    CHECK(e.sigma_x == g.sigma_x);
    CHECK(e.time == g.time);
  }

  SUBCASE("characteristic time doubles the variance") {
    const GaussianPacket g = natural_packet(0.0, 0.0, 1.3);
    const double t_star = 2.0 * g.mass * g.sigma_x * g.sigma_x;  // hbar = 1
    const GaussianPacket e = evolve_free(g, t_star, 1.0);
    CHECK(e.sigma_x == doctest::Approx(g.sigma_x * std::sqrt(2.0)).epsilon(1e-12));
  }

  SUBCASE("electron-scale spreading factor") {
    GaussianPacket g{0.0, 0.0, 1e-10, constants::electron_mass, 0.0};
    const GaussianPacket e = evolve_free(g, 1e-16);
    const double spread = constants::hbar * 1e-16 / (2.0 * constants::electron_mass * 1e-20);
    CHECK(e.sigma_x ==
          doctest::Approx(1e-10 * std::sqrt(1.0 + spread * spread)).epsilon(1e-12));
  }

  SUBCASE("width never shrinks") {
    GaussianPacket g = natural_packet(0.0, 0.5, 0.9);
    double last = g.sigma_x;
    for (double dt : {0.1, 0.5, 1.0, 5.0, 25.0}) {
      const double s = evolve_free(g, dt, 1.0).sigma_x;
      CHECK(s >= last);
      last = s;
    }
  }

  SUBCASE("spreading eventually breaks the wave-packet approximation") {
    GaussianPacket g = natural_packet(50.0, 0.0, 1.0);
    CHECK(packet_stable(g, 10.0));
    CHECK_FALSE(packet_stable(evolve_free(g, 1e4, 1.0), 10.0));
  }

  SUBCASE("density after evolution matches the free propagator") {
    const GaussianPacket g = natural_packet(0.3, 0.5, 1.0);
    const double dt = 2.0;
    const GaussianPacket e = evolve_free(g, dt, 1.0);
    const double x_probe = e.x_center + 0.4;
    const double expected =
        std::exp(-std::pow(x_probe - e.x_center, 2) / (2.0 * e.sigma_x * e.sigma_x)) /
        std::sqrt(2.0 * std::numbers::pi * e.sigma_x * e.sigma_x);
    const double quad = oracles::quad_free_density(g, dt, x_probe, 1.0);
    CHECK(expected == doctest::Approx(quad).epsilon(1e-6));
  }

  SUBCASE("backward evolution is rejected") {
    CHECK_THROWS_AS((void)evolve_free(natural_packet(0, 0), -1.0, 1.0), ParameterError);
  }
}

TEST_CASE("packet validation") {
  GaussianPacket g = natural_packet(0.0, 0.0);
  g.sigma_x = 0.0;
  CHECK_THROWS_AS(validate(g), InvalidStateError);
  g.sigma_x = 1.0;
  g.mass = -1.0;
  CHECK_THROWS_AS(validate(g), InvalidStateError);
  g.mass = 1.0;
  g.x_center = std::nan("");
  CHECK_THROWS_AS(validate(g), InvalidStateError);
}

TEST_CASE("implied momentum spread") {
  const GaussianPacket g = natural_packet(0.0, 0.0, 2.0);
  CHECK(sigma_p(g, 1.0) == doctest::Approx(0.25));
}
