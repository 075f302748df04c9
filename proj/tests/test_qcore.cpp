#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "pointerlab/errors.hpp"
#include "pointerlab/qcore.hpp"

using namespace pointerlab;

namespace {

const double inv_sqrt2 = std::sqrt(0.5);

TwoBranchState make_state(Amplitude c1, Amplitude c2) {
  GaussianPacket g{0.0, 0.0, 1.0, 1.0, 0.0};
  TwoBranchState s;
  s.branch1 = {c1, "up", g};
  s.branch2 = {c2, "down", g};
  return s;
}

}  // namespace

TEST_CASE("reduce_pointer on the canonical states") {
  SUBCASE("orthogonal pointers give the even mixture") {
    const auto rho = reduce_pointer(make_state({inv_sqrt2, 0}, {inv_sqrt2, 0}), {0.0, 0.0});
    CHECK(rho.rho11 == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(rho.rho22 == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(std::abs(rho.rho12) == 0.0);
  }

  SUBCASE("single branch stays pure for any overlap") {
    const auto rho = reduce_pointer(make_state({1.0, 0}, {0.0, 0}), {0.37, 0.11});
    CHECK(rho.rho11 == doctest::Approx(1.0));
    CHECK(rho.rho22 == doctest::Approx(0.0));
    CHECK(purity(rho) == doctest::Approx(1.0));
  }

  SUBCASE("half overlap leaves half coherence") {
    const auto rho = reduce_pointer(make_state({inv_sqrt2, 0}, {inv_sqrt2, 0}), {0.5, 0.0});
    CHECK(rho.rho12.real() == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(rho.rho12.imag() == doctest::Approx(0.0));
    CHECK(purity(rho) == doctest::Approx(0.625).epsilon(1e-12));
    // cross-check against the explicit embedding oracle
    const auto oracle = oracles::reduce_by_embedding({inv_sqrt2, 0}, {inv_sqrt2, 0}, {0.5, 0.0});
    CHECK(std::abs(rho.rho12 - oracle.rho12) < 1e-15);
  }
}

TEST_CASE("reduce_pointer matches the embedding oracle on random states") {
  oracles::Draw draw(314159);
  for (int i = 0; i < 1000; ++i) {
    const double w = draw.uniform(0.0, 1.0);
    const Amplitude c1 = std::polar(std::sqrt(w), draw.uniform(0, 6.28));
    const Amplitude c2 = std::polar(std::sqrt(1.0 - w), draw.uniform(0, 6.28));
    const Amplitude z = std::polar(draw.uniform(0.0, 1.0), draw.uniform(0, 6.28));

    const auto rho = reduce_pointer(make_state(c1, c2), z);
    const auto oracle = oracles::reduce_by_embedding(c1, c2, z);
    CHECK(std::abs(rho.rho11 - oracle.rho11) < 1e-9);
    CHECK(std::abs(rho.rho22 - oracle.rho22) < 1e-9);
    CHECK(std::abs(rho.rho12 - oracle.rho12) < 1e-9);

    CHECK(rho.rho11 + rho.rho22 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rho.rho11 * rho.rho22 - std::norm(rho.rho12) >= -1e-12);
  }
}

TEST_CASE("purity") {
  ReducedDensityMatrix2 mixed{0.5, 0.5, {0.0, 0.0}, "up", "down"};
  CHECK(purity(mixed) == doctest::Approx(0.5));

  ReducedDensityMatrix2 pure{1.0, 0.0, {0.0, 0.0}, "up", "down"};
  CHECK(purity(pure) == doctest::Approx(1.0));

  ReducedDensityMatrix2 partial{0.5, 0.5, {0.25, 0.0}, "up", "down"};
  CHECK(purity(partial) == doctest::Approx(0.625));
}

TEST_CASE("purity grows with the pointer overlap magnitude") {
  const auto state = make_state({std::sqrt(0.7), 0}, {std::sqrt(0.3), 0});
  double last = 0.0;
  for (double mag = 0.0; mag <= 1.0; mag += 0.05) {
    const double p = purity(reduce_pointer(state, {mag, 0.0}));
    CHECK(p >= last);
    last = p;
  }
}

TEST_CASE("visibility") {
  SUBCASE("equal weights with unit overlap") {
    const auto rho = reduce_pointer(make_state({inv_sqrt2, 0}, {inv_sqrt2, 0}), {1.0, 0.0});
    CHECK(visibility(rho) == doctest::Approx(1.0).epsilon(1e-12));
  }

  SUBCASE("no overlap, no fringes") {
    const auto rho = reduce_pointer(make_state({inv_sqrt2, 0}, {inv_sqrt2, 0}), {0.0, 0.0});
    CHECK(visibility(rho) == 0.0);
  }

  SUBCASE("uneven weights") {
    const auto rho =
        reduce_pointer(make_state({std::sqrt(0.6), 0}, {std::sqrt(0.4), 0}), {1.0, 0.0});
    CHECK(visibility(rho) == doctest::Approx(2.0 * std::sqrt(0.24)).epsilon(1e-12));
    const auto oracle =
        oracles::reduce_by_embedding({std::sqrt(0.6), 0}, {std::sqrt(0.4), 0}, {1.0, 0.0});
    CHECK(visibility(rho) == doctest::Approx(2.0 * std::abs(oracle.rho12)).epsilon(1e-12));
  }

  SUBCASE("identity 2|c1 c2||z| on random draws") {
    oracles::Draw draw(99);
    for (int i = 0; i < 200; ++i) {
      const double w = draw.uniform(0.0, 1.0);
      const Amplitude c1 = std::polar(std::sqrt(w), draw.uniform(0, 6.28));
      const Amplitude c2 = std::polar(std::sqrt(1.0 - w), draw.uniform(0, 6.28));
      const Amplitude z = std::polar(draw.uniform(0.0, 1.0), draw.uniform(0, 6.28));
      const double v = visibility(reduce_pointer(make_state(c1, c2), z));
      CHECK(v == doctest::Approx(2.0 * std::abs(c1) * std::abs(c2) * std::abs(z)).epsilon(1e-9));
    }
  }
}

TEST_CASE("born probabilities") {
  const auto even = born_probabilities(make_state({inv_sqrt2, 0}, {inv_sqrt2, 0}));
  CHECK(even.first == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(even.second == doctest::Approx(0.5).epsilon(1e-12));

  const auto sure = born_probabilities(make_state({1.0, 0}, {0.0, 0}));
  CHECK(sure.first == 1.0);
  CHECK(sure.second == 0.0);

  const auto uneven = born_probabilities(make_state({std::sqrt(0.3), 0}, {std::sqrt(0.7), 0}));
  CHECK(uneven.first == doctest::Approx(0.3).epsilon(1e-12));
  CHECK(uneven.second == doctest::Approx(0.7).epsilon(1e-12));

  CHECK_THROWS_AS((void)born_probabilities(make_state({0.9, 0}, {0.9, 0})), InvalidStateError);
}

TEST_CASE("error paths") {
  SUBCASE("non-finite amplitude") {
    CHECK_THROWS_AS((void)reduce_pointer(make_state({std::nan(""), 0}, {1.0, 0}), {0, 0}),
                    InvalidStateError);
  }

  SUBCASE("overlap magnitude above one") {
    CHECK_THROWS_AS(
        (void)reduce_pointer(make_state({inv_sqrt2, 0}, {inv_sqrt2, 0}), {1.0 + 1e-6, 0.0}),
        InvalidOverlapError);
  }

  SUBCASE("overlap within rounding of one is accepted") {
    const auto rho =
        reduce_pointer(make_state({inv_sqrt2, 0}, {inv_sqrt2, 0}), {1.0 + 1e-12, 0.0});
    CHECK(std::abs(rho.rho12) <= 0.5);
  }

  SUBCASE("duplicate labels") {
    auto s = make_state({inv_sqrt2, 0}, {inv_sqrt2, 0});
    s.branch2.label = s.branch1.label;
    CHECK_THROWS_AS((void)reduce_pointer(s, {0, 0}), InvalidStateError);
  }
}

TEST_CASE("norm conventions") {
  GaussianPacket g1{0.0, 0.0, 1.0, 1.0, 0.0};
  GaussianPacket g2{1.0, 0.0, 1.0, 1.0, 0.0};
  const double z = std::abs(overlap(g1, g2, 1.0));

  // coefficients normalized under the pointer Gram norm including the
  // real cross term 2 c^2 z
  const double c = 1.0 / std::sqrt(2.0 * (1.0 + z));
  TwoBranchState s;
  s.branch1 = {{c, 0.0}, "left", g1};
  s.branch2 = {{c, 0.0}, "right", g2};

  s.norm = NormConvention::PointerGram;
  CHECK_NOTHROW(validate(s, 1e-9, 1.0));

  s.norm = NormConvention::OrthogonalLabels;
  CHECK_THROWS_AS(validate(s, 1e-9, 1.0), InvalidStateError);

  s.branch1.amplitude = {inv_sqrt2, 0.0};
  s.branch2.amplitude = {inv_sqrt2, 0.0};
  CHECK_NOTHROW(validate(s, 1e-9, 1.0));
}
