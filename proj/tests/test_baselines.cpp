#include <doctest.h>

#include "mgbccm/baselines.hpp"
#include "test_channels.hpp"

using namespace mgbccm;
using fixtures::vec2;

TEST_CASE("single-user wiretap capacity") {
  CHECK(miso_wiretap_capacity(fixtures::collapsed()) == 0.0);
  CHECK(miso_wiretap_capacity(fixtures::orthogonal()) ==
        doctest::Approx(std::log2(11.0)).epsilon(1e-12));
  CHECK(miso_wiretap_capacity(fixtures::example2()) ==
        doctest::Approx(1.89261051294704).epsilon(1e-9));
}

TEST_CASE("wiretap eigenvalue at zero power is 1") {
  CHECK(wiretap_eigenvalue(vec2(1.0, 0.0), vec2(0.0, 1.0), 0.0) == 1.0);
}

TEST_CASE("time-sharing frontier") {
  const ChannelPair ch = fixtures::example1();
  const auto frontier = time_share_frontier(ch, 41, 41);
  REQUIRE(frontier.size() >= 3);

  SUBCASE("endpoints are the single-user corners at full power") {
    const TimeSharePoint& last = frontier.back();   // largest r1
    const TimeSharePoint& first = frontier.front(); // largest r2
    CHECK(last.tau1 == 1.0);
    CHECK(last.r1 == doctest::Approx(miso_wiretap_capacity(ch)).epsilon(1e-12));
    CHECK(last.r2 == 0.0);
    CHECK(first.tau1 == 0.0);
    CHECK(first.r2 ==
          doctest::Approx(miso_wiretap_capacity(ch.swapped())).epsilon(1e-12));
  }
  SUBCASE("the frontier is a staircase: r1 up, r2 down") {
    for (size_t i = 1; i < frontier.size(); ++i) {
      CHECK(frontier[i].r1 >= frontier[i - 1].r1);
      CHECK(frontier[i].r2 <= frontier[i - 1].r2);
    }
  }
  SUBCASE("every point respects the average power budget") {
    for (const TimeSharePoint& p : frontier) {
      CHECK(p.tau1 * p.p1 + (1.0 - p.tau1) * p.p2 <= ch.power + 1e-9);
    }
  }
  SUBCASE("strictly inside the capacity region") {
    const RateRegion region = region_sweep(ch, 201);
    for (const TimeSharePoint& p : frontier) {
      CHECK(hull_contains(region, RatePoint{p.r1, p.r2}, 1e-9));
    }
    // the even-split midpoint leaves a visible gap to the boundary
    const double r1 = 0.5 * 0.5 * std::log2(wiretap_eigenvalue(ch.h, ch.g, ch.power));
    const double r2 = 0.5 * 0.5 * std::log2(wiretap_eigenvalue(ch.g, ch.h, ch.power));
    CHECK(hull_r2_at(region, r1) - r2 > 1e-3);
  }
}

TEST_CASE("grid validation") {
  CHECK_THROWS_AS(time_share_frontier(fixtures::example1(), 1, 41), std::domain_error);
  CHECK_THROWS_AS(time_share_frontier(fixtures::example1(), 41, 1), std::domain_error);
}

TEST_CASE("single-user eigenvalue grows with power") {
  const ChannelPair ch = fixtures::example2();
  double prev = 1.0;
  for (int i = 0; i <= 20; ++i) {
    const double p = ch.power * i / 20.0;
    const double lam = wiretap_eigenvalue(ch.h, ch.g, p);
    CHECK(lam >= prev - 1e-12);
    prev = lam;
  }
}

TEST_CASE("scalar channel sanity") {
  SUBCASE("equal magnitudes silence both users") {
    const auto [r1, r2] = single_antenna_sanity(Complex(1.0), Complex(0.0, 1.0), 10.0,
                                                Mode::complex_alphabet);
    CHECK(r1 == 0.0);
    CHECK(r2 == 0.0);
  }
  SUBCASE("stronger user 1") {
    const auto [r1, r2] =
        single_antenna_sanity(Complex(1.5), Complex(1.0), 10.0, Mode::real_alphabet);
    CHECK(r1 == doctest::Approx(0.5 * std::log2(23.5 / 11.0)).epsilon(1e-14));
    CHECK(r2 == 0.0);
  }
  SUBCASE("stronger user 2") {
    const auto [r1, r2] =
        single_antenna_sanity(Complex(1.0), Complex(1.5), 10.0, Mode::complex_alphabet);
    CHECK(r1 == 0.0);
    CHECK(r2 > 0.0);
  }
}
