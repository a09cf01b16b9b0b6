#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "sqw/coins.hpp"
#include "sqw/random.hpp"
#include "sqw/topology.hpp"

using namespace sqw;

TEST_CASE("1d coin layout") {
  const double rho = 0.6, phi = 0.3, varphi = -0.4;
  const CoinMatrix c = coin_1d(1, rho, phi, varphi);
  const Complex t = std::polar(rho, phi);
  const Complex r = std::polar(std::sqrt(1.0 - rho * rho), varphi);
  CHECK(std::abs(c.amp(1, 1) - r) < 1e-15);
  CHECK(std::abs(c.amp(1, 2) - t) < 1e-15);
  CHECK(std::abs(c.amp(2, 1) - std::conj(t)) < 1e-15);
  CHECK(std::abs(c.amp(2, 2) + std::conj(r)) < 1e-15);
  CHECK(unitarity_residual(c).max() < 1e-15);
  CHECK(c.reflection_amp(1) == c.amp(1, 1));
  CHECK(c.transmission_amp(1, 2) == c.amp(1, 2));
  // extremes of the transparency parameter stay unitary
  CHECK(unitarity_residual(coin_1d(0, 0.0, 0.1, 0.2)).max() < 1e-15);
  CHECK(unitarity_residual(coin_1d(0, 1.0, 0.1, 0.2)).max() < 1e-15);
  CHECK_THROWS_AS(coin_1d(0, 1.2, 0.0, 0.0), std::invalid_argument);
}

TEST_CASE("grover coins") {
  for (int dim = 2; dim <= 6; ++dim) {
    const CoinMatrix c = coin_grover(0, dim);
    CHECK(unitarity_residual(c).max() < 1e-15);
    for (int i = 1; i <= dim; ++i)
      for (int j = 1; j <= dim; ++j) {
        const double want = (i == j ? -1.0 : 0.0) + 2.0 / dim;
        CHECK(std::abs(c.amp(i, j) - Complex{want, 0.0}) < 1e-15);
        CHECK(c.exact_amp(i, j) ==
              ExactComplex{(i == j ? Rational(-1) : Rational(0)) + Rational(2, dim)});
      }
    CHECK(is_transmission_symmetric(c));
  }
  // dim 2 degenerates to the swap
  const CoinMatrix g2 = coin_grover(0, 2);
  CHECK(g2.amp(1, 1) == Complex{0.0, 0.0});
  CHECK(g2.amp(1, 2) == Complex{1.0, 0.0});
}

TEST_CASE("point interaction coins") {
  PointInteractionParams q;  // defaults: a = d = 1, b = c = 0 (transparent)
  const CoinMatrix open = coin_point_interaction(0, q, 0.7);
  CHECK(unitarity_residual(open).max() < 1e-12);

  q.a = 2.0, q.b = 1.0, q.c = 1.0, q.d = 1.0, q.e = 0.4, q.theta = -0.7;
  const CoinMatrix gen = coin_point_interaction(0, q, 1.3);
  CHECK(unitarity_residual(gen).max() < 1e-12);

  PointInteractionParams bad = q;
  bad.a = 3.0;  // a d - b c = 2
  CHECK_THROWS_AS(coin_point_interaction(0, bad, 1.3), std::invalid_argument);

  PointInteractionParams delta;
  delta.c = 2.5;
  const CoinMatrix d = coin_point_interaction(0, delta, 0.9);
  CHECK(unitarity_residual(d).max() < 1e-12);
  CHECK(is_transmission_symmetric(d));
}

TEST_CASE("matrix coins validate unitarity") {
  CHECK_THROWS_AS(coin_from_matrix(0, 2, {Complex{1, 0}, Complex{1, 0}, Complex{0, 0},
                                          Complex{1, 0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(coin_from_matrix(0, 2, {Complex{1, 0}}), std::invalid_argument);

  // row-major, incoming-direction major
  const CoinMatrix swap =
      coin_from_matrix(3, 2, {Complex{0, 0}, Complex{1, 0}, Complex{1, 0}, Complex{0, 0}});
  CHECK(swap.site() == 3);
  CHECK(swap.amp(1, 2) == Complex{1.0, 0.0});

  // asymmetric transmission is accepted unless the flag demands symmetry
  const std::vector<Complex> asym = {Complex{0, 0}, Complex{0, 1}, Complex{1, 0},
                                     Complex{0, 0}};
  CHECK_NOTHROW(coin_from_matrix(0, 2, asym));
  CHECK_THROWS_AS(coin_from_matrix(0, 2, asym, true), std::invalid_argument);

  Rng rng(99);
  for (int dim = 2; dim <= 5; ++dim)
    CHECK(unitarity_residual(coin_from_matrix(0, dim, random_unitary(dim, rng))).max() <
          CoinMatrix::kUnitarityTol);
}

TEST_CASE("exact matrix coins") {
  const ExactComplex z{Rational(0)}, o{Rational(1)};
  const CoinMatrix c = coin_from_exact_matrix(2, 2, {z, o, o, z});
  CHECK(c.exact_amp(1, 2) == o);
  CHECK(c.amp(1, 2) == Complex{1.0, 0.0});
  // non-unitary exact entries are rejected too
  CHECK_THROWS_AS(coin_from_exact_matrix(0, 2, {o, o, o, o}), std::invalid_argument);
}

TEST_CASE("coin sets") {
  const GraphTopology g = build_line(4).with_free_sites({0, 3});
  CoinSet coins(g);
  CHECK(!coins.has(1));
  CHECK_THROWS_AS(coins.at(1), std::invalid_argument);       // unassigned non-free
  CHECK_THROWS_AS(coins.require_complete(g), std::invalid_argument);

  coins.assign(coin_1d(1, 0.5, 0.0, 0.0));
  coins.assign(coin_1d(2, 0.5, 0.0, 0.0));
  CHECK_NOTHROW(coins.require_complete(g));

  // free sites come with canonical coins: terminals reflect, pass-throughs swap
  CHECK(coins.at(0).amp(1, 1) == Complex{1.0, 0.0});
  CHECK(coins.at(3).dim() == 1);
  CHECK_THROWS_AS(coins.assign(coin_1d(0, 0.5, 0.0, 0.0)), std::invalid_argument);
  CHECK_THROWS_AS(coins.assign(coin_1d(9, 0.5, 0.0, 0.0)), std::invalid_argument);

  const GraphTopology line3 = build_line(3).with_free_sites({0, 1, 2});
  CoinSet pass(line3);
  CHECK(pass.at(1).amp(1, 2) == Complex{1.0, 0.0});  // valence-2 free site transmits
  CHECK(pass.at(1).amp(1, 1) == Complex{0.0, 0.0});

  // a coin of the wrong dimension fails completeness
  const GraphTopology hub = build_diamond_with_leads(1, 1);
  CoinSet wrong(hub);
  wrong.assign(coin_1d(2, 0.5, 0.0, 0.0));  // entry hub has valence 3
  CHECK_THROWS_AS(wrong.require_complete(hub), std::invalid_argument);
}
