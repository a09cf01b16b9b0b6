#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "sqw/coins.hpp"
#include "sqw/evolution.hpp"
#include "sqw/greenfn.hpp"
#include "sqw/operators.hpp"
#include "sqw/random.hpp"
#include "sqw/topology.hpp"

using namespace sqw;

namespace {

// Three sites in a row, scatterer in the middle (t = 0.6, r = 0.8, all real),
// identity reflectors at both ends. Closed system: amplitudes by hand.
struct ClosedLine {
  GraphTopology g = build_line(3);
  CoinSet coins{g};
  ClosedLine() {
    coins.assign(coin_from_matrix(0, 1, {Complex{1, 0}}));
    coins.assign(coin_1d(1, 0.6, 0.0, 0.0));
    coins.assign(coin_from_matrix(2, 1, {Complex{1, 0}}));
  }
};

}  // namespace

TEST_CASE("single steps against hand amplitudes") {
  const ClosedLine fix;
  WalkState w = WalkState::unit({1, 1});
  w = apply_step(fix.g, fix.coins, w);
  CHECK(w.gamma_phase_count == 1);
  CHECK(w.amplitudes.size() == 2);
  CHECK(std::abs(w.amplitudes.at({0, 1}) - Complex{0.8, 0.0}) < 1e-15);
  CHECK(std::abs(w.amplitudes.at({2, 1}) - Complex{0.6, 0.0}) < 1e-15);
  CHECK(std::abs(w.norm_sq() - 1.0) < 1e-15);
  CHECK(std::abs(w.probability({0, 1}) - 0.64) < 1e-15);
  CHECK(w.probability({1, 1}) == 0.0);

  // terminals bounce straight back
  w = apply_step(fix.g, fix.coins, w);
  CHECK(w.amplitudes.size() == 2);
  CHECK(std::abs(w.amplitudes.at({1, 1}) - Complex{0.8, 0.0}) < 1e-15);
  CHECK(std::abs(w.amplitudes.at({1, 2}) - Complex{0.6, 0.0}) < 1e-15);

  // evolve(n) composes the same steps
  const WalkState e = evolve(fix.g, fix.coins, WalkState::unit({1, 1}), 2);
  CHECK(e.gamma_phase_count == 2);
  CHECK(std::abs(e.amplitudes.at({1, 1}) - Complex{0.8, 0.0}) < 1e-15);
  CHECK(evolve(fix.g, fix.coins, WalkState::unit({1, 1}), 0).amplitudes.size() == 1);
}

TEST_CASE("first arrivals on the closed line follow the bounce recursion") {
  const ClosedLine fix;
  // first arrival at the far bond: direct hit at n = 1, every extra round
  // trip through the left terminal multiplies by r = 0.8 and adds two steps
  const auto series = first_arrival_series(fix.g, fix.coins, {1, 1}, {2, 1}, 9);
  REQUIRE(series.size() == 10);
  double want = 0.6;
  for (int n = 0; n <= 9; ++n) {
    if (n % 2 == 1) {
      CHECK(std::abs(series[static_cast<size_t>(n)] - Complex{want, 0.0}) < 1e-14);
      want *= 0.8;
    } else {
      CHECK(std::abs(series[static_cast<size_t>(n)]) == 0.0);
    }
  }
  // single amplitudes agree with the series
  CHECK(std::abs(first_arrival_amplitude(fix.g, fix.coins, {1, 1}, {2, 1}, 3) -
                 series[3]) < 1e-15);
  CHECK_THROWS_AS(first_arrival_series(fix.g, fix.coins, {1, 1}, {1, 1}, 5),
                  std::invalid_argument);
}

TEST_CASE("free leads swallow amplitude within the horizon") {
  // same line, but the left terminal is free: the reflected wave leaves and
  // never comes back, so only the direct transmission remains
  const GraphTopology g = build_line(3).with_free_sites({0});
  CoinSet coins(g);
  coins.assign(coin_1d(1, 0.6, 0.0, 0.0));
  coins.assign(coin_from_matrix(2, 1, {Complex{1, 0}}));
  const auto series = first_arrival_series(g, coins, {1, 1}, {2, 1}, 9);
  CHECK(std::abs(series[1] - Complex{0.6, 0.0}) < 1e-15);
  for (int n = 2; n <= 9; ++n) CHECK(std::abs(series[static_cast<size_t>(n)]) == 0.0);
}

TEST_CASE("norm is conserved on closed random graphs") {
  Rng rng(4242);
  const RandomWalkInstance inst = random_walk_instance(7, 3, rng);
  const int n = 50;
  const WalkState w = evolve(inst.graph, inst.coins, WalkState::unit(inst.entry), n);
  CHECK(std::abs(w.norm_sq() - 1.0) < 1e-12 * n);
  CHECK(w.gamma_phase_count == n);
}

TEST_CASE("absorbing resolvent expands to the first-arrival series") {
  Rng rng(77);
  const RandomWalkInstance inst = random_walk_instance(5, 2, rng);
  const auto g = green_function(inst.graph, inst.coins, {inst.entry, inst.exit, true});
  const auto cs = step_coefficients(g, 15);
  const auto oracle = first_arrival_series(inst.graph, inst.coins, inst.entry,
                                           inst.exit, 15);
  for (size_t n = 0; n < cs.size(); ++n) CHECK(std::abs(cs[n] - oracle[n]) < 1e-9);
}

TEST_CASE("plain resolvent expands to the per-step amplitude at the exit") {
  Rng rng(78);
  const RandomWalkInstance inst = random_walk_instance(4, 2, rng);
  // a non-absorbing request needs an exit away from the leads; re-arrivals count
  BondState exit{-1, 1};
  for (int i = 0; i < inst.graph.state_count(); ++i) {
    const BondState s = inst.graph.state_at(i);
    if (!inst.graph.is_free(s.site) && s != inst.entry) exit = s;
  }
  REQUIRE(exit.site >= 0);
  const int n_max = 12;
  const auto g = green_function(inst.graph, inst.coins, {inst.entry, exit, false});
  const auto cs = step_coefficients(g, n_max);

  const GraphTopology ext = inst.graph.extend_free_terminals(n_max + 1);
  CoinSet coins(ext);
  for (SiteId j = 0; j < inst.graph.site_count(); ++j)
    if (!inst.graph.is_free(j)) coins.assign(inst.coins.at(j));
  WalkState w = WalkState::unit(inst.entry);
  for (int n = 0; n <= n_max; ++n) {
    const auto it = w.amplitudes.find(exit);
    const Complex got = it == w.amplitudes.end() ? Complex{0.0, 0.0} : it->second;
    CHECK(std::abs(got - cs[static_cast<size_t>(n)]) < 1e-9);
    w = apply_step(ext, coins, w);
  }
}
