#include <cmath>
#include <complex>
#include <map>
#include <queue>
#include <string>
#include <vector>

#include "doctest.h"
#include "sqw/coins.hpp"
#include "sqw/graph_spec.hpp"
#include "sqw/random.hpp"
#include "sqw/topology.hpp"

using namespace sqw;

namespace {

double unitarity_defect(const std::vector<Complex>& m, int dim) {
  double worst = 0.0;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      Complex dot{0.0, 0.0};
      for (int k = 0; k < dim; ++k)
        dot += std::conj(m[static_cast<size_t>(k * dim + i)]) *
               m[static_cast<size_t>(k * dim + j)];
      worst = std::max(worst, std::abs(dot - (i == j ? Complex{1, 0} : Complex{0, 0})));
    }
  return worst;
}

bool connected(const GraphTopology& g) {
  std::vector<char> seen(static_cast<size_t>(g.site_count()), 0);
  std::queue<SiteId> q;
  q.push(0);
  seen[0] = 1;
  while (!q.empty()) {
    const SiteId j = q.front();
    q.pop();
    for (const auto& slot : g.slots(j))
      if (!seen[static_cast<size_t>(slot.neighbor)]) {
        seen[static_cast<size_t>(slot.neighbor)] = 1;
        q.push(slot.neighbor);
      }
  }
  for (const char s : seen)
    if (!s) return false;
  return true;
}

}  // namespace

TEST_CASE("random unitaries are unitary and reproducible") {
  for (int dim = 2; dim <= 6; ++dim) {
    Rng rng(17 + static_cast<unsigned>(dim));
    const auto m = random_unitary(dim, rng);
    REQUIRE(m.size() == static_cast<size_t>(dim * dim));
    CHECK(unitarity_defect(m, dim) < 1e-12);
  }
  Rng a(99), b(99), c(100), a2(99);
  CHECK(random_unitary(3, a) == random_unitary(3, b));
  CHECK(random_unitary(3, a2) != random_unitary(3, c));

  Rng d(5);
  for (int i = 0; i < 200; ++i) CHECK(std::abs(random_in_disk(0.9, d)) <= 0.9);
}

TEST_CASE("random walk instances are valid connected graphs") {
  for (int trial = 0; trial < 12; ++trial) {
    Rng rng(1000 + static_cast<unsigned>(trial));
    const int core = 2 + trial % 9;
    const auto inst = random_walk_instance(core, trial % 4, rng);
    CHECK(connected(inst.graph));
    CHECK_NOTHROW(inst.graph.validate());
    CHECK_NOTHROW(inst.coins.require_complete(inst.graph));
    CHECK(inst.graph.contains(inst.entry));
    CHECK(inst.graph.contains(inst.exit));
    // the exit is a first-arrival target on a free lead: incoming to a free
    // site, and distinct from the entry
    CHECK(inst.graph.is_free(inst.exit.site));
    CHECK(!(inst.entry == inst.exit));
    CHECK(inst.graph.is_free(inst.entry.site) == false);
    // entry comes in from a lead: its partner sits on a free site
    CHECK(inst.graph.is_free(inst.graph.partner(inst.entry).site));
  }
}

TEST_CASE("same seed gives the same instance") {
  Rng a(424242), b(424242);
  const auto x = random_walk_instance(6, 2, a);
  const auto y = random_walk_instance(6, 2, b);
  std::map<std::string, BondState> marks{{"entry", x.entry}, {"exit", x.exit}};
  std::map<std::string, BondState> marks2{{"entry", y.entry}, {"exit", y.exit}};
  CHECK(serialize_graph_spec(x.graph, x.coins, marks) ==
        serialize_graph_spec(y.graph, y.coins, marks2));

  Rng c(424243);
  const auto z = random_walk_instance(6, 2, c);
  std::map<std::string, BondState> marks3{{"entry", z.entry}, {"exit", z.exit}};
  CHECK(serialize_graph_spec(x.graph, x.coins, marks) !=
        serialize_graph_spec(z.graph, z.coins, marks3));
}
