#include <stdexcept>

#include "doctest.h"
#include "sqw/topology.hpp"

using namespace sqw;

TEST_CASE("line builder shape and canonical state order") {
  const GraphTopology g = build_line(5);
  CHECK(g.site_count() == 5);
  CHECK(g.valence(0) == 1);
  CHECK(g.valence(2) == 2);
  CHECK(g.valence(4) == 1);
  CHECK(g.undirected_bond_count() == 4);
  CHECK(g.state_count() == 8);
  CHECK_NOTHROW(g.validate());

  for (int i = 0; i < g.state_count(); ++i) {
    const BondState s = g.state_at(i);
    CHECK(g.state_index(s) == i);
    const BondState p = g.partner(s);
    CHECK(p != s);               // fixed-point free
    CHECK(g.partner(p) == s);    // involution
    CHECK(g.contains(p));
  }
  // interior label 1 faces the lower neighbor
  CHECK(g.slot_for_label(2, 1).neighbor == 1);
  CHECK(g.slot_for_label(2, 2).neighbor == 3);
  CHECK(g.partner({2, 1}) == BondState{1, 2});
}

TEST_CASE("free marks and terminal extension") {
  const GraphTopology g = build_line(4).with_free_sites({0, 3});
  CHECK(g.is_free(0));
  CHECK(g.is_free(3));
  CHECK(!g.is_free(1));

  const GraphTopology e = g.extend_free_terminals(3);
  CHECK(e.site_count() == 4 + 2 * 4);  // 3 pass-throughs + 1 new terminal per lead
  CHECK(e.valence(0) == 2);            // old terminal became a pass-through
  CHECK(e.is_free(0));
  CHECK_NOTHROW(e.validate());
  // original bonds survive
  CHECK(e.slot_for_label(1, 1).neighbor == 0);
  CHECK(e.slot_for_label(1, 2).neighbor == 2);
  // zero extension is the identity
  CHECK(g.extend_free_terminals(0).site_count() == 4);
  CHECK_THROWS_AS(g.extend_free_terminals(-1), std::invalid_argument);

  // free marks demand valence <= 2
  CHECK_THROWS_AS(build_diamond_with_leads(1, 1).with_free_sites({2}),
                  std::invalid_argument);
}

TEST_CASE("interferometer layout") {
  const GraphTopology g = build_diamond_with_leads(1, 1);
  const DiamondSites s = diamond_sites(1, 1);
  CHECK(g.site_count() == 8);
  CHECK(g.undirected_bond_count() == 8);
  CHECK(g.valence(s.entry_hub) == 3);
  CHECK(g.valence(s.superior) == 2);
  CHECK(g.is_free(0));
  CHECK(g.is_free(1));
  CHECK(!g.is_free(s.entry_hub));
  CHECK(g.is_free(6));
  CHECK(g.is_free(7));

  CHECK(diamond_entry_state(1, 1) == BondState{2, 1});
  CHECK(diamond_exit_state(1, 1) == BondState{6, 1});
  CHECK(g.partner({2, 1}) == BondState{1, 2});
  // hub label 2 reaches the superior arm, 3 the inferior one
  CHECK(g.slot_for_label(s.entry_hub, 2).neighbor == s.superior);
  CHECK(g.slot_for_label(s.entry_hub, 3).neighbor == s.inferior);
  CHECK(g.slot_for_label(s.superior, 2).neighbor == s.exit_hub);
  CHECK(g.slot_for_label(s.exit_hub, 1).neighbor == 6);
  CHECK_NOTHROW(g.validate());

  const GraphTopology big = build_diamond_with_leads(2, 3);
  CHECK(big.site_count() == 11);
  CHECK(diamond_sites(2, 3).entry_hub == 3);
  CHECK(diamond_exit_state(2, 3) == BondState{7, 1});
  CHECK_NOTHROW(big.validate());
}

TEST_CASE("builder rejects malformed graphs") {
  GraphBuilder bad;
  CHECK_THROWS_AS(bad.add_site(0), std::invalid_argument);
  CHECK_THROWS_AS(bad.add_site(3, true), std::invalid_argument);

  GraphBuilder b;
  b.add_site(1);
  b.add_site(2);
  b.add_site(1);
  b.connect(0, 1, 1, 1);
  CHECK_THROWS_AS(b.connect(0, 1, 1, 2), std::invalid_argument);  // slot taken
  CHECK_THROWS_AS(b.finish(), std::invalid_argument);             // unconnected slots

  GraphBuilder self;
  self.add_site(2);
  CHECK_THROWS_AS(self.connect(0, 1, 0, 2), std::invalid_argument);

  GraphBuilder parallel;
  parallel.add_site(2);
  parallel.add_site(2);
  parallel.connect(0, 1, 1, 1);
  CHECK_THROWS_AS(parallel.connect(0, 2, 1, 2), std::invalid_argument);

  GraphBuilder range;
  range.add_site(2);
  range.add_site(2);
  CHECK_THROWS_AS(range.connect(0, 3, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(range.connect(0, 1, 5, 1), std::invalid_argument);
}
