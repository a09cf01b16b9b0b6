#include <cmath>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "sqw/coins.hpp"
#include "sqw/graph_spec.hpp"
#include "sqw/greenfn.hpp"
#include "sqw/topology.hpp"

using namespace sqw;

namespace {

std::string data_path(const char* name) {
  return std::string(TEST_DATA_DIR) + "/" + name;
}

// doctest's CHECK_THROWS_WITH wants full messages; the parser's messages
// embed JSON paths, so substring probes read better here.
template <typename Fn>
std::string thrown_message(Fn&& fn) {
  try {
    fn();
  } catch (const std::exception& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_CASE("shipped interferometer spec matches the builder") {
  const GraphSpec spec = load_graph_spec(data_path("diamond_grover.json"));
  const GraphTopology ref = build_diamond_with_leads(1, 1);
  REQUIRE(spec.graph.site_count() == ref.site_count());
  REQUIRE(spec.graph.state_count() == ref.state_count());
  for (SiteId j = 0; j < ref.site_count(); ++j) {
    CHECK(spec.graph.valence(j) == ref.valence(j));
    CHECK(spec.graph.is_free(j) == ref.is_free(j));
  }
  for (int i = 0; i < ref.state_count(); ++i) {
    const BondState s = ref.state_at(i);
    CHECK(spec.graph.partner(s) == ref.partner(s));
  }
  CHECK(spec.mark("entry") == diamond_entry_state(1, 1));
  CHECK(spec.mark("exit") == diamond_exit_state(1, 1));

  // grover blocks parse to the same coin, exact entries included
  const DiamondSites s = diamond_sites(1, 1);
  for (const SiteId j : {s.entry_hub, s.superior, s.inferior, s.exit_hub}) {
    const CoinMatrix want = coin_grover(j, spec.graph.valence(j));
    const CoinMatrix& got = spec.coins.at(j);
    for (DirectionIndex in = 1; in <= spec.graph.valence(j); ++in)
      for (DirectionIndex out = 1; out <= spec.graph.valence(j); ++out) {
        CHECK(got.amp(in, out) == want.amp(in, out));
        CHECK(got.exact_amp(in, out) == want.exact_amp(in, out));
      }
  }
  CHECK_THROWS_AS(spec.mark("side-door"), std::invalid_argument);
  CHECK(thrown_message([&] { spec.mark("side-door"); }).find("entry") !=
        std::string::npos);  // the error lists what exists
}

TEST_CASE("shipped two-site spec matches the builder") {
  const GraphSpec spec = load_graph_spec(data_path("line_twosite.json"));
  const GraphTopology ref = build_line(4).with_free_sites({0, 3});
  REQUIRE(spec.graph.site_count() == 4);
  for (SiteId j = 0; j < 4; ++j) {
    CHECK(spec.graph.valence(j) == ref.valence(j));
    CHECK(spec.graph.is_free(j) == ref.is_free(j));
  }
  CHECK(spec.mark("entry") == BondState{1, 1});
  CHECK(spec.mark("exit") == BondState{3, 1});
  const CoinMatrix want1 = coin_1d(1, 0.6, 0.3, -0.4);
  const CoinMatrix want2 = coin_1d(2, 0.8, -1.1, 0.25);
  for (DirectionIndex in = 1; in <= 2; ++in)
    for (DirectionIndex out = 1; out <= 2; ++out) {
      CHECK(spec.coins.at(1).amp(in, out) == want1.amp(in, out));
      CHECK(spec.coins.at(2).amp(in, out) == want2.amp(in, out));
    }
}

TEST_CASE("serialization is deterministic and self-consistent") {
  const GraphSpec spec = load_graph_spec(data_path("diamond_grover.json"));
  const std::string s1 = serialize_graph_spec(spec.graph, spec.coins, spec.marks);
  const GraphSpec round = parse_graph_spec(s1);
  const std::string s2 = serialize_graph_spec(round.graph, round.coins, round.marks);
  CHECK(s1 == s2);  // parse(serialize(x)) serializes identically

  // behaviour round-trips: same absorbing resolvent
  const GreenRequest req{spec.mark("entry"), spec.mark("exit"), true};
  const auto g1 = green_function(spec.graph, spec.coins, req);
  const auto g2 = green_function(round.graph, round.coins, req);
  REQUIRE(g1.num.degree() == g2.num.degree());
  REQUIRE(g1.den.degree() == g2.den.degree());
  for (int k = 0; k <= g1.num.degree(); ++k)
    CHECK(std::abs(g1.num.coeff(k) - g2.num.coeff(k)) < 1e-12);
  for (int k = 0; k <= g1.den.degree(); ++k)
    CHECK(std::abs(g1.den.coeff(k) - g2.den.coeff(k)) < 1e-12);

  // but matrix blocks carry doubles only: the round trip drops the exact
  // thirds, so the integer form of the exact solve loses its tidy shape
  const IntegerForm clean = integer_form(green_function_exact(spec.graph, spec.coins, req));
  const IntegerForm noisy =
      integer_form(green_function_exact(round.graph, round.coins, req));
  REQUIRE(clean.den.size() == 5);
  CHECK(clean.den[0] == ExactComplex{Rational(9)});
  CHECK(clean.den[4] == ExactComplex{Rational(-1)});
  CHECK(noisy.den != clean.den);
}

TEST_CASE("parser diagnostics name the offending path") {
  const auto fails_with = [](const std::string& text, const char* needle) {
    const std::string msg = thrown_message([&] { (void)parse_graph_spec(text); });
    INFO("message: ", msg);
    CHECK(msg.find(needle) != std::string::npos);
  };

  fails_with("{not json", "graph spec");
  fails_with(R"({"sites": []})", "schema_version");
  fails_with(R"({"schema_version": 7, "sites": [], "bonds": []})", "schema_version");

  // duplicate / non-dense site ids
  fails_with(R"({"schema_version": 1,
                 "sites": [{"id": 0, "valence": 1}, {"id": 0, "valence": 1}],
                 "bonds": [{"a": {"site": 0, "dir": 1}, "b": {"site": 1, "dir": 1}}]})",
             "$.sites");

  // unfilled direction: valence promises a bond that never appears
  fails_with(R"({"schema_version": 1,
                 "sites": [{"id": 0, "valence": 2, "free": true},
                           {"id": 1, "valence": 1, "free": true}],
                 "bonds": [{"a": {"site": 0, "dir": 1}, "b": {"site": 1, "dir": 1}}]})",
             "unused");

  // coin on a free site
  fails_with(R"({"schema_version": 1,
                 "sites": [{"id": 0, "valence": 1, "free": true},
                           {"id": 1, "valence": 1, "free": true}],
                 "bonds": [{"a": {"site": 0, "dir": 1}, "b": {"site": 1, "dir": 1}}],
                 "coins": [{"site": 0, "kind": "grover"}]})",
             "free");

  // missing coin on a scattering site
  fails_with(R"({"schema_version": 1,
                 "sites": [{"id": 0, "valence": 1, "free": true},
                           {"id": 1, "valence": 1}],
                 "bonds": [{"a": {"site": 0, "dir": 1}, "b": {"site": 1, "dir": 1}}]})",
             "coin");

  // coin1d needs valence 2
  fails_with(R"({"schema_version": 1,
                 "sites": [{"id": 0, "valence": 1, "free": true},
                           {"id": 1, "valence": 1}],
                 "bonds": [{"a": {"site": 0, "dir": 1}, "b": {"site": 1, "dir": 1}}],
                 "coins": [{"site": 1, "kind": "coin1d",
                            "rho": 0.5, "phi": 0.0, "varphi": 0.0}]})",
             "coin1d");

  // unknown coin kind
  fails_with(R"({"schema_version": 1,
                 "sites": [{"id": 0, "valence": 1, "free": true},
                           {"id": 1, "valence": 1}],
                 "bonds": [{"a": {"site": 0, "dir": 1}, "b": {"site": 1, "dir": 1}}],
                 "coins": [{"site": 1, "kind": "teleport"}]})",
             "kind");

  // marks must point at real states
  fails_with(R"({"schema_version": 1,
                 "sites": [{"id": 0, "valence": 1, "free": true},
                           {"id": 1, "valence": 1, "free": true}],
                 "bonds": [{"a": {"site": 0, "dir": 1}, "b": {"site": 1, "dir": 1}}],
                 "coins": [],
                 "marks": {"entry": {"site": 5, "dir": 1}}})",
             "$.marks");
}

TEST_CASE("load failures mention the file") {
  const std::string msg =
      thrown_message([] { (void)load_graph_spec("/nonexistent/walk.json"); });
  CHECK(msg.find("/nonexistent/walk.json") != std::string::npos);
}
