#pragma once

#include <map>
#include <string>

#include "sqw/coins.hpp"
#include "sqw/topology.hpp"

namespace sqw {

// One fully specified walk instance as loaded from a JSON file: topology,
// per-site coins, and named bond states ("entry", "exit", ...) that the
// command-line tools refer to by name.
struct GraphSpec {
  GraphTopology graph;
  CoinSet coins;
  std::map<std::string, BondState> marks;

  // Throws std::invalid_argument listing the available names.
  const BondState& mark(const std::string& name) const;
};

// Parse the schema_version 1 document:
//   {
//     "schema_version": 1,
//     "sites": [{"id": 0, "valence": 2, "free": false}, ...],   // dense ids
//     "bonds": [{"a": {"site": 0, "dir": 1}, "b": {"site": 1, "dir": 1}}, ...],
//     "marks": {"entry": {"site": 0, "dir": 1}, ...},           // optional
//     "coins": [
//       {"site": 0, "kind": "matrix", "entries": [[re, im], ...]},  // row-major, in-major
//       {"site": 1, "kind": "coin1d", "rho": r, "phi": p, "varphi": q},
//       {"site": 2, "kind": "grover"},
//       {"site": 3, "kind": "point", "a":..,"b":..,"c":..,"d":..,"e":..,"theta":..,"k":..}
//     ]
//   }
// Every non-free site needs exactly one coin block; free sites take none.
// Errors name the offending JSON path.
GraphSpec parse_graph_spec(const std::string& json_text);

// Read the file and parse it; errors mention the path.
GraphSpec load_graph_spec(const std::string& path);

// Emit the same schema. Coins are written as explicit "matrix" blocks
// (numeric double entries), whatever constructor made them; graph, marks and
// walk behaviour round-trip exactly, the coin sugar kind does not.
// Deterministic output: fixed key order, two-space indent.
std::string serialize_graph_spec(const GraphTopology& g, const CoinSet& coins,
                                 const std::map<std::string, BondState>& marks);

}  // namespace sqw
