#include "sqw/graph_spec.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace sqw {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw std::invalid_argument("graph spec: " + path + ": " + what);
}

const json& need(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(path + "." + key, "missing");
  return *it;
}

int need_int(const json& obj, const char* key, const std::string& path) {
  const json& v = need(obj, key, path);
  if (!v.is_number_integer()) fail(path + "." + key, "expected an integer");
  return v.get<int>();
}

double need_double(const json& obj, const char* key, const std::string& path) {
  const json& v = need(obj, key, path);
  if (!v.is_number()) fail(path + "." + key, "expected a number");
  return v.get<double>();
}

double opt_double(const json& obj, const char* key, double fallback) {
  auto it = obj.find(key);
  if (it == obj.end()) return fallback;
  if (!it->is_number()) throw std::invalid_argument(std::string("graph spec: ") + key +
                                                    ": expected a number");
  return it->get<double>();
}

BondState parse_state(const json& v, const std::string& path) {
  return {static_cast<SiteId>(need_int(v, "site", path)),
          static_cast<DirectionIndex>(need_int(v, "dir", path))};
}

CoinMatrix parse_coin(const json& v, int valence, const std::string& path) {
  const json& kind_v = need(v, "kind", path);
  if (!kind_v.is_string()) fail(path + ".kind", "expected a string");
  const std::string kind = kind_v.get<std::string>();
  const SiteId site = static_cast<SiteId>(need_int(v, "site", path));
  if (kind == "matrix") {
    const json& entries = need(v, "entries", path);
    if (!entries.is_array() || entries.size() != static_cast<size_t>(valence * valence))
      fail(path + ".entries", "expected " + std::to_string(valence * valence) +
                                  " [re, im] pairs (row-major, incoming direction major)");
    std::vector<Complex> m;
    m.reserve(entries.size());
    for (size_t i = 0; i < entries.size(); ++i) {
      const json& e = entries[i];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
        fail(path + ".entries[" + std::to_string(i) + "]", "expected [re, im]");
      m.emplace_back(e[0].get<double>(), e[1].get<double>());
    }
    return coin_from_matrix(site, valence, std::move(m));
  }
  if (kind == "coin1d") {
    if (valence != 2) fail(path, "coin1d requires a valence-2 site");
    return coin_1d(site, need_double(v, "rho", path), need_double(v, "phi", path),
                   need_double(v, "varphi", path));
  }
  if (kind == "grover") return coin_grover(site, valence);
  if (kind == "point") {
    if (valence != 2) fail(path, "point requires a valence-2 site");
    PointInteractionParams p;
    p.a = opt_double(v, "a", 1.0);
    p.b = opt_double(v, "b", 0.0);
    p.c = opt_double(v, "c", 0.0);
    p.d = opt_double(v, "d", 1.0);
    p.e = opt_double(v, "e", 0.0);
    p.theta = opt_double(v, "theta", 0.0);
    return coin_point_interaction(site, p, need_double(v, "k", path));
  }
  fail(path + ".kind", "unknown kind \"" + kind + "\" (matrix, coin1d, grover, point)");
}

}  // namespace

const BondState& GraphSpec::mark(const std::string& name) const {
  auto it = marks.find(name);
  if (it == marks.end()) {
    std::string have;
    for (const auto& [n, s] : marks) have += (have.empty() ? "" : ", ") + n;
    throw std::invalid_argument("graph spec: no mark named \"" + name + "\" (have: " +
                                (have.empty() ? "none" : have) + ")");
  }
  return it->second;
}

GraphSpec parse_graph_spec(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("graph spec: not valid JSON: ") + e.what());
  }
  const int version = need_int(doc, "schema_version", "$");
  if (version != 1)
    fail("$.schema_version", "unsupported version " + std::to_string(version));

  const json& sites = need(doc, "sites", "$");
  if (!sites.is_array() || sites.empty()) fail("$.sites", "expected a non-empty array");
  std::vector<std::pair<int, bool>> declared(sites.size(), {-1, false});  // valence, free
  for (size_t i = 0; i < sites.size(); ++i) {
    const std::string path = "$.sites[" + std::to_string(i) + "]";
    const json& s = sites[i];
    const int id = need_int(s, "id", path);
    if (id < 0 || static_cast<size_t>(id) >= sites.size())
      fail(path + ".id", "ids must be dense 0.." + std::to_string(sites.size() - 1));
    if (declared[static_cast<size_t>(id)].first >= 0) fail(path + ".id", "duplicate id");
    bool free = false;
    if (auto it = s.find("free"); it != s.end()) {
      if (!it->is_boolean()) fail(path + ".free", "expected a boolean");
      free = it->get<bool>();
    }
    declared[static_cast<size_t>(id)] = {need_int(s, "valence", path), free};
  }

  GraphBuilder builder;
  std::vector<SiteId> free_sites;
  for (size_t id = 0; id < declared.size(); ++id) {
    builder.add_site(declared[id].first, declared[id].second);
    if (declared[id].second) free_sites.push_back(static_cast<SiteId>(id));
  }

  const json& bonds = need(doc, "bonds", "$");
  if (!bonds.is_array()) fail("$.bonds", "expected an array");
  for (size_t i = 0; i < bonds.size(); ++i) {
    const std::string path = "$.bonds[" + std::to_string(i) + "]";
    const BondState a = parse_state(need(bonds[i], "a", path), path + ".a");
    const BondState b = parse_state(need(bonds[i], "b", path), path + ".b");
    builder.connect(a.site, a.dir, b.site, b.dir);
  }
  GraphTopology graph = builder.finish();

  CoinSet coins(graph);
  const json& coin_blocks = need(doc, "coins", "$");
  if (!coin_blocks.is_array()) fail("$.coins", "expected an array");
  for (size_t i = 0; i < coin_blocks.size(); ++i) {
    const std::string path = "$.coins[" + std::to_string(i) + "]";
    const int site = need_int(coin_blocks[i], "site", path);
    if (site < 0 || site >= graph.site_count()) fail(path + ".site", "no such site");
    coins.assign(parse_coin(coin_blocks[i], graph.valence(site), path));
  }
  coins.require_complete(graph);

  GraphSpec out{std::move(graph), std::move(coins), {}};
  if (auto it = doc.find("marks"); it != doc.end()) {
    if (!it->is_object()) fail("$.marks", "expected an object");
    for (const auto& [name, v] : it->items()) {
      BondState s = parse_state(v, "$.marks." + name);
      if (!out.graph.contains(s))
        fail("$.marks." + name, "state " + to_string(s) + " not in the graph");
      out.marks.emplace(name, s);
    }
  }
  return out;
}

GraphSpec load_graph_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("graph spec: cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_graph_spec(buf.str());
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string(e.what()) + " [" + path + "]");
  }
}

std::string serialize_graph_spec(const GraphTopology& g, const CoinSet& coins,
                                 const std::map<std::string, BondState>& marks) {
  ordered_json doc;
  doc["schema_version"] = 1;
  doc["sites"] = ordered_json::array();
  for (SiteId j = 0; j < g.site_count(); ++j)
    doc["sites"].push_back(
        {{"id", j}, {"valence", g.valence(j)}, {"free", g.is_free(j)}});
  doc["bonds"] = ordered_json::array();
  for (int idx = 0; idx < g.state_count(); ++idx) {
    const BondState s = g.state_at(idx);
    const BondState p = g.partner(s);
    if (p < s) continue;  // one record per undirected bond
    doc["bonds"].push_back({{"a", {{"site", s.site}, {"dir", s.dir}}},
                            {"b", {{"site", p.site}, {"dir", p.dir}}}});
  }
  doc["marks"] = ordered_json::object();
  for (const auto& [name, s] : marks)
    doc["marks"][name] = {{"site", s.site}, {"dir", s.dir}};
  doc["coins"] = ordered_json::array();
  for (SiteId j = 0; j < g.site_count(); ++j) {
    if (g.is_free(j)) continue;
    const CoinMatrix& c = coins.at(j);
    ordered_json entries = ordered_json::array();
    for (DirectionIndex in = 1; in <= c.dim(); ++in)
      for (DirectionIndex out = 1; out <= c.dim(); ++out) {
        const Complex v = c.amp(in, out);
        entries.push_back({v.real(), v.imag()});
      }
    doc["coins"].push_back({{"site", j}, {"kind", "matrix"}, {"entries", entries}});
  }
  return doc.dump(2) + "\n";
}

}  // namespace sqw
