#include "sqw/topology.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace sqw {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

}  // namespace

void GraphTopology::rebuild_offsets() {
  state_offset_.assign(slots_.size() + 1, 0);
  for (size_t j = 0; j < slots_.size(); ++j)
    state_offset_[j + 1] = state_offset_[j] + static_cast<int>(slots_[j].size());
}

BondState GraphTopology::state_at(int index) const {
  auto it = std::upper_bound(state_offset_.begin(), state_offset_.end(), index);
  SiteId j = static_cast<SiteId>(it - state_offset_.begin()) - 1;
  return {j, index - state_offset_[j] + 1};
}

GraphTopology GraphTopology::with_free_sites(const std::vector<SiteId>& sites) const {
  GraphTopology g = *this;
  for (SiteId j : sites) {
    if (j < 0 || j >= site_count()) fail("with_free_sites: no such site " + std::to_string(j));
    if (valence(j) > 2)
      fail("with_free_sites: site " + std::to_string(j) +
           " has valence " + std::to_string(valence(j)) +
           "; free sites must have valence <= 2");
    g.free_[j] = 1;
  }
  return g;
}

GraphTopology GraphTopology::extend_free_terminals(int extra) const {
  if (extra < 0) fail("extend_free_terminals: negative extension");
  if (extra == 0) return *this;
  GraphTopology g = *this;
  const SiteId n = site_count();
  for (SiteId j = 0; j < n; ++j) {
    if (!is_free(j) || valence(j) != 1) continue;
    // grow: j gains label 2 toward the first new site; chain of `extra`
    // pass-through sites; fresh valence-1 free terminal at the end.
    SiteId prev = j;
    DirectionIndex prev_label = 2;
    g.slots_[j].push_back({});  // fill below
    for (int k = 0; k < extra; ++k) {
      SiteId s = static_cast<SiteId>(g.slots_.size());
      g.slots_.push_back({});
      g.free_.push_back(1);
      g.slots_[s].resize(2);
      g.slots_[prev][prev_label - 1] = {s, prev_label, 1};
      g.slots_[s][0] = {prev, 1, prev_label};
      prev = s;
      prev_label = 2;
    }
    SiteId t = static_cast<SiteId>(g.slots_.size());
    g.slots_.push_back({});
    g.free_.push_back(1);
    g.slots_[t].resize(1);
    g.slots_[prev][prev_label - 1] = {t, prev_label, 1};
    g.slots_[t][0] = {prev, 1, prev_label};
  }
  g.rebuild_offsets();
  g.validate();
  return g;
}

void GraphTopology::validate() const {
  for (SiteId j = 0; j < site_count(); ++j) {
    const auto& sl = slots_[j];
    if (sl.empty()) throw std::logic_error("site " + std::to_string(j) + " has no bonds");
    for (size_t i = 0; i < sl.size(); ++i) {
      if (sl[i].own_label != static_cast<DirectionIndex>(i + 1))
        throw std::logic_error("site " + std::to_string(j) + ": slot " + std::to_string(i) +
                               " not sorted by own label");
      SiteId nb = sl[i].neighbor;
      if (nb < 0 || nb >= site_count())
        throw std::logic_error("site " + std::to_string(j) + ": neighbor out of range");
      if (nb == j) throw std::logic_error("site " + std::to_string(j) + ": self-loop");
      // reciprocity: the neighbor's record for the reverse orientation must
      // point back here with the matching pair of labels.
      DirectionIndex rl = sl[i].remote_label;
      if (rl < 1 || rl > static_cast<DirectionIndex>(slots_[nb].size()))
        throw std::logic_error("sites " + std::to_string(j) + "," + std::to_string(nb) +
                               ": remote label out of range");
      const Slot& back = slots_[nb][rl - 1];
      if (back.neighbor != j || back.remote_label != sl[i].own_label)
        throw std::logic_error("reciprocity violated between sites " + std::to_string(j) +
                               " and " + std::to_string(nb));
    }
    if (free_[j] && sl.size() > 2)
      throw std::logic_error("site " + std::to_string(j) + " marked free with valence > 2");
  }
  // partner() is a fixed-point-free involution; follows from reciprocity, but
  // cheap to assert directly.
  for (int idx = 0; idx < state_count(); ++idx) {
    BondState s = state_at(idx);
    BondState p = partner(s);
    if (p == s || partner(p) != s)
      throw std::logic_error("partner involution broken at state " + to_string(s));
  }
}

SiteId GraphBuilder::add_site(int valence, bool free) {
  if (valence < 1) fail("add_site: valence must be >= 1");
  if (free && valence > 2) fail("add_site: free sites must have valence <= 2");
  sites_.push_back({std::vector<std::optional<GraphTopology::Slot>>(valence), free});
  return static_cast<SiteId>(sites_.size() - 1);
}

void GraphBuilder::connect(SiteId a, DirectionIndex da, SiteId b, DirectionIndex db) {
  auto check = [&](SiteId s, DirectionIndex d) {
    if (s < 0 || static_cast<size_t>(s) >= sites_.size())
      fail("connect: no such site " + std::to_string(s));
    if (d < 1 || static_cast<size_t>(d) > sites_[s].by_label.size())
      fail("connect: direction " + std::to_string(d) + " out of range at site " +
           std::to_string(s));
    if (sites_[s].by_label[d - 1])
      fail("connect: (site " + std::to_string(s) + ", dir " + std::to_string(d) +
           ") used by more than one bond");
  };
  check(a, da);
  check(b, db);
  if (a == b) fail("connect: self-loop at site " + std::to_string(a));
  for (const auto& sl : sites_[a].by_label)
    if (sl && sl->neighbor == b)
      fail("connect: duplicate bond between sites " + std::to_string(a) + " and " +
           std::to_string(b));
  sites_[a].by_label[da - 1] = GraphTopology::Slot{b, da, db};
  sites_[b].by_label[db - 1] = GraphTopology::Slot{a, db, da};
}

GraphTopology GraphBuilder::finish() {
  GraphTopology g;
  g.slots_.resize(sites_.size());
  g.free_.resize(sites_.size(), 0);
  for (size_t j = 0; j < sites_.size(); ++j) {
    g.free_[j] = sites_[j].free ? 1 : 0;
    g.slots_[j].reserve(sites_[j].by_label.size());
    for (size_t i = 0; i < sites_[j].by_label.size(); ++i) {
      if (!sites_[j].by_label[i])
        fail("finish: site " + std::to_string(j) + " declares valence " +
             std::to_string(sites_[j].by_label.size()) + " but direction " +
             std::to_string(i + 1) + " is unused (dangling)");
      g.slots_[j].push_back(*sites_[j].by_label[i]);
    }
  }
  g.rebuild_offsets();
  g.validate();
  return g;
}

GraphTopology build_line(int n) {
  if (n < 2) fail("build_line: need at least 2 sites");
  GraphBuilder b;
  for (int j = 0; j < n; ++j) b.add_site(j == 0 || j == n - 1 ? 1 : 2);
  // interior label 1 faces the lower neighbor, label 2 the higher one;
  // a site's lower-neighbor bond is always its label 1 (endpoints included).
  for (int j = 0; j + 1 < n; ++j) b.connect(j, j == 0 ? 1 : 2, j + 1, 1);
  return b.finish();
}

DiamondSites diamond_sites(int left_lead, int right_lead) {
  if (left_lead < 1 || right_lead < 1)
    fail("build_diamond_with_leads: lead lengths must be >= 1");
  DiamondSites d;
  d.entry_hub = left_lead + 1;
  d.superior = left_lead + 2;
  d.inferior = left_lead + 3;
  d.exit_hub = left_lead + 4;
  d.innermost_left = left_lead;
  d.innermost_right = left_lead + 5;
  return d;
}

GraphTopology build_diamond_with_leads(int left_lead, int right_lead) {
  DiamondSites d = diamond_sites(left_lead, right_lead);
  GraphBuilder b;
  // left chain: terminal (id 0), then left_lead pass-through sites. All free.
  b.add_site(1, true);
  for (int k = 0; k < left_lead; ++k) b.add_site(2, true);
  // entry hub, arm midpoints (superior, inferior), exit hub.
  b.add_site(3);
  b.add_site(2);
  b.add_site(2);
  b.add_site(3);
  for (int k = 0; k < right_lead; ++k) b.add_site(2, true);
  b.add_site(1, true);

  // left chain bonds; lead-site label 1 faces the lower id.
  for (SiteId j = 0; j < d.entry_hub - 1; ++j) b.connect(j, j == 0 ? 1 : 2, j + 1, 1);
  b.connect(d.entry_hub - 1, 2, d.entry_hub, 1);
  // arms: hub label 2 = superior, 3 = inferior; midpoint label 1 = entry side.
  b.connect(d.entry_hub, 2, d.superior, 1);
  b.connect(d.entry_hub, 3, d.inferior, 1);
  b.connect(d.superior, 2, d.exit_hub, 2);
  b.connect(d.inferior, 2, d.exit_hub, 3);
  // right chain.
  SiteId last = d.exit_hub + 1 + right_lead;  // right terminal
  b.connect(d.exit_hub, 1, d.innermost_right, 1);
  for (SiteId j = d.innermost_right; j < last; ++j) b.connect(j, 2, j + 1, 1);
  return b.finish();
}

BondState diamond_entry_state(int left_lead, int right_lead) {
  return {diamond_sites(left_lead, right_lead).entry_hub, 1};
}

BondState diamond_exit_state(int left_lead, int right_lead) {
  return {diamond_sites(left_lead, right_lead).innermost_right, 1};
}

}  // namespace sqw
