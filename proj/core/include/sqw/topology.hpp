#pragma once

#include <optional>
#include <vector>

#include "sqw/types.hpp"

namespace sqw {

// Finite undirected simple graph with per-site direction labels.
//
// Each site j has valence K_j and K_j incident bonds. The bond between j and a
// neighbor carries two basis states, one per orientation; the state incoming
// to j through that bond has a direction label in 1..K_j, distinct per bond
// (the site's "own labels"). For each incident bond the site also records the
// label the opposite endpoint assigned to the reverse orientation, so the walk
// can scatter amplitude without searching.
//
// Immutable after construction; safe to share across threads read-only.
class GraphTopology {
 public:
  // One incident-bond record, from the owning site's point of view.
  struct Slot {
    SiteId neighbor = 0;            // opposite endpoint
    DirectionIndex own_label = 1;   // label of the state incoming here
    DirectionIndex remote_label = 1;  // label of the state incoming to `neighbor`
  };

  SiteId site_count() const { return static_cast<SiteId>(slots_.size()); }
  int valence(SiteId j) const { return static_cast<int>(slots_[j].size()); }
  bool is_free(SiteId j) const { return free_[j] != 0; }

  // Incident bonds of j in slot order (slots are sorted by own_label,
  // so slot i holds own_label i+1).
  const std::vector<Slot>& slots(SiteId j) const { return slots_[j]; }
  const Slot& slot_for_label(SiteId j, DirectionIndex d) const { return slots_[j][d - 1]; }

  bool contains(const BondState& s) const {
    return s.site >= 0 && s.site < site_count() && s.dir >= 1 &&
           s.dir <= static_cast<DirectionIndex>(slots_[s.site].size());
  }

  // Opposite-orientation state on the same bond. Fixed-point-free involution.
  BondState partner(const BondState& s) const {
    const Slot& sl = slot_for_label(s.site, s.dir);
    return {sl.neighbor, sl.remote_label};
  }

  // Canonical dense indexing of bond states, (site, dir) lexicographic.
  int state_count() const { return state_offset_.back(); }
  int state_index(const BondState& s) const { return state_offset_[s.site] + s.dir - 1; }
  BondState state_at(int index) const;

  int undirected_bond_count() const { return state_count() / 2; }

  // Copy with the given sites marked free. Free sites are perfect forward
  // transmitters (valence <= 2) and take no coin.
  GraphTopology with_free_sites(const std::vector<SiteId>& sites) const;

  // Copy with every free valence-1 terminal grown into a chain of `extra`
  // pass-through free sites ending in a fresh free terminal. Existing states
  // keep their (site, dir) identity; old terminals gain direction 2.
  // Used to realize semi-infinite leads for a bounded number of steps.
  GraphTopology extend_free_terminals(int extra) const;

  // Consistency check: labels in range and distinct, reciprocity of the
  // slot records, partner() an involution. Throws std::logic_error naming the
  // offending sites. Builders call this; exposed for hand-assembled graphs.
  void validate() const;

 private:
  friend class GraphBuilder;
  std::vector<std::vector<Slot>> slots_;
  std::vector<char> free_;
  std::vector<int> state_offset_;  // per site, plus trailing total

  void rebuild_offsets();
};

// Incremental construction: declare sites with valences, then connect
// (site, dir) endpoint pairs. finish() checks that every declared direction
// was used exactly once (no dangling bonds) and returns the graph.
class GraphBuilder {
 public:
  SiteId add_site(int valence, bool free = false);
  void connect(SiteId a, DirectionIndex da, SiteId b, DirectionIndex db);
  GraphTopology finish();

 private:
  struct Pending {
    std::vector<std::optional<GraphTopology::Slot>> by_label;
    bool free = false;
  };
  std::vector<Pending> sites_;
};

// Line of n sites, 0..n-1. Interior sites have valence 2 with label 1 on the
// bond to the lower neighbor (the state moving toward higher ids) and label 2
// on the bond to the higher neighbor; endpoints have valence 1. No free marks.
GraphTopology build_line(int n);

// Two valence-3 hubs joined by a pair of two-bond arms, with a lead chain on
// each hub: `left_lead` / `right_lead` pass-through sites plus a terminal,
// all marked free.
//
// Site ids, for L = left_lead: 0 the left terminal, 1..L the left chain
// pass-throughs, L+1 = entry hub, L+2 / L+3 the two arm midpoints (superior /
// inferior), L+4 = exit hub, L+5..L+4+right_lead the right chain inward-out,
// last id the right terminal.
//
// Labels at the hubs: 1 = lead bond, 2 = superior arm, 3 = inferior arm.
// At the arm midpoints: 1 = entry-hub side, 2 = exit-hub side. At lead sites:
// 1 = bond toward the lower site id.
struct DiamondSites {
  SiteId entry_hub, superior, inferior, exit_hub;
  SiteId innermost_left;   // lead site adjacent to entry_hub
  SiteId innermost_right;  // lead site adjacent to exit_hub
};
GraphTopology build_diamond_with_leads(int left_lead, int right_lead);
DiamondSites diamond_sites(int left_lead, int right_lead);

// Marked entry state for the diamond above: incoming to the entry hub along
// the lead bond. Exit: incoming to the innermost right lead site from the
// exit hub.
BondState diamond_entry_state(int left_lead, int right_lead);
BondState diamond_exit_state(int left_lead, int right_lead);

}  // namespace sqw
