#pragma once

#include <map>
#include <vector>

#include "sqw/coins.hpp"
#include "sqw/topology.hpp"
#include "sqw/types.hpp"

namespace sqw {

// Sparse amplitude vector over bond states. The global step phase e^{i gamma}
// is never folded into the amplitudes: gamma_phase_count records how many
// factors are pending, so gamma can be substituted late (or left symbolic as
// the z variable of the generating functions).
struct WalkState {
  std::map<BondState, Complex> amplitudes;  // canonical (site, dir) order
  int gamma_phase_count = 0;

  static WalkState unit(const BondState& s) {
    WalkState w;
    w.amplitudes[s] = Complex{1, 0};
    return w;
  }

  double norm_sq() const;
  // |amplitude|^2 of one state; independent of gamma_phase_count.
  double probability(const BondState& s) const;
};

// One scattering step. Amplitude incoming to site j through the bond labeled
// in_dir spreads over all incident bonds of j: the coin's diagonal weight
// back along the arrival bond, off-diagonal weights through the others; each
// piece lands on the state incoming to the corresponding neighbor. Free sites
// use their canonical coins. Drops amplitudes with |a| = 0 exactly.
WalkState apply_step(const GraphTopology& g, const CoinSet& coins, const WalkState& in);

// n repeated steps; n = 0 returns the input.
WalkState evolve(const GraphTopology& g, const CoinSet& coins, WalkState in, int n);

// First-arrival amplitude at `exit` exactly n steps after starting in the
// unit state `entry`: the exit is absorbing, i.e. amplitude landing on it is
// recorded and removed before the next step, so each path contributes to the
// step at which it first crosses the exit bond.
//
// Free valence-1 terminals are extended internally by n pass-through sites so
// amplitude leaving through a lead cannot reflect back within the horizon;
// the finite graph behaves as if its free leads were semi-infinite.
Complex first_arrival_amplitude(const GraphTopology& g, const CoinSet& coins,
                                const BondState& entry, const BondState& exit, int n);

// All of the above for n = 0..n_max in one evolution pass (index = n).
std::vector<Complex> first_arrival_series(const GraphTopology& g, const CoinSet& coins,
                                          const BondState& entry, const BondState& exit,
                                          int n_max);

}  // namespace sqw
