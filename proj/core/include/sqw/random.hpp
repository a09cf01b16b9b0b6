#pragma once

#include <random>
#include <vector>

#include "sqw/coins.hpp"
#include "sqw/topology.hpp"

namespace sqw {

using Rng = std::mt19937_64;

// Random dim x dim unitary (row-major): complex Gaussian matrix
// orthonormalized column by column (modified Gram-Schmidt). Generic rather
// than measure-perfect, which is what randomized checks need.
std::vector<Complex> random_unitary(int dim, Rng& rng);

// Uniform draw from the closed complex disk of the given radius.
Complex random_in_disk(double radius, Rng& rng);

// A random connected walk instance for solver/oracle comparisons:
// `core_sites` coin sites wired as a random spanning tree plus up to
// `extra_edges` additional edges, direction labels shuffled per site, a
// random unitary coin on every core site, and two single-site free leads.
// The entry state comes in from the first lead toward its core site; the
// exit state sits on the second lead's bond, incoming to the lead site, so
// first arrivals there are departures from the core.
struct RandomWalkInstance {
  GraphTopology graph;
  CoinSet coins;
  BondState entry;
  BondState exit;
};
RandomWalkInstance random_walk_instance(int core_sites, int extra_edges, Rng& rng);

}  // namespace sqw
