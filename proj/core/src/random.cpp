#include "sqw/random.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>

namespace sqw {

std::vector<Complex> random_unitary(int dim, Rng& rng) {
  if (dim < 1) throw std::invalid_argument("random_unitary: dim must be >= 1");
  std::normal_distribution<double> gauss(0.0, 1.0);
  // columns of a complex Gaussian matrix
  std::vector<std::vector<Complex>> col(static_cast<size_t>(dim),
                                        std::vector<Complex>(static_cast<size_t>(dim)));
  for (auto& c : col)
    for (auto& v : c) v = Complex(gauss(rng), gauss(rng));
  for (int k = 0; k < dim; ++k) {
    for (int j = 0; j < k; ++j) {
      Complex proj{0.0, 0.0};
      for (int i = 0; i < dim; ++i) proj += std::conj(col[j][i]) * col[k][i];
      for (int i = 0; i < dim; ++i) col[k][i] -= proj * col[j][i];
    }
    double nrm = 0.0;
    for (int i = 0; i < dim; ++i) nrm += std::norm(col[k][i]);
    nrm = std::sqrt(nrm);
    // a Gaussian column is dependent on the previous ones with probability 0;
    // re-draw defensively if cancellation ate it anyway
    if (nrm < 1e-8) {
      for (auto& v : col[k]) v = Complex(gauss(rng), gauss(rng));
      --k;
      continue;
    }
    for (auto& v : col[k]) v /= nrm;
  }
  std::vector<Complex> row_major(static_cast<size_t>(dim) * dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) row_major[static_cast<size_t>(i) * dim + j] = col[j][i];
  return row_major;
}

Complex random_in_disk(double radius, Rng& rng) {
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  const double r = radius * std::sqrt(uni(rng));
  const double phi = 2.0 * M_PI * uni(rng);
  return std::polar(r, phi);
}

RandomWalkInstance random_walk_instance(int core_sites, int extra_edges, Rng& rng) {
  if (core_sites < 2)
    throw std::invalid_argument("random_walk_instance: need at least 2 core sites");
  if (extra_edges < 0)
    throw std::invalid_argument("random_walk_instance: negative edge count");

  auto uniform = [&rng](int lo, int hi) {  // inclusive
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };

  // random spanning tree, then extra chords between non-adjacent pairs
  std::set<std::pair<int, int>> edge_set;
  for (int j = 1; j < core_sites; ++j) edge_set.emplace(uniform(0, j - 1), j);
  for (int tries = 0, added = 0; added < extra_edges && tries < 50 * extra_edges; ++tries) {
    int u = uniform(0, core_sites - 1), v = uniform(0, core_sites - 1);
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    if (edge_set.emplace(u, v).second) ++added;
  }
  std::vector<std::pair<int, int>> edges(edge_set.begin(), edge_set.end());

  const int entry_site = uniform(0, core_sites - 1);
  const int exit_site = uniform(0, core_sites - 1);
  const SiteId entry_lead = core_sites, exit_lead = core_sites + 1;
  edges.emplace_back(entry_site, entry_lead);
  edges.emplace_back(exit_site, exit_lead);

  std::vector<int> valence(static_cast<size_t>(core_sites) + 2, 0);
  for (const auto& [u, v] : edges) {
    ++valence[static_cast<size_t>(u)];
    ++valence[static_cast<size_t>(v)];
  }

  // per-site shuffled label pool; each incident edge consumes the next label
  std::vector<std::vector<DirectionIndex>> labels(valence.size());
  for (size_t j = 0; j < valence.size(); ++j) {
    labels[j].resize(static_cast<size_t>(valence[j]));
    std::iota(labels[j].begin(), labels[j].end(), 1);
    std::shuffle(labels[j].begin(), labels[j].end(), rng);
  }

  GraphBuilder builder;
  for (int j = 0; j < core_sites; ++j) builder.add_site(valence[static_cast<size_t>(j)]);
  builder.add_site(1, true);
  builder.add_site(1, true);

  std::vector<size_t> next_label(valence.size(), 0);
  auto take = [&](int site) {
    return labels[static_cast<size_t>(site)][next_label[static_cast<size_t>(site)]++];
  };
  DirectionIndex entry_dir = 1;
  for (const auto& [u, v] : edges) {
    const DirectionIndex du = take(u), dv = take(v);
    builder.connect(static_cast<SiteId>(u), du, static_cast<SiteId>(v), dv);
    if (v == entry_lead) entry_dir = du;  // label of the entry lead bond at its core site
  }

  GraphTopology graph = builder.finish();
  CoinSet coins(graph);
  for (int j = 0; j < core_sites; ++j)
    coins.assign(coin_from_matrix(static_cast<SiteId>(j), valence[static_cast<size_t>(j)],
                                  random_unitary(valence[static_cast<size_t>(j)], rng)));
  return {std::move(graph), std::move(coins),
          BondState{static_cast<SiteId>(entry_site), entry_dir}, BondState{exit_lead, 1}};
}

}  // namespace sqw
