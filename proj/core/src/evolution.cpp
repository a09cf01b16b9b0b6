#include "sqw/evolution.hpp"

namespace sqw {

double WalkState::norm_sq() const {
  double s = 0;
  for (const auto& [state, a] : amplitudes) s += std::norm(a);
  return s;
}

double WalkState::probability(const BondState& s) const {
  auto it = amplitudes.find(s);
  return it == amplitudes.end() ? 0.0 : std::norm(it->second);
}

WalkState apply_step(const GraphTopology& g, const CoinSet& coins, const WalkState& in) {
  WalkState out;
  out.gamma_phase_count = in.gamma_phase_count + 1;
  for (const auto& [state, a] : in.amplitudes) {
    if (!g.contains(state)) throw std::invalid_argument("state off graph: " + to_string(state));
    const CoinMatrix& coin = coins.at(state.site);
    const auto& slots = g.slots(state.site);
    for (const auto& slot : slots) {
      Complex w = coin.amp(state.dir, slot.own_label);
      if (w == Complex{0, 0}) continue;
      out.amplitudes[{slot.neighbor, slot.remote_label}] += a * w;
    }
  }
  // drop exact zeros from cancellations to keep supports tight
  for (auto it = out.amplitudes.begin(); it != out.amplitudes.end();)
    it = it->second == Complex{0, 0} ? out.amplitudes.erase(it) : std::next(it);
  return out;
}

WalkState evolve(const GraphTopology& g, const CoinSet& coins, WalkState in, int n) {
  if (n < 0) throw std::invalid_argument("evolve: negative step count");
  for (int k = 0; k < n; ++k) in = apply_step(g, coins, in);
  return in;
}

std::vector<Complex> first_arrival_series(const GraphTopology& g, const CoinSet& coins,
                                          const BondState& entry, const BondState& exit,
                                          int n_max) {
  if (n_max < 0) throw std::invalid_argument("first_arrival_series: negative horizon");
  if (!g.contains(entry) || !g.contains(exit))
    throw std::invalid_argument("first_arrival_series: entry or exit off graph");
  if (entry == exit)
    throw std::invalid_argument("first_arrival_series: entry equals exit (amplitude is "
                                "trivially 1 at n = 0)");
  GraphTopology extended = g.extend_free_terminals(n_max);
  CoinSet ext_coins(extended);
  for (SiteId j = 0; j < g.site_count(); ++j)
    if (!g.is_free(j)) ext_coins.assign(coins.at(j));
  ext_coins.require_complete(extended);

  std::vector<Complex> out(static_cast<size_t>(n_max) + 1, Complex{0, 0});
  WalkState w = WalkState::unit(entry);
  for (int n = 1; n <= n_max; ++n) {
    w = apply_step(extended, ext_coins, w);
    auto it = w.amplitudes.find(exit);
    if (it != w.amplitudes.end()) {
      out[n] = it->second;
      w.amplitudes.erase(it);  // absorb: first-arrival paths end here
    }
  }
  return out;
}

Complex first_arrival_amplitude(const GraphTopology& g, const CoinSet& coins,
                                const BondState& entry, const BondState& exit, int n) {
  return first_arrival_series(g, coins, entry, exit, n).at(n);
}

}  // namespace sqw
