#include "sqw/operators.hpp"

#include <cmath>
#include <stdexcept>

namespace sqw {

std::vector<Complex> step_coefficients(const RationalFunction<Complex>& g, int n_max) {
  if (n_max < 0) throw std::invalid_argument("step_coefficients: negative horizon");
  return g.taylor(n_max);
}

std::vector<ExactComplex> step_coefficients(const RationalFunction<ExactComplex>& g,
                                            int n_max) {
  if (n_max < 0) throw std::invalid_argument("step_coefficients: negative horizon");
  return g.taylor(n_max);
}

double hitting_probability(const RationalFunction<Complex>& g, int n) {
  return std::norm(step_coefficients(g, n).at(static_cast<size_t>(n)));
}

std::string to_string(const CoinSymbol& s) {
  std::string out(1, s.kind);
  out += "[" + std::to_string(s.site) + ":" + std::to_string(s.in);
  if (s.out != s.in) out += ">" + std::to_string(s.out);
  out += "]";
  return out;
}

int SymbolAssignment::bind(const std::string& name, SiteId site, DirectionIndex in,
                           DirectionIndex out) {
  auto event = std::make_tuple(site, in, out);
  if (by_event_.count(event))
    throw std::invalid_argument("symbol already bound for coin entry (" +
                                std::to_string(site) + ", " + std::to_string(in) + ", " +
                                std::to_string(out) + ")");
  auto [it, fresh] = by_name_.try_emplace(name, count());
  if (fresh) names_.push_back(name);
  by_event_[event] = it->second;
  return it->second;
}

void SymbolAssignment::bind_all_entries(const GraphTopology& g, SiteId site) {
  const int valence = g.valence(site);
  for (DirectionIndex in = 1; in <= valence; ++in)
    for (DirectionIndex out = 1; out <= valence; ++out)
      bind(CoinSymbol{in == out ? 'r' : 't', site, in, out});
}

int SymbolAssignment::id_of(const std::string& name) const {
  auto it = by_name_.find(name);
  return it == by_name_.end() ? -1 : it->second;
}

int SymbolAssignment::lookup(SiteId site, DirectionIndex in, DirectionIndex out) const {
  auto it = by_event_.find(std::make_tuple(site, in, out));
  return it == by_event_.end() ? -1 : it->second;
}

namespace {

using TermMap = std::map<Monomial, Complex>;

// Shared stepping core of the two symbolic walks. The per-state term maps
// play the role of amplitudes; one step spreads every term through the
// site's coin, appending the bound symbol (or multiplying the numeric entry
// when unbound).
class SymbolicWalk {
 public:
  SymbolicWalk(const GraphTopology& g, const CoinSet& coins, const SymbolAssignment& sym,
               const BondState& entry, int n_max, const SeriesLimits& limits)
      : limits_(limits), sym_(sym), extended_(g.extend_free_terminals(n_max)),
        coins_(extended_) {
    if (n_max < 0) throw std::invalid_argument("symbolic walk: negative horizon");
    if (n_max > limits.max_steps)
      throw SeriesCapError("symbolic walk: horizon " + std::to_string(n_max) +
                           " exceeds the configured cap of " +
                           std::to_string(limits.max_steps) + " steps");
    if (!g.contains(entry)) throw std::invalid_argument("symbolic walk: entry off graph");
    for (SiteId j = 0; j < g.site_count(); ++j)
      if (!g.is_free(j) && coins.has(j)) coins_.assign(coins.at(j));
    Monomial unit;
    unit.exponents.assign(static_cast<size_t>(sym.count()), 0);
    pending_[entry][unit] = Complex{1.0, 0.0};
  }

  void step(int n) {
    std::map<BondState, TermMap> next;
    std::size_t live = 0;
    for (const auto& [state, terms] : pending_) {
      const CoinMatrix& coin = coins_.at(state.site);
      for (const GraphTopology::Slot& slot : extended_.slots(state.site)) {
        const Complex w = coin.amp(state.dir, slot.own_label);
        const int sid = sym_.lookup(state.site, state.dir, slot.own_label);
        // A bound event contributes its symbol regardless of the coin's
        // numeric entry: the series enumerates trajectories, and a zero is
        // just one possible value of the placeholder.
        if (sid < 0 && w == Complex{0.0, 0.0}) continue;
        TermMap& bucket = next[{slot.neighbor, slot.remote_label}];
        for (const auto& [mono, c] : terms) {
          Monomial m = mono;
          m.steps = n;
          if (sid >= 0) ++m.exponents[static_cast<size_t>(sid)];
          bucket[m] += sid >= 0 ? c : c * w;
        }
      }
    }
    for (auto& [state, terms] : next) {
      for (auto it = terms.begin(); it != terms.end();)
        it = it->second == Complex{0.0, 0.0} ? terms.erase(it) : std::next(it);
      live += terms.size();
    }
    if (live > limits_.max_terms)
      throw SeriesCapError("symbolic walk: " + std::to_string(live) +
                           " live terms exceed the cap of " +
                           std::to_string(limits_.max_terms));
    pending_ = std::move(next);
  }

  // Remove and return the terms sitting on `state` (empty map if none).
  TermMap absorb(const BondState& state) {
    auto it = pending_.find(state);
    if (it == pending_.end()) return {};
    TermMap out = std::move(it->second);
    pending_.erase(it);
    return out;
  }

  const std::map<BondState, TermMap>& pending() const { return pending_; }

 private:
  SeriesLimits limits_;
  const SymbolAssignment& sym_;
  GraphTopology extended_;
  CoinSet coins_;
  std::map<BondState, TermMap> pending_;
};

}  // namespace

MultivariateSeries symbolic_series(const GraphTopology& g, const CoinSet& coins,
                                   const SymbolAssignment& sym, const BondState& entry,
                                   const BondState& exit, int n_max,
                                   const SeriesLimits& limits) {
  if (!g.contains(exit)) throw std::invalid_argument("symbolic_series: exit off graph");
  if (entry == exit)
    throw std::invalid_argument("symbolic_series: entry equals exit (trivially 1 at n = 0)");
  SymbolicWalk walk(g, coins, sym, entry, n_max, limits);
  MultivariateSeries out;
  out.symbol_count = sym.count();
  for (int n = 1; n <= n_max; ++n) {
    walk.step(n);
    for (auto& [mono, c] : walk.absorb(exit)) out.terms.emplace(mono, c);
  }
  return out;
}

std::map<BondState, MultivariateSeries> symbolic_state(const GraphTopology& g,
                                                       const CoinSet& coins,
                                                       const SymbolAssignment& sym,
                                                       const BondState& entry, int n,
                                                       const SeriesLimits& limits) {
  SymbolicWalk walk(g, coins, sym, entry, n, limits);
  for (int k = 1; k <= n; ++k) walk.step(k);
  std::map<BondState, MultivariateSeries> out;
  for (const auto& [state, terms] : walk.pending()) {
    if (!g.contains(state)) continue;  // amplitude out on an extended lead
    MultivariateSeries s;
    s.symbol_count = sym.count();
    s.terms = terms;
    out.emplace(state, std::move(s));
  }
  return out;
}

MultivariateSeries path_filter(const MultivariateSeries& s, const PathDescriptor& d) {
  std::vector<int> required(static_cast<size_t>(s.symbol_count), -1);
  for (const auto& [id, power] : d.factors) {
    if (id < 0 || id >= s.symbol_count)
      throw std::invalid_argument("path_filter: symbol id out of range");
    if (power < 0) throw std::invalid_argument("path_filter: negative exponent");
    required[static_cast<size_t>(id)] = power;
  }
  std::vector<char> free_id(static_cast<size_t>(s.symbol_count), 0);
  for (int id : d.exempt) {
    if (id < 0 || id >= s.symbol_count)
      throw std::invalid_argument("path_filter: exempt id out of range");
    free_id[static_cast<size_t>(id)] = 1;
  }
  MultivariateSeries out;
  out.symbol_count = s.symbol_count;
  for (const auto& [mono, c] : s.terms) {
    bool keep = true;
    for (size_t i = 0; i < required.size() && keep; ++i) {
      const int e = mono.exponents[i];
      if (required[i] >= 0)
        keep = e == required[i];
      else if (d.exact && !free_id[i])
        keep = e == 0;
    }
    if (keep) out.terms.emplace(mono, c);
  }
  return out;
}

MultivariateSeries arm_split_filter(const MultivariateSeries& s, int n_first, int n_second,
                                    const std::vector<int>& first_group,
                                    const std::vector<int>& second_group,
                                    const std::vector<int>& exempt) {
  if (n_first < 1 || n_second < 1)
    throw std::invalid_argument("arm_split_filter: occupation counts must be >= 1");
  enum Role : char { kOutside = 0, kFirst, kSecond, kExempt };
  std::vector<char> role(static_cast<size_t>(s.symbol_count), kOutside);
  auto mark = [&role, &s](const std::vector<int>& ids, char r) {
    for (int id : ids) {
      if (id < 0 || id >= s.symbol_count)
        throw std::invalid_argument("arm_split_filter: symbol id out of range");
      if (role[static_cast<size_t>(id)] != kOutside)
        throw std::invalid_argument("arm_split_filter: symbol listed twice");
      role[static_cast<size_t>(id)] = r;
    }
  };
  mark(first_group, kFirst);
  mark(second_group, kSecond);
  mark(exempt, kExempt);

  MultivariateSeries out;
  out.symbol_count = s.symbol_count;
  for (const auto& [mono, c] : s.terms) {
    int sum_first = 0, sum_second = 0;
    bool keep = true;
    for (size_t i = 0; i < mono.exponents.size() && keep; ++i) {
      switch (role[i]) {
        case kFirst: sum_first += mono.exponents[i]; break;
        case kSecond: sum_second += mono.exponents[i]; break;
        case kExempt: break;
        default: keep = mono.exponents[i] == 0;
      }
    }
    if (keep && sum_first == n_first - 1 && sum_second == n_second - 1)
      out.terms.emplace(mono, c);
  }
  return out;
}

std::vector<Complex> substitute(const MultivariateSeries& s,
                                const std::vector<Complex>& values) {
  if (static_cast<int>(values.size()) != s.symbol_count)
    throw std::invalid_argument("substitute: need one value per symbol");
  int top = -1;
  for (const auto& [mono, c] : s.terms) top = std::max(top, mono.steps);
  std::vector<Complex> out(static_cast<size_t>(top + 1), Complex{0.0, 0.0});
  for (const auto& [mono, c] : s.terms) {
    Complex v = c;
    for (size_t i = 0; i < mono.exponents.size(); ++i)
      for (int k = 0; k < mono.exponents[i]; ++k) v *= values[i];
    out[static_cast<size_t>(mono.steps)] += v;
  }
  return out;
}

}  // namespace sqw
