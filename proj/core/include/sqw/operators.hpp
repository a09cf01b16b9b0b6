#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "sqw/coins.hpp"
#include "sqw/exact.hpp"
#include "sqw/polynomial.hpp"
#include "sqw/topology.hpp"

namespace sqw {

// --- step extraction --------------------------------------------------------

// Power-series coefficients c_0..c_n_max of a generating function, by the
// division recurrence against the normalised denominator. When the function
// came from an absorbing-exit request, c_n is the amplitude of first arrival
// at step n.
std::vector<Complex> step_coefficients(const RationalFunction<Complex>& g, int n_max);
std::vector<ExactComplex> step_coefficients(const RationalFunction<ExactComplex>& g,
                                            int n_max);

// |c_n|^2 of the expansion above.
double hitting_probability(const RationalFunction<Complex>& g, int n);

// --- symbolic path families -------------------------------------------------

// A named placeholder for one (or a merged group of) coin entries. The kind
// is display-only ('r' diagonal, 't' off-diagonal); the (site, in, out)
// triple decides what gets bound.
struct CoinSymbol {
  char kind = 't';
  SiteId site = 0;
  DirectionIndex in = 1;
  DirectionIndex out = 1;
};
std::string to_string(const CoinSymbol& s);  // "t[4:2>3]", "r[4:2]"

// Mapping from coin events (site, in, out) to dense symbol ids. Binding
// several events to one name merges them into a single symbol (for example
// one symbol for every transmission of a midpoint site). Events left unbound
// keep their numeric amplitude and contribute no symbol factor, so a series
// over a fully bound region has exact integer path multiplicities as
// coefficients.
class SymbolAssignment {
 public:
  // Id of `name`, created on first use; binds the event to it. Rebinding an
  // already bound event is an error.
  int bind(const std::string& name, SiteId site, DirectionIndex in, DirectionIndex out);
  int bind(const CoinSymbol& s) { return bind(to_string(s), s.site, s.in, s.out); }
  // Fresh symbol per coin entry of the site, named by to_string(CoinSymbol).
  void bind_all_entries(const GraphTopology& g, SiteId site);

  int count() const { return static_cast<int>(names_.size()); }
  const std::string& name(int id) const { return names_.at(static_cast<size_t>(id)); }
  int id_of(const std::string& name) const;                               // -1 unknown
  int lookup(SiteId site, DirectionIndex in, DirectionIndex out) const;   // -1 unbound

 private:
  std::map<std::tuple<SiteId, DirectionIndex, DirectionIndex>, int> by_event_;
  std::map<std::string, int> by_name_;
  std::vector<std::string> names_;
};

// One z^steps * prod_i symbol_i^exponents[i] term.
struct Monomial {
  int steps = 0;
  std::vector<int> exponents;  // size = assignment's symbol count at build time

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

struct MultivariateSeries {
  int symbol_count = 0;
  std::map<Monomial, Complex> terms;
};

struct SeriesLimits {
  int max_steps = 24;
  std::size_t max_terms = 2'000'000;  // live monomials across all states
};

// Sum over first-arrival trajectories entry -> exit of z^length times the
// product of bound symbols along the trajectory. The exit is absorbing and
// free leads behave as semi-infinite within the horizon, exactly as in
// first_arrival_series. Throws SeriesCapError when n_max > limits.max_steps
// or the working set outgrows limits.max_terms.
MultivariateSeries symbolic_series(const GraphTopology& g, const CoinSet& coins,
                                   const SymbolAssignment& sym, const BondState& entry,
                                   const BondState& exit, int n_max,
                                   const SeriesLimits& limits = {});

// Symbolic amplitude of every bond state after exactly n steps from the unit
// state `entry`; no absorption. Sites whose coin is never applied within the
// horizon do not need one assigned.
std::map<BondState, MultivariateSeries> symbolic_state(const GraphTopology& g,
                                                       const CoinSet& coins,
                                                       const SymbolAssignment& sym,
                                                       const BondState& entry, int n,
                                                       const SeriesLimits& limits = {});

// --- trajectory-family filters ----------------------------------------------

// Fix the multiplicities of chosen symbols. Partial mode keeps monomials
// whose exponent at every listed id matches and ignores all other ids; exact
// mode additionally requires every id that is neither listed nor exempt to
// have exponent zero.
struct PathDescriptor {
  std::vector<std::pair<int, int>> factors;  // (symbol id, required exponent)
  std::vector<int> exempt;                   // consulted in exact mode only
  bool exact = false;
};
MultivariateSeries path_filter(const MultivariateSeries& s, const PathDescriptor& d);

// Occupation split between two site groups (the two arms of an
// interferometer): keep monomials whose exponents sum to n_first - 1 over
// first_group and n_second - 1 over second_group - the entry and final exit
// events, bound to the ids in `exempt`, carry the remaining two powers - and
// that touch nothing outside groups and exempt.
MultivariateSeries arm_split_filter(const MultivariateSeries& s, int n_first, int n_second,
                                    const std::vector<int>& first_group,
                                    const std::vector<int>& second_group,
                                    const std::vector<int>& exempt);

// Numeric substitution symbol id -> value; returns coefficients by steps
// (index n = coefficient of z^n), sized to the highest step present.
std::vector<Complex> substitute(const MultivariateSeries& s,
                                const std::vector<Complex>& values);

}  // namespace sqw
