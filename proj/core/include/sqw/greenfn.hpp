#pragma once

#include <array>
#include <map>
#include <vector>

#include "sqw/coins.hpp"
#include "sqw/exact.hpp"
#include "sqw/polynomial.hpp"
#include "sqw/topology.hpp"

namespace sqw {

// Bond-to-bond generating-function request. With absorbing_exit the exit
// state is a sink: every path is cut at its first arrival, so the z^n
// coefficient of the result is the n-step first-arrival amplitude. Without
// it the result is the plain resolvent column entry (all arrivals counted),
// which requires the exit to sit on a non-free site.
struct GreenRequest {
  BondState entry;
  BondState exit;
  bool absorbing_exit = true;
};

// One transition of the compressed system. A walk step leaving `from`
// through coin entry (site, in -> out) is traced through any free sites in
// between and lands on `to` after `power` steps total. The amplitude weight
// is the single coin entry named here; free hops contribute exactly 1.
struct CompressedEdge {
  int from = -1;
  int to = -1;
  int power = 1;
  SiteId site = -1;
  DirectionIndex in = 1;
  DirectionIndex out = 1;
};

// Linear system x = b + T x over the retained states. Retained states are
// the bond states incoming to non-free sites plus the exit state, pruned to
// those lying on some entry -> exit path. Edges that run off the end of a
// free chain are dropped: a free chain with no further scatterer behaves as
// an infinite lead and amplitude sent down it never returns.
struct CompressedSystem {
  std::vector<BondState> states;
  std::vector<CompressedEdge> edges;
  int entry_state = -1;  // -1 when the entry trace dies on a lead
  int exit_state = -1;
  int entry_power = 0;   // injection enters as z^entry_power
  bool trivial = false;  // entry trace reached the exit directly
  int trivial_power = 0;
};

CompressedSystem compress_system(const GraphTopology& g, const CoinSet& coins,
                                 const GreenRequest& req);

// Dense one-step matrix M[out][in] over all bond states in canonical order;
// column j holds the spread of a unit amplitude sitting on state j.
std::vector<std::vector<Complex>> transfer_matrix(const GraphTopology& g,
                                                  const CoinSet& coins);

// Exact generating function of the walk between two bond states, as a ratio
// of polynomials in z with den(0) = 1. Computed by Cramer's rule on the
// compressed system using fraction-free elimination.
RationalFunction<Complex> green_function(const GraphTopology& g, const CoinSet& coins,
                                         const GreenRequest& req);

// Same over Gaussian rationals; every coin in the set must carry exact
// entries. The result is fully reduced (gcd of numerator and denominator
// cancelled) and normalised to den(0) = 1.
RationalFunction<ExactComplex> green_function_exact(const GraphTopology& g,
                                                    const CoinSet& coins,
                                                    const GreenRequest& req);

// Evaluate num/den at a point. Throws PoleError when |den(z)| < pole_tol.
Complex eval_rational(const RationalFunction<Complex>& f, Complex z,
                      double pole_tol = 1e-12);
// Evaluate on the unit circle at z = e^{i gamma}.
Complex eval_at_gamma(const RationalFunction<Complex>& f, double gamma,
                      double pole_tol = 1e-12);

// Integer-scaled presentation of an exact result: both polynomials times the
// lcm of all coefficient denominators, divided by the gcd of all integer
// parts, sign-fixed so the lowest-order nonzero denominator coefficient has
// positive real part (positive imaginary part when the real part is zero).
struct IntegerForm {
  std::vector<ExactComplex> num;
  std::vector<ExactComplex> den;
};
IntegerForm integer_form(const RationalFunction<ExactComplex>& f);

}  // namespace sqw
