#pragma once

#include <optional>
#include <vector>

#include "sqw/exact.hpp"
#include "sqw/topology.hpp"
#include "sqw/types.hpp"

namespace sqw {

// Scattering matrix of one site. amp(in, out) is the amplitude for the state
// that arrived through the bond labeled `in` to leave through the bond
// labeled `out`; the diagonal is reflection back along the same bond, the
// off-diagonal entries are transmissions. Unitary within `kUnitarityTol`.
//
// Entries are complex doubles; constructors whose values are exact rationals
// (grover, free, exact matrices) also carry a Gaussian-rational copy so the
// exact pipeline reproduces them bit-for-bit. Everything else is exactified
// from the double values on demand (doubles are dyadic rationals).
class CoinMatrix {
 public:
  static constexpr double kUnitarityTol = 1e-10;

  CoinMatrix(SiteId site, int dim, std::vector<Complex> row_major_in_out);
  CoinMatrix(SiteId site, int dim, std::vector<Complex> row_major_in_out,
             std::vector<ExactComplex> exact);

  SiteId site() const { return site_; }
  int dim() const { return dim_; }
  Complex amp(DirectionIndex in, DirectionIndex out) const {
    return entries_[(in - 1) * dim_ + (out - 1)];
  }
  ExactComplex exact_amp(DirectionIndex in, DirectionIndex out) const;
  const std::vector<Complex>& entries() const { return entries_; }

  Complex reflection_amp(DirectionIndex d) const { return amp(d, d); }
  Complex transmission_amp(DirectionIndex in, DirectionIndex out) const { return amp(in, out); }

 private:
  SiteId site_;
  int dim_;
  std::vector<Complex> entries_;
  std::optional<std::vector<ExactComplex>> exact_;
};

// Residuals of the unitarity requirement: `gram` is the max-norm of
// G G* - 1 and G* G - 1; `pairwise` the worst violation of the explicit
// row/column relations (|r_in|^2 + sum |t|^2 = 1 and the cross-term
// orthogonality sums), which the gram residual bounds but which are reported
// separately because they are the form golden checks quote.
struct UnitarityResidual {
  double gram = 0.0;
  double pairwise = 0.0;
  double max() const { return gram > pairwise ? gram : pairwise; }
};
UnitarityResidual unitarity_residual(const CoinMatrix& c);

// Throws std::invalid_argument when the residual exceeds tol.
double validate_unitarity(const CoinMatrix& c, double tol = CoinMatrix::kUnitarityTol);

// Off-diagonal symmetry amp(i,l) == amp(l,i); holds for time-reversal
// invariant scatterers.
bool is_transmission_symmetric(const CoinMatrix& c, double tol = 1e-12);

// Dim-2 coin for a line site: t_{+1} = rho e^{i phi}, r_{+1} = sqrt(1-rho^2)
// e^{i varphi}, with t_{-1} = conj(t_{+1}), r_{-1} = -conj(r_{+1}).
// Direction 1 is the state moving toward higher ids (arrived through the
// lower bond), direction 2 its mirror. rho in [0, 1].
CoinMatrix coin_1d(SiteId site, double rho, double phi, double varphi);

// Dim-2 coin of a point scatterer parameterized by a real 2x2 matrix
// [[a, b], [c, d]] with ad - bc = 1, offset phases e and theta, evaluated at
// wavenumber k:
//   r(+/-) = (c +/- i k (d - a) + b k^2) / (-c + i k (d + a) + b k^2) e^{+/- i k e}
//   t(+/-) = 2 i k e^{+/- i theta}   / (-c + i k (d + a) + b k^2)
struct PointInteractionParams {
  double a = 1, b = 0, c = 0, d = 1;
  double e = 0, theta = 0;
};
CoinMatrix coin_point_interaction(SiteId site, const PointInteractionParams& p, double k);

// dim x dim coin with every off-diagonal entry 2/dim and diagonal -1 + 2/dim.
// Exact rational entries. dim = 2 gives the perfect-transmission swap.
CoinMatrix coin_grover(SiteId site, int dim);

// Arbitrary matrix, validated unitary. With require_transmission_symmetry the
// off-diagonal symmetry above is enforced at construction.
CoinMatrix coin_from_matrix(SiteId site, int dim, std::vector<Complex> row_major_in_out,
                            bool require_transmission_symmetry = false);
CoinMatrix coin_from_exact_matrix(SiteId site, int dim, std::vector<ExactComplex> row_major_in_out);

// Canonical coin of a free site: valence 2 = swap (perfect forward
// transmission), valence 1 = identity (the chain end reflects with unit
// amplitude; callers needing semi-infinite behavior extend the lead instead).
CoinMatrix free_coin(SiteId site, int valence);

// Per-site coin assignment for one graph. Free sites are implicit and may not
// be assigned; every non-free site must be before the walk operators run.
class CoinSet {
 public:
  explicit CoinSet(const GraphTopology& g);

  void assign(CoinMatrix coin);
  bool has(SiteId j) const;
  // Coin used by the walk at site j: the assigned one, or the canonical free
  // coin. Throws std::invalid_argument for an unassigned non-free site.
  const CoinMatrix& at(SiteId j) const;

  // Throws unless every non-free site has a coin of matching dimension.
  void require_complete(const GraphTopology& g) const;

 private:
  std::vector<std::optional<CoinMatrix>> coins_;
  std::vector<char> free_;
};

}  // namespace sqw
