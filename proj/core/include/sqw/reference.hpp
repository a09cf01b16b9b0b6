#pragma once

#include <array>

#include "sqw/coins.hpp"
#include "sqw/polynomial.hpp"

namespace sqw {

// Independently derived closed forms used to cross-check the linear solver.
// Everything here is obtained by resumming path families by hand (geometric
// series over loops), never by solving the walk's linear system.

// Transmission generating function of the two-arm interferometer built by
// build_diamond_with_leads: first-arrival amplitudes on the far lead for a
// walker injected on the near lead, one z per step. Hub coins use labels
// 1 = lead, 2 = superior arm, 3 = inferior arm; midpoint coins use
// 1 = entry-hub side, 2 = exit-hub side. Valid for arbitrary (not
// necessarily unitary) coin entries.
RationalFunction<Complex> reference_diamond_transmission(const CoinMatrix& entry_hub,
                                                         const CoinMatrix& superior,
                                                         const CoinMatrix& inferior,
                                                         const CoinMatrix& exit_hub);

// The same object when both hubs scatter arm-symmetrically (all lead/arm
// transmissions t_hub, arm reflections r_hub) and the midpoints share
// (t_mid, r_mid):
//   2 t_hub^2 t_mid z^3
//   / (1 - 2 (t_hub+r_hub) r_mid z^2 - (t_hub+r_hub)^2 (t_mid^2-r_mid^2) z^4).
RationalFunction<Complex> reference_diamond_transmission_symmetric(Complex t_hub,
                                                                   Complex r_hub,
                                                                   Complex t_mid,
                                                                   Complex r_mid);

// First-arrival probability |h_n|^2 of the symmetric interferometer, from
// the partial-fraction expansion of the function above: zero for even n and
// for n < 3; otherwise, with p = (n-1)/2,
//   |t_hub^2 (t_hub+r_hub)^{p-1}|^2
//     * |(t_mid+r_mid)^p - (-1)^p (t_mid-r_mid)^p|^2.
double reference_diamond_first_arrival_prob(Complex t_hub, Complex r_hub,
                                            Complex t_mid, Complex r_mid, int n);

// Steady coefficients of the two-coin line (coin sites "left", "right", a
// semi-infinite lead on each side) for a unit wave injected from the left,
// one z per step: r and t are the reflection and transmission generating
// amplitudes referenced to the coin sites; a and b the coefficients of the
// two interior bond orientations (incoming to the left site from the right,
// and incoming to the right site from the left).
struct TwoSiteCoefficients {
  Complex r, t, a, b;
};
TwoSiteCoefficients reference_twosite_coefficients(const CoinMatrix& left,
                                                   const CoinMatrix& right, Complex z);

// Continuum multiple-scattering Green function for six equally spaced
// point scatterers at positions 0..5, each described by a dim-2 coin
// ((1,1) left-incidence reflection, (1,2) left-to-right transmission,
// (2,1) right-to-left transmission, (2,2) right-incidence reflection),
// between a source at x_i in (0,1) and an observer at x_f in (3,4), with
// the per-unit-length propagation factor e^{ik} replaced by z. Both
// positions must sit at half-integer points so that every term of the
// multiple-scattering sum carries an integer power of z.
Complex reference_sixsite_green(const std::array<CoinMatrix, 6>& coins, double x_i,
                                double x_f, Complex z);

}  // namespace sqw
