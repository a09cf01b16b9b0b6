#include "sqw/reference.hpp"

#include <cmath>
#include <stdexcept>

namespace sqw {

namespace {

using RF = RationalFunction<Complex>;
using Poly = Polynomial<Complex>;

// Integer power without the pow(0, 0) -> NaN trap of std::pow on complexes.
Complex ipow(Complex base, int e) {
  if (e < 0) return Complex(1.0, 0.0) / ipow(base, -e);
  Complex out(1.0, 0.0);
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

void require_dim(const CoinMatrix& c, int dim, const char* role) {
  if (c.dim() != dim)
    throw std::invalid_argument(std::string("reference: ") + role + " coin must have dim " +
                                std::to_string(dim));
}

}  // namespace

RationalFunction<Complex> reference_diamond_transmission(const CoinMatrix& entry_hub,
                                                         const CoinMatrix& superior,
                                                         const CoinMatrix& inferior,
                                                         const CoinMatrix& exit_hub) {
  require_dim(entry_hub, 3, "entry hub");
  require_dim(exit_hub, 3, "exit hub");
  require_dim(superior, 2, "superior midpoint");
  require_dim(inferior, 2, "inferior midpoint");

  const CoinMatrix &a = entry_hub, &b = superior, &c = inferior, &d = exit_hub;
  // Hub labels: 1 lead, 2 superior, 3 inferior. Midpoint labels: 1 faces the
  // entry hub, 2 faces the exit hub. Shorthand below: p = superior side,
  // m = inferior side, 0 = lead; first index incoming, second outgoing.
  const Complex t0p_a = a.amp(1, 2), t0m_a = a.amp(1, 3);
  const Complex tpm_a = a.amp(2, 3), tmp_a = a.amp(3, 2);
  const Complex rpp_a = a.amp(2, 2), rmm_a = a.amp(3, 3);
  const Complex tpm_b = b.amp(1, 2), tmp_b = b.amp(2, 1);
  const Complex rpp_b = b.amp(1, 1), rmm_b = b.amp(2, 2);
  const Complex tpm_c = c.amp(1, 2), tmp_c = c.amp(2, 1);
  const Complex rpp_c = c.amp(1, 1), rmm_c = c.amp(2, 2);
  const Complex tp0_d = d.amp(2, 1), tm0_d = d.amp(3, 1);
  const Complex tpm_d = d.amp(2, 3), tmp_d = d.amp(3, 2);
  const Complex rpp_d = d.amp(2, 2), rmm_d = d.amp(3, 3);

  // Every block amplitude below shares the same denominator f, so the
  // resummation is done on numerators over the polynomial ring and the f^2
  // cancellation between the source sum and the outer loop happens once,
  // symbolically. Keeping the degrees low (11/12 instead of the naive
  // product pile-up) is what makes point evaluation of the result stable.
  const auto mono = [](Complex c, int k) { return Poly::monomial(c, k); };
  const Poly one = Poly::one();

  // Loop content of the midpoint--exit-hub cell (walker bouncing between the
  // two midpoints through the exit hub before committing).
  const Poly f = (one - mono(rmm_b * rpp_d, 2)) * (one - mono(rmm_c * rmm_d, 2)) -
                 mono(tpm_d * tmp_d * rmm_b * rmm_c, 4);

  // Composite amplitudes of the midpoint/exit-hub block as seen from the
  // entry hub (numerators over f): enter along one arm, come back along an
  // arm or leave to the far lead. One mirror pair each; the mirror swaps the
  // two arm identities everywhere except at the midpoints themselves.
  const Poly n_p0 =
      (mono(tpm_b * tp0_d, 0) + mono(tpm_b * rmm_c * (tpm_d * tm0_d - rmm_d * tp0_d), 2)) *
      mono(1.0, 1);
  const Poly n_m0 =
      (mono(tpm_c * tm0_d, 0) + mono(tpm_c * rmm_b * (tmp_d * tp0_d - rpp_d * tm0_d), 2)) *
      mono(1.0, 1);
  const Poly n_pm = mono(tpm_b * tpm_d * tmp_c, 2);
  const Poly n_mp = mono(tpm_c * tmp_d * tmp_b, 2);
  const Poly n_rp = f * mono(rpp_b, 0) + mono(tpm_b * tmp_b * rpp_d, 2) +
                    mono(tpm_b * tmp_b * rmm_c * (tmp_d * tpm_d - rpp_d * rmm_d), 4);
  const Poly n_rm = f * mono(rpp_c, 0) + mono(tpm_c * tmp_c * rmm_d, 2) +
                    mono(tpm_c * tmp_c * rmm_b * (tpm_d * tmp_d - rmm_d * rpp_d), 4);

  // Round trips block -> entry hub -> block, sorted by which arm the walker
  // re-enters: stay superior, stay inferior, and the two crossings.
  const Poly loop_pp = n_pm * mono(tmp_a, 0) + n_rp * mono(rpp_a, 0);
  const Poly loop_mm = n_mp * mono(tpm_a, 0) + n_rm * mono(rmm_a, 0);
  const Poly loop_pm = n_pm * mono(rmm_a, 0) + n_rp * mono(tpm_a, 0);
  const Poly loop_mp = n_mp * mono(rpp_a, 0) + n_rm * mono(tmp_a, 0);

  // Outer loop content over f^2, and the two source terms over the same f^2;
  // the shared factor drops out of the ratio.
  const Poly z2 = mono(1.0, 2);
  const Poly g = (f - loop_pp * z2) * (f - loop_mm * z2) - loop_pm * loop_mp * z2 * z2;
  const Poly p_sup = n_p0 * f + (n_m0 * loop_pm - n_p0 * loop_mm) * z2;
  const Poly p_inf = n_m0 * f + (n_p0 * loop_mp - n_m0 * loop_pp) * z2;

  RF total{(p_sup * mono(t0p_a, 0) + p_inf * mono(t0m_a, 0)) * z2, g};
  total.normalize();
  return total;
}

RationalFunction<Complex> reference_diamond_transmission_symmetric(Complex t_hub,
                                                                   Complex r_hub,
                                                                   Complex t_mid,
                                                                   Complex r_mid) {
  const Complex s = t_hub + r_hub;
  Poly num = Poly::monomial(2.0 * t_hub * t_hub * t_mid, 3);
  Poly den = Poly::one() + Poly::monomial(-2.0 * s * r_mid, 2) +
             Poly::monomial(-s * s * (t_mid * t_mid - r_mid * r_mid), 4);
  return {std::move(num), std::move(den)};
}

double reference_diamond_first_arrival_prob(Complex t_hub, Complex r_hub, Complex t_mid,
                                            Complex r_mid, int n) {
  if (n < 3 || n % 2 == 0) return 0.0;
  const int p = (n - 1) / 2;
  const Complex stem = t_hub * t_hub * ipow(t_hub + r_hub, p - 1);
  const Complex parity = p % 2 ? Complex(-1.0, 0.0) : Complex(1.0, 0.0);
  const Complex mix = ipow(t_mid + r_mid, p) - parity * ipow(t_mid - r_mid, p);
  return std::norm(stem) * std::norm(mix);
}

TwoSiteCoefficients reference_twosite_coefficients(const CoinMatrix& left,
                                                   const CoinMatrix& right, Complex z) {
  require_dim(left, 2, "left");
  require_dim(right, 2, "right");
  const Complex rp0 = left.amp(1, 1), tp0 = left.amp(1, 2);
  const Complex tm0 = left.amp(2, 1), rm0 = left.amp(2, 2);
  const Complex rp1 = right.amp(1, 1), tp1 = right.amp(1, 2);
  const Complex z2 = z * z;
  const Complex loop = 1.0 - rp1 * rm0 * z2;  // bounce between the two sites
  TwoSiteCoefficients out;
  out.b = tp0 / loop;
  out.a = tp0 * rp1 * z2 / loop;
  out.t = tp1 * out.b;
  out.r = rp0 + tm0 * out.a;
  return out;
}

Complex reference_sixsite_green(const std::array<CoinMatrix, 6>& coins, double x_i,
                                double x_f, Complex z) {
  for (const CoinMatrix& c : coins) require_dim(c, 2, "scatterer");
  if (!(x_i > 0.0 && x_i < 1.0) || !(x_f > 3.0 && x_f < 4.0))
    throw std::invalid_argument(
        "reference_sixsite_green: source must lie in (0,1) and observer in (3,4)");
  auto half_integer = [](double x) { return std::abs(2.0 * x - std::round(2.0 * x)) < 1e-12; };
  if (!half_integer(x_i) || !half_integer(x_f))
    throw std::invalid_argument("reference_sixsite_green: positions must be half-integers");
  if (std::abs(z) < 1e-300)
    throw std::invalid_argument("reference_sixsite_green: z must be nonzero");

  // Internal frame: scatterers at -3..2, source region (-3,-2), observer
  // region (0,1); the published positions 0..5 are shifted by -3. The i-th
  // scatterer's coefficients, j in -3..2:
  auto rp = [&](int j) { return coins[static_cast<size_t>(j + 3)].amp(1, 1); };
  auto tp = [&](int j) { return coins[static_cast<size_t>(j + 3)].amp(1, 2); };
  auto tm = [&](int j) { return coins[static_cast<size_t>(j + 3)].amp(2, 1); };
  auto rm = [&](int j) { return coins[static_cast<size_t>(j + 3)].amp(2, 2); };
  const double xi = x_i - 3.0, xf = x_f - 3.0;

  const Complex z2 = z * z, z4 = z2 * z2, z6 = z4 * z2;

  // Reflection of everything left of the source region (single scatterer).
  const Complex r_left = rm(-3) * z6;
  // Reflection of everything right of the observer region (two scatterers).
  const Complex r_right =
      rp(1) * z2 + tm(1) * tp(1) * rp(2) * z4 / (1.0 - rm(1) * rp(2) * z2);

  // Middle block of three scatterers between the two regions.
  const Complex d2 = 1.0 - (rm(-2) * rp(-1) + rm(-1) * rp(0)) * z2 +
                     (rm(-1) * rp(-1) - tm(-1) * tp(-1)) * rm(-2) * rp(0) * z4;
  const Complex t_fwd = tp(-2) * tp(-1) * tp(0) / d2;
  const Complex t_bwd = tm(0) * tm(-1) * tm(-2) / d2;
  const Complex r_fwd =
      rp(-2) / z4 +
      (rp(-1) - (rm(-1) * rp(-1) - tm(-1) * tp(-1)) * rp(0) * z2) * tm(-2) * tp(-2) / (z2 * d2);
  const Complex r_bwd =
      (rm(0) / z4 +
       (rm(-1) - (rp(-1) * rm(-1) - tp(-1) * tm(-1)) * rm(-2) * z2) * tp(0) * tm(0) / (z2 * d2)) *
      z4;

  const Complex dd = (1.0 - r_left * r_fwd) * (1.0 - r_bwd * r_right) -
                     t_fwd * t_bwd * r_left * r_right;

  // The four source/observer wave combinations; each grouped exponent is an
  // integer by the half-integer position requirement.
  auto wave = [&](double e) {
    const double r = std::round(e);
    if (std::abs(e - r) > 1e-9)
      throw std::logic_error("reference_sixsite_green: non-integer grouped exponent");
    return ipow(z, static_cast<int>(r));
  };
  const Complex source_observer = wave(xf - xi) + r_right * wave(-xf - xi) +
                                  r_left * wave(xi + xf) + r_left * r_right * wave(xi - xf);
  return t_fwd / dd * source_observer;
}

}  // namespace sqw
