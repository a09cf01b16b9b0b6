#include "sqw/coins.hpp"

#include <cmath>
#include <utility>

namespace sqw {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

void check_shape(SiteId site, int dim, size_t n) {
  if (dim < 1) fail("coin at site " + std::to_string(site) + ": dimension must be >= 1");
  if (n != static_cast<size_t>(dim) * dim)
    fail("coin at site " + std::to_string(site) + ": expected " + std::to_string(dim * dim) +
         " entries, got " + std::to_string(n));
}

}  // namespace

CoinMatrix::CoinMatrix(SiteId site, int dim, std::vector<Complex> row_major)
    : site_(site), dim_(dim), entries_(std::move(row_major)) {
  check_shape(site, dim, entries_.size());
}

CoinMatrix::CoinMatrix(SiteId site, int dim, std::vector<Complex> row_major,
                       std::vector<ExactComplex> exact)
    : site_(site), dim_(dim), entries_(std::move(row_major)), exact_(std::move(exact)) {
  check_shape(site, dim, entries_.size());
  check_shape(site, dim, exact_->size());
}

ExactComplex CoinMatrix::exact_amp(DirectionIndex in, DirectionIndex out) const {
  size_t idx = static_cast<size_t>(in - 1) * dim_ + (out - 1);
  if (exact_) return (*exact_)[idx];
  return ExactComplex::from_double(entries_[idx]);
}

UnitarityResidual unitarity_residual(const CoinMatrix& c) {
  const int n = c.dim();
  UnitarityResidual res;
  // gram residuals, both orders
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      Complex rows{0, 0}, cols{0, 0};
      for (int k = 1; k <= n; ++k) {
        rows += c.amp(i, k) * std::conj(c.amp(j, k));
        cols += c.amp(k, i) * std::conj(c.amp(k, j));
      }
      Complex expect = i == j ? Complex{1, 0} : Complex{0, 0};
      res.gram = std::max(res.gram, std::abs(rows - expect));
      res.gram = std::max(res.gram, std::abs(cols - expect));
    }
  }
  // the explicit flux/orthogonality sums: unit outgoing flux per incoming
  // direction, unit incoming flux per outgoing direction, vanishing
  // reflection-transmission cross terms between distinct directions.
  for (int i = 1; i <= n; ++i) {
    double out_flux = 0, in_flux = 0;
    for (int k = 1; k <= n; ++k) {
      out_flux += std::norm(c.amp(i, k));
      in_flux += std::norm(c.amp(k, i));
    }
    res.pairwise = std::max(res.pairwise, std::abs(out_flux - 1.0));
    res.pairwise = std::max(res.pairwise, std::abs(in_flux - 1.0));
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      Complex cross =
          c.amp(i, i) * std::conj(c.amp(j, i)) + std::conj(c.amp(j, j)) * c.amp(i, j);
      Complex rest{0, 0};
      for (int k = 1; k <= n; ++k)
        if (k != i && k != j) rest += c.amp(i, k) * std::conj(c.amp(j, k));
      res.pairwise = std::max(res.pairwise, std::abs(cross + rest));
    }
  }
  return res;
}

double validate_unitarity(const CoinMatrix& c, double tol) {
  double r = unitarity_residual(c).max();
  if (!(r <= tol))
    fail("coin at site " + std::to_string(c.site()) + " is not unitary: residual " +
         std::to_string(r) + " exceeds tolerance " + std::to_string(tol));
  return r;
}

bool is_transmission_symmetric(const CoinMatrix& c, double tol) {
  for (int i = 1; i <= c.dim(); ++i)
    for (int j = i + 1; j <= c.dim(); ++j)
      if (std::abs(c.amp(i, j) - c.amp(j, i)) > tol) return false;
  return true;
}

CoinMatrix coin_1d(SiteId site, double rho, double phi, double varphi) {
  if (rho < 0.0 || rho > 1.0) fail("coin_1d: rho must lie in [0, 1]");
  double rr = std::sqrt(1.0 - rho * rho);
  Complex t_plus = rho * Complex{std::cos(phi), std::sin(phi)};
  Complex r_plus = rr * Complex{std::cos(varphi), std::sin(varphi)};
  // rows are incoming directions (1 = toward higher ids), columns outgoing.
  CoinMatrix c(site, 2,
               {r_plus, t_plus,                      //
                std::conj(t_plus), -std::conj(r_plus)});
  validate_unitarity(c);
  return c;
}

CoinMatrix coin_point_interaction(SiteId site, const PointInteractionParams& p, double k) {
  if (std::abs(p.a * p.d - p.b * p.c - 1.0) > 1e-12)
    fail("coin_point_interaction: need a*d - b*c = 1");
  const Complex I{0, 1};
  Complex den = -p.c + I * k * (p.d + p.a) + p.b * k * k;
  if (std::abs(den) < 1e-14)
    fail("coin_point_interaction: singular parameters (denominator vanishes at this k)");
  auto phase = [&](double x) { return Complex{std::cos(x), std::sin(x)}; };
  Complex r_plus = (p.c + I * k * (p.d - p.a) + p.b * k * k) / den * phase(k * p.e);
  Complex r_minus = (p.c - I * k * (p.d - p.a) + p.b * k * k) / den * phase(-k * p.e);
  Complex t_plus = 2.0 * I * k * phase(p.theta) / den;
  Complex t_minus = 2.0 * I * k * phase(-p.theta) / den;
  CoinMatrix c(site, 2, {r_plus, t_plus, t_minus, r_minus});
  validate_unitarity(c);
  return c;
}

CoinMatrix coin_grover(SiteId site, int dim) {
  if (dim < 1) fail("coin_grover: dimension must be >= 1");
  std::vector<ExactComplex> x(static_cast<size_t>(dim) * dim, ExactComplex(Rational(2, dim)));
  for (int i = 0; i < dim; ++i)
    x[static_cast<size_t>(i) * dim + i] = ExactComplex(Rational(2 - dim, dim));
  // float view is the rounded exact view, so both solvers see the same coin
  std::vector<Complex> e(x.size());
  for (size_t i = 0; i < x.size(); ++i) e[i] = x[i].to_complex();
  CoinMatrix c(site, dim, std::move(e), std::move(x));
  validate_unitarity(c);
  return c;
}

CoinMatrix coin_from_matrix(SiteId site, int dim, std::vector<Complex> row_major,
                            bool require_transmission_symmetry) {
  CoinMatrix c(site, dim, std::move(row_major));
  validate_unitarity(c);
  if (require_transmission_symmetry && !is_transmission_symmetric(c))
    fail("coin at site " + std::to_string(site) +
         ": transmission entries are not symmetric (amp(i,j) != amp(j,i))");
  return c;
}

CoinMatrix coin_from_exact_matrix(SiteId site, int dim, std::vector<ExactComplex> exact) {
  std::vector<Complex> e(exact.size());
  for (size_t i = 0; i < exact.size(); ++i) e[i] = exact[i].to_complex();
  CoinMatrix c(site, dim, std::move(e), std::move(exact));
  validate_unitarity(c);
  return c;
}

CoinMatrix free_coin(SiteId site, int valence) {
  if (valence == 1)
    return CoinMatrix(site, 1, {Complex{1, 0}}, {ExactComplex(1)});
  if (valence == 2)
    return CoinMatrix(site, 2, {Complex{0, 0}, Complex{1, 0}, Complex{1, 0}, Complex{0, 0}},
                      {ExactComplex(0), ExactComplex(1), ExactComplex(1), ExactComplex(0)});
  fail("free_coin: free sites must have valence 1 or 2");
}

CoinSet::CoinSet(const GraphTopology& g) : coins_(g.site_count()), free_(g.site_count()) {
  for (SiteId j = 0; j < g.site_count(); ++j) {
    free_[j] = g.is_free(j) ? 1 : 0;
    if (free_[j]) coins_[j] = free_coin(j, g.valence(j));
  }
}

void CoinSet::assign(CoinMatrix coin) {
  SiteId j = coin.site();
  if (j < 0 || static_cast<size_t>(j) >= coins_.size())
    fail("CoinSet::assign: no such site " + std::to_string(j));
  if (free_[j])
    fail("CoinSet::assign: site " + std::to_string(j) +
         " is free; free sites take no coin");
  coins_[j] = std::move(coin);
}

bool CoinSet::has(SiteId j) const {
  return j >= 0 && static_cast<size_t>(j) < coins_.size() && coins_[j].has_value();
}

const CoinMatrix& CoinSet::at(SiteId j) const {
  if (!has(j))
    fail("no coin assigned to site " + std::to_string(j));
  return *coins_[j];
}

void CoinSet::require_complete(const GraphTopology& g) const {
  for (SiteId j = 0; j < g.site_count(); ++j) {
    if (g.is_free(j)) continue;
    if (!has(j)) fail("site " + std::to_string(j) + " has no coin and is not free");
    if (coins_[j]->dim() != g.valence(j))
      fail("coin at site " + std::to_string(j) + " has dimension " +
           std::to_string(coins_[j]->dim()) + ", valence is " + std::to_string(g.valence(j)));
  }
}

}  // namespace sqw
