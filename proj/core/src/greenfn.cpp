#include "sqw/greenfn.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>
#include <stdexcept>
#include <utility>

namespace sqw {

namespace {

// Deterministic pass-through at a free valence-2 site. False at a free
// terminal: on the infinite lead the chain just continues, so amplitude
// that reaches a terminal heading outward is gone for good.
bool free_hop(const GraphTopology& g, const BondState& cur, BondState* next) {
  if (g.valence(cur.site) == 1) return false;
  const DirectionIndex out = cur.dir == 1 ? 2 : 1;
  const GraphTopology::Slot& sl = g.slot_for_label(cur.site, out);
  *next = {sl.neighbor, sl.remote_label};
  return true;
}

struct Trace {
  bool landed = false;  // false: walked off a lead (or a closed free cycle)
  BondState state{};
  int power = 0;  // steps taken, >= 1
};

// Follow a landing state through consecutive free sites until it reaches a
// retained state: the exit, or any state at a coin site. `first` is the
// state one step after the originating coin event.
Trace trace_to_retained(const GraphTopology& g, const BondState& first,
                        const BondState& exit) {
  Trace t;
  BondState cur = first;
  int power = 1;
  std::set<BondState> seen;
  for (;;) {
    if (cur == exit || !g.is_free(cur.site)) {
      t.landed = true;
      t.state = cur;
      t.power = power;
      return t;
    }
    if (!seen.insert(cur).second) return t;  // closed all-free cycle
    BondState nxt;
    if (!free_hop(g, cur, &nxt)) return t;
    cur = nxt;
    ++power;
  }
}

template <class S>
S coin_weight(const CoinSet& coins, const CompressedEdge& e);

template <>
Complex coin_weight<Complex>(const CoinSet& coins, const CompressedEdge& e) {
  return coins.at(e.site).amp(e.in, e.out);
}
template <>
ExactComplex coin_weight<ExactComplex>(const CoinSet& coins, const CompressedEdge& e) {
  return coins.at(e.site).exact_amp(e.in, e.out);
}

// Cramer's rule on x = b + Tx: the requested entry of x is
// det(A with the exit column replaced by b) / det(A), A = I - T.
// Both determinants come from fraction-free elimination; every pivot has
// constant term 1 (A(0) = I), so the exact divisions stay well conditioned
// in floating point too.
template <class S>
RationalFunction<S> solve_compressed(const CompressedSystem& sys, const CoinSet& coins) {
  using P = Polynomial<S>;
  using Ops = ScalarOps<S>;
  if (sys.trivial) return {P::monomial(Ops::one(), sys.trivial_power), P::one()};
  if (sys.entry_state < 0 || sys.exit_state < 0) return {P(), P::one()};

  // Same permutation on rows and columns keeps the determinant; putting the
  // exit last means the replaced column below never becomes a pivot, so every
  // leading principal minor keeps constant term 1 (A(0) = I) in both matrices.
  const int n = static_cast<int>(sys.states.size());
  std::vector<int> pos(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    pos[static_cast<size_t>(i)] = i == sys.exit_state ? n - 1 : i - (i > sys.exit_state);
  std::vector<std::vector<P>> a(n, std::vector<P>(n));
  for (int i = 0; i < n; ++i) a[i][i] = P::one();
  for (const CompressedEdge& e : sys.edges) {
    P& cell = a[pos[static_cast<size_t>(e.to)]][pos[static_cast<size_t>(e.from)]];
    cell = cell - P::monomial(coin_weight<S>(coins, e), e.power);
  }

  std::vector<std::vector<P>> a_num = a;
  const int entry_row = pos[static_cast<size_t>(sys.entry_state)];
  for (int i = 0; i < n; ++i)
    a_num[i][n - 1] = i == entry_row ? P::monomial(Ops::one(), sys.entry_power) : P();

  RationalFunction<S> rf{bareiss_determinant(std::move(a_num)),
                         bareiss_determinant(std::move(a))};
  rf.normalize();
  return rf;
}

}  // namespace

CompressedSystem compress_system(const GraphTopology& g, const CoinSet& coins,
                                 const GreenRequest& req) {
  if (!g.contains(req.entry) || !g.contains(req.exit))
    throw std::invalid_argument("green: entry or exit state not in the graph");
  if (req.entry == req.exit)
    throw std::invalid_argument("green: entry equals exit; the result is identically 1");
  coins.require_complete(g);
  if (!req.absorbing_exit && g.is_free(req.exit.site))
    throw std::invalid_argument(
        "green: arrival-counting (non-absorbing) mode needs the exit at a coin site");

  CompressedSystem sys;
  for (int idx = 0; idx < g.state_count(); ++idx) {
    BondState s = g.state_at(idx);
    if (!g.is_free(s.site) || s == req.exit) sys.states.push_back(s);
  }
  auto index_of = [&sys](const BondState& s) -> int {
    auto it = std::lower_bound(sys.states.begin(), sys.states.end(), s);
    if (it != sys.states.end() && *it == s) return static_cast<int>(it - sys.states.begin());
    return -1;
  };
  sys.exit_state = index_of(req.exit);

  if (!g.is_free(req.entry.site)) {
    sys.entry_state = index_of(req.entry);
  } else {
    // Entry on a lead: push the unit injection along the free chain until it
    // reaches a retained state; it arrives there as z^power.
    BondState first;
    if (!free_hop(g, req.entry, &first)) {
      sys.states.clear();
      sys.exit_state = -1;
      return sys;  // entry points off the graph: nothing ever arrives
    }
    Trace t = trace_to_retained(g, first, req.exit);
    if (!t.landed) {
      sys.states.clear();
      sys.exit_state = -1;
      return sys;
    }
    if (t.state == req.exit && req.absorbing_exit) {
      // The injection is absorbed before meeting any coin: a bare monomial.
      sys.trivial = true;
      sys.trivial_power = t.power;
      return sys;
    }
    sys.entry_state = index_of(t.state);
    sys.entry_power = t.power;
  }

  for (int u = 0; u < static_cast<int>(sys.states.size()); ++u) {
    const BondState us = sys.states[u];
    if (us == req.exit && req.absorbing_exit) continue;  // sink: no outgoing flow
    const int valence = g.valence(us.site);
    for (DirectionIndex out = 1; out <= valence; ++out) {
      const GraphTopology::Slot& sl = g.slot_for_label(us.site, out);
      Trace t = trace_to_retained(g, {sl.neighbor, sl.remote_label}, req.exit);
      if (!t.landed) continue;
      sys.edges.push_back({u, index_of(t.state), t.power, us.site, us.dir, out});
    }
  }

  // Keep only states lying on some entry -> exit path; Cramer's rule never
  // sees the rest, and the determinants shrink accordingly.
  const int n = static_cast<int>(sys.states.size());
  std::vector<std::vector<int>> fwd(n), bwd(n);
  for (const CompressedEdge& e : sys.edges) {
    fwd[e.from].push_back(e.to);
    bwd[e.to].push_back(e.from);
  }
  auto reachable = [n](int start, const std::vector<std::vector<int>>& adj) {
    std::vector<char> vis(n, 0);
    std::deque<int> q{start};
    vis[start] = 1;
    while (!q.empty()) {
      int x = q.front();
      q.pop_front();
      for (int y : adj[x])
        if (!vis[y]) {
          vis[y] = 1;
          q.push_back(y);
        }
    }
    return vis;
  };
  std::vector<char> from_entry = reachable(sys.entry_state, fwd);
  std::vector<char> to_exit = reachable(sys.exit_state, bwd);
  if (!to_exit[sys.entry_state]) {
    sys.states.clear();
    sys.edges.clear();
    sys.entry_state = sys.exit_state = -1;
    return sys;
  }
  std::vector<int> remap(n, -1);
  std::vector<BondState> kept;
  for (int i = 0; i < n; ++i) {
    if (from_entry[i] && to_exit[i]) {
      remap[i] = static_cast<int>(kept.size());
      kept.push_back(sys.states[i]);
    }
  }
  std::vector<CompressedEdge> kept_edges;
  for (CompressedEdge e : sys.edges) {
    if (remap[e.from] < 0 || remap[e.to] < 0) continue;
    e.from = remap[e.from];
    e.to = remap[e.to];
    kept_edges.push_back(e);
  }
  sys.states = std::move(kept);
  sys.edges = std::move(kept_edges);
  sys.entry_state = remap[sys.entry_state];
  sys.exit_state = remap[sys.exit_state];
  return sys;
}

std::vector<std::vector<Complex>> transfer_matrix(const GraphTopology& g,
                                                  const CoinSet& coins) {
  coins.require_complete(g);
  const int n = g.state_count();
  std::vector<std::vector<Complex>> m(n, std::vector<Complex>(n, Complex(0.0, 0.0)));
  for (int in_idx = 0; in_idx < n; ++in_idx) {
    const BondState s = g.state_at(in_idx);
    const CoinMatrix& c = coins.at(s.site);
    const int valence = g.valence(s.site);
    for (DirectionIndex out = 1; out <= valence; ++out) {
      const Complex w = c.amp(s.dir, out);
      if (w == Complex(0.0, 0.0)) continue;
      const GraphTopology::Slot& sl = g.slot_for_label(s.site, out);
      m[g.state_index({sl.neighbor, sl.remote_label})][in_idx] += w;
    }
  }
  return m;
}

RationalFunction<Complex> green_function(const GraphTopology& g, const CoinSet& coins,
                                         const GreenRequest& req) {
  RationalFunction<Complex> rf = solve_compressed<Complex>(compress_system(g, coins, req), coins);
  // Fraction-free elimination leaves rounding dust in coefficients that are
  // exactly zero in exact arithmetic; trim it relative to the peak so degrees
  // are honest. Legitimate coefficients this far below the peak shift the
  // function by less than the evaluation noise floor.
  rf.num = rf.num.cleaned(1e-14);
  rf.den = rf.den.cleaned(1e-14);
  return rf;
}

RationalFunction<ExactComplex> green_function_exact(const GraphTopology& g,
                                                    const CoinSet& coins,
                                                    const GreenRequest& req) {
  return reduced(solve_compressed<ExactComplex>(compress_system(g, coins, req), coins));
}

Complex eval_rational(const RationalFunction<Complex>& f, Complex z, double pole_tol) {
  const Complex d = f.den.eval_complex(z);
  const double mag = std::abs(d);
  if (mag < pole_tol)
    throw PoleError("rational function evaluated at a pole (|den| = " +
                        std::to_string(mag) + ")",
                    mag);
  return f.num.eval_complex(z) / d;
}

Complex eval_at_gamma(const RationalFunction<Complex>& f, double gamma, double pole_tol) {
  return eval_rational(f, std::polar(1.0, gamma), pole_tol);
}

namespace {

void scan_denominators(const Polynomial<ExactComplex>& p, BigInt* l) {
  using boost::multiprecision::lcm;
  for (int k = 0; k <= p.degree(); ++k) {
    const ExactComplex c = p.coeff(k);
    *l = lcm(*l, denominator(c.re));
    *l = lcm(*l, denominator(c.im));
  }
}

std::vector<ExactComplex> scaled_coeffs(const Polynomial<ExactComplex>& p, const BigInt& l,
                                        BigInt* content) {
  using boost::multiprecision::abs;
  using boost::multiprecision::gcd;
  std::vector<ExactComplex> out(static_cast<size_t>(std::max(p.degree(), 0)) + 1);
  for (int k = 0; k <= p.degree(); ++k) {
    ExactComplex v{p.coeff(k).re * l, p.coeff(k).im * l};
    if (!v.is_zero()) {
      *content = gcd(*content, abs(numerator(v.re)));
      *content = gcd(*content, abs(numerator(v.im)));
    }
    out[static_cast<size_t>(k)] = v;
  }
  return out;
}

}  // namespace

IntegerForm integer_form(const RationalFunction<ExactComplex>& f) {
  BigInt l = 1;
  scan_denominators(f.num, &l);
  scan_denominators(f.den, &l);
  BigInt content = 0;
  IntegerForm out;
  out.num = scaled_coeffs(f.num, l, &content);
  out.den = scaled_coeffs(f.den, l, &content);
  if (content == 0) content = 1;
  Rational content_q(content);
  for (auto* v : {&out.num, &out.den})
    for (ExactComplex& c : *v) {
      c.re /= content_q;
      c.im /= content_q;
    }
  // Sign convention: lowest-order nonzero denominator coefficient has
  // positive real part (positive imaginary part when purely imaginary).
  for (const ExactComplex& c : out.den) {
    if (c.is_zero()) continue;
    const bool flip = c.re != 0 ? c.re < 0 : c.im < 0;
    if (flip)
      for (auto* v : {&out.num, &out.den})
        for (ExactComplex& e : *v) {
          e.re = -e.re;
          e.im = -e.im;
        }
    break;
  }
  return out;
}

}  // namespace sqw
