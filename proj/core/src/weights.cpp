#include "genocchi/weights.hpp"

#include <stdexcept>

#include "genocchi/brackets.hpp"
#include "genocchi/catalog.hpp"
#include "genocchi/cfengine.hpp"

namespace genocchi {

std::string scheme_name(Scheme s) {
  return s == Scheme::Master ? "master" : "oddodd";
}

namespace {

MultiPoly V(Var v) { return MultiPoly::variable(v); }

Monomial mark(Var v, bool on) { return Monomial::var(v, on ? 1 : 0); }

// Master scheme, step at starting height h with labels (xi, xi').
//   U : t  * [b at xi=0] p^xi q^(h-xi) * [a at xi'=h+1][bbar at xi'=0]
//            p^xi' q^(h+1-xi')
//   D :      [abar at xi=h][b at xi=0] p^xi q^(h-xi) * [a at xi'=h-1]
//            p^xi' q^(h-1-xi')
//   L1:      [abar at xi=h][b at xi=0] p^xi q^(h-xi) * [a at xi'=h]
//            [bbar at xi'=0] p^xi' q^(h-xi')
//   L2: t*y * [b at xi=0] p^xi q^(h-xi) * [a at xi'=h] p^xi' q^(h-xi')
// Summed over legal labels these give the bracket products of the weight
// table, and multiplied along a diagram they give the statistic monomial of
// the preimage permutation.
MultiPoly master_weight(Step s, int h, int xi, int xip) {
  Monomial m = Monomial::var(Var::p, xi + xip);
  m = m * mark(Var::b, xi == 0);
  switch (s) {
    case Step::U:
      m = m * Monomial::var(Var::q, (h - xi) + (h + 1 - xip)) *
          mark(Var::a, xip == h + 1) * mark(Var::bbar, xip == 0) *
          Monomial::var(Var::t, 1);
      break;
    case Step::D:
      m = m * Monomial::var(Var::q, (h - xi) + (h - 1 - xip)) *
          mark(Var::abar, xi == h) * mark(Var::a, xip == h - 1);
      break;
    case Step::L1:
      m = m * Monomial::var(Var::q, (h - xi) + (h - xip)) *
          mark(Var::abar, xi == h) * mark(Var::a, xip == h) *
          mark(Var::bbar, xip == 0);
      break;
    case Step::L2:
      m = m * Monomial::var(Var::q, (h - xi) + (h - xip)) *
          mark(Var::a, xip == h) * Monomial::var(Var::t, 1) *
          Monomial::var(Var::y, 1);
      break;
  }
  return MultiPoly::term(m, 1);
}

// Odd-odd scheme: q marks labels, p the co-labels, a fires at xi' = 0.
MultiPoly oddodd_weight(Step s, int h, int xi, int xip) {
  Monomial m = Monomial::var(Var::q, xi + xip) * mark(Var::a, xip == 0);
  switch (s) {
    case Step::U:
      m = m * Monomial::var(Var::p, (h - xi) + (h + 1 - xip)) *
          Monomial::var(Var::t, 1);
      break;
    case Step::D:
      m = m * Monomial::var(Var::p, (h - xi) + (h - 1 - xip));
      break;
    case Step::L1:
      m = m * Monomial::var(Var::p, (h - xi) + (h - xip));
      break;
    case Step::L2:
      m = m * Monomial::var(Var::p, (h - xi) + (h - xip)) *
          Monomial::var(Var::t, 1) * Monomial::var(Var::y, 1);
      break;
  }
  return MultiPoly::term(m, 1);
}

}  // namespace

MultiPoly step_weight(Scheme scheme, Step s, int h, int xi, int xip) {
  if (h < 0 || (s == Step::D && h < 1))
    throw std::domain_error("invalid step height");
  return scheme == Scheme::Master ? master_weight(s, h, xi, xip)
                                  : oddodd_weight(s, h, xi, xip);
}

MultiPoly step_weight_sum(Scheme scheme, Step s, int h) {
  int xi_max = h;
  int xip_max = s == Step::U ? h + 1 : s == Step::D ? h - 1 : h;
  MultiPoly acc;
  for (int xi = 0; xi <= xi_max; ++xi)
    for (int xip = 0; xip <= xip_max; ++xip)
      acc += step_weight(scheme, s, h, xi, xip);
  return acc;
}

MultiPoly diagram_weight(Scheme scheme, const PathDiagram& d) {
  MultiPoly w = MultiPoly::one();
  int h = 0;
  for (int j = 1; j <= d.length(); ++j) {
    Step s = d.path.steps[j - 1];
    w *= step_weight(scheme, s, h, d.xi[j - 1], d.xi_prime[j - 1]);
    h += s == Step::U ? 1 : s == Step::D ? -1 : 0;
  }
  return w;
}

FlajoletResult flajolet_check(Scheme scheme, int N) {
  PowerSeries lhs = PowerSeries::one(N);
  for (int n = 1; n <= N; ++n) {
    MultiPoly total;
    for (const PathDiagram& d : enumerate_diagrams(n))
      total += diagram_weight(scheme, d);
    lhs = lhs + PowerSeries::monomial(N, total, n);
  }
  PowerSeries rhs =
      catalog(scheme == Scheme::Master ? "master" : "oddodd").expand(N);
  FlajoletResult r;
  for (int k = 0; k <= N; ++k) {
    if (!(lhs.coeff(k) == rhs.coeff(k))) {
      r.pass = false;
      r.first_discrepancy = "x^" + std::to_string(k) +
                            ": paths give " + lhs.coeff(k).to_string() +
                            ", fraction gives " + rhs.coeff(k).to_string();
      return r;
    }
  }
  return r;
}

FlajoletResult flajolet_check_generic(
    const std::function<MultiPoly(int)>& rise,
    const std::function<MultiPoly(int)>& fall,
    const std::function<MultiPoly(int)>& level1,
    const std::function<MultiPoly(int)>& level2, int N) {
  // Label-free paths: weight each step by its starting-height generator.
  PowerSeries lhs = PowerSeries::one(N);
  for (int n = 1; n <= N; ++n) {
    MultiPoly total;
    for (const PathDiagram& d : enumerate_diagrams(n)) {
      bool zero_labels = true;
      for (int j = 0; j < n; ++j)
        if (d.xi[j] != 0 || d.xi_prime[j] != 0) zero_labels = false;
      if (!zero_labels) continue;
      MultiPoly w = MultiPoly::one();
      int h = 0;
      for (Step s : d.path.steps) {
        switch (s) {
          case Step::U: w *= rise(h); ++h; break;
          case Step::D: w *= fall(h); --h; break;
          case Step::L1: w *= level1(h); break;
          case Step::L2: w *= level2(h); break;
        }
      }
      total += w;
    }
    lhs = lhs + PowerSeries::monomial(N, total, n);
  }

  JFractionSpec spec{
      [&](int n) { return level1(n) + level2(n); },
      [&](int n) { return rise(n - 1) * fall(n); }};
  PowerSeries rhs = jfrac_expand(spec, N);
  FlajoletResult r;
  for (int k = 0; k <= N; ++k) {
    if (!(lhs.coeff(k) == rhs.coeff(k))) {
      r.pass = false;
      r.first_discrepancy = "x^" + std::to_string(k) +
                            ": paths give " + lhs.coeff(k).to_string() +
                            ", fraction gives " + rhs.coeff(k).to_string();
      return r;
    }
  }
  return r;
}

}  // namespace genocchi
