#include "genocchi/brackets.hpp"
#include "genocchi/catalog.hpp"
#include "genocchi/gamma.hpp"
#include "genocchi/pistol.hpp"
#include "genocchi/seidel.hpp"
#include "genocchi/signature.hpp"

#include "checks.hpp"

namespace genocchi::verify {

namespace {

void check_thm26_cycles(Ctx& c) {
  for (int n = 1; n <= c.max_n; ++n) {
    auto dist = [n](Family f) {
      return family_poly(f, n, [](const StatVector& st) {
        return MultiPoly::term(Monomial::var(Var::z, st.cyc), 1);
      });
    };
    MultiPoly over_d = dist(Family::D);
    MultiPoly over_e = dist(Family::E);
    if (!(over_d == over_e)) {
      c.fail("cycle distributions differ at n = " + std::to_string(n) +
             ": D gives " + over_d.to_string() + ", E gives " +
             over_e.to_string());
      return;
    }
  }
  // Single-cycle counts pin the index convention: they match G_{2n}
  // (Theorem 1.1), not the G_{2n+2} printed in the Theorem 2.6 statement.
  SeidelTriangle tri = seidel(c.max_n + 1);
  auto G = tri.G();
  for (int n = 1; n <= c.max_n; ++n) {
    std::size_t ndc = cached_family(Family::DC, n).size();
    std::size_t nec = cached_family(Family::EC, n).size();
    c.require(ndc == nec, "|DC| != |EC| at n = " + std::to_string(n));
    c.require(BigInt(ndc) == G[n - 1],
              "|DC_" + std::to_string(2 * n) + "| = " + std::to_string(ndc) +
                  " != G_" + std::to_string(2 * n));
    if (!c.ok) return;
  }
  c.note("enumeration pins |EC_{2n}| = |DC_{2n}| = G_{2n}; the G_{2n+2} index "
         "printed in the theorem statement is off by one");
  c.summary("cycle distributions over D and E coincide for n <= " +
            std::to_string(c.max_n));
}

void check_thm27_gamma(Ctx& c) {
  const std::set<Var> keep = {Var::a, Var::b, Var::p, Var::q, Var::y, Var::t};
  // CF form through the symbolic order.
  const int N = std::min(c.max_n, 3);
  PowerSeries lhs =
      series_from([&](int n) { return x_full_poly(n).keep_only(keep); }, N);
  expect_series_equal(c, lhs, catalog("thm2.7").expand(N),
                      "Theorem 2.7 continued fraction");

  // Gamma decomposition with coefficients from the Xbar layer.
  for (int n = 1; n <= c.max_n && c.ok; ++n) {
    MultiPoly xn = x_full_poly(n).keep_only(keep);
    GammaExpansion ge;
    try {
      ge = gamma_extract(xn, n);
    } catch (const GammaError& e) {
      c.fail("X_" + std::to_string(n) + "(a,1,b,1,p,q,y,t): " + e.what());
      return;
    }
    for (int k = 0; k <= n / 2; ++k) {
      MultiPoly want;
      for (const Permutation& s : cached_family(Family::Xbar, n)) {
        StatVector st = compute_stats(s);
        if (st.des != k) continue;
        Monomial m = Monomial::var(Var::a, st.lema) *
                     Monomial::var(Var::b, st.romi) *
                     Monomial::var(Var::p, st.ress) *
                     Monomial::var(Var::q, st.les);
        want += MultiPoly::term(m, 1);
      }
      if (!(ge.gammas[k] == want)) {
        c.fail("gamma_{" + std::to_string(n) + "," + std::to_string(k) +
               "}(a,b,p,q) = " + ge.gammas[k].to_string() +
               " but the Xbar enumeration gives " + want.to_string());
        return;
      }
    }
  }
  c.summary("quasi-gamma decomposition of X_n(a,1,b,1,p,q,y,t) matches the Xbar enumeration for n <= " +
            std::to_string(c.max_n));
}

void check_lemma28(Ctx& c) {
  // signature_of asserts s = l + r + 1 internally; exercise it on all of
  // X_{2n} and validate the weak-signature prefix condition.
  for (int n = 1; n <= c.max_n; ++n) {
    for (const Permutation& s : cached_family(Family::X, n)) {
      try {
        auto [ws, sf] = signature_of(s);
        if (!ws.is_valid()) {
          c.fail("descent set of " + s.to_string() +
                 " is not a weak signature");
          return;
        }
      } catch (const std::exception& e) {
        c.fail(e.what());
        return;
      }
    }
  }
  // Worked example from section 3.
  Permutation ex = Permutation::parse_one_line(
      "2 6 8 1 4 7 14 9 10 12 3 5 11 15 16 13");
  auto [ws, sf] = signature_of(ex);
  std::set<int> wantS = {1, 3, 9, 13, 8, 12, 14, 16};
  c.require(ws.S == wantS, "signature set of the worked example is wrong");
  const int want_s[17] = {0, 1, 2, 2, 3, 3, 3, 3, 2,
                          2, 3, 3, 2, 2, 2, 2, 1};
  for (int i = 1; i <= 16; ++i)
    c.require(sf(i) == want_s[i],
              "s(" + std::to_string(i) + ") = " + std::to_string(sf(i)) +
                  ", expected " + std::to_string(want_s[i]));
  c.summary("weak signatures valid and s = l + r + 1 exhaustively for n <= " +
            std::to_string(c.max_n) + "; worked example matches");
}

void check_prop210(Ctx& c) {
  for (int n = 1; n <= c.max_n; ++n) {
    for (const Permutation& s : cached_family(Family::Xhat, n)) {
      StatVector st = compute_stats(s);
      if (st.les < st.des || st.ress < st.des) {
        c.fail("les/ress below des for " + s.to_string());
        return;
      }
    }
  }
  c.summary("les >= k and ress >= k on every Xhat_{2n,k} for n <= " +
            std::to_string(c.max_n));
}

void check_thm211(Ctx& c) {
  MultiPoly pplusq = MultiPoly::variable(Var::p) + MultiPoly::variable(Var::q);
  for (int n = 1; n <= c.max_n; ++n) {
    // Gamma expansion of X_n(p,q,t) itself (eq. 2.10a) via the y-refined
    // polynomial.
    const std::set<Var> keep = {Var::p, Var::q, Var::y, Var::t};
    MultiPoly xn = x_full_poly(n).keep_only(keep);
    GammaExpansion ge;
    try {
      ge = gamma_extract(xn, n);
    } catch (const GammaError& e) {
      c.fail(std::string("X_n(p,q,y,t): ") + e.what());
      return;
    }
    for (int k = 0; k <= n / 2; ++k) {
      // gamma_{n,k}(p,q) from the Xbar layer.
      MultiPoly want;
      for (const Permutation& s : cached_family(Family::Xbar, n)) {
        StatVector st = compute_stats(s);
        if (st.des != k) continue;
        want += MultiPoly::term(Monomial::var(Var::p, st.ress) *
                                    Monomial::var(Var::q, st.les),
                                1);
      }
      if (!(ge.gammas[k] == want)) {
        c.fail("gamma_{" + std::to_string(n) + "," + std::to_string(k) +
               "}(p,q) mismatch: extraction " + ge.gammas[k].to_string() +
               " vs enumeration " + want.to_string());
        return;
      }
      // Factorization oracle: exact division by (p+q)^{2k}.
      MultiPoly quotient;
      try {
        quotient = want.divide_exact(pplusq.pow(2 * k));
      } catch (const std::domain_error& e) {
        c.fail("(p+q)^" + std::to_string(2 * k) + " does not divide gamma_{" +
               std::to_string(n) + "," + std::to_string(k) + "}: " + e.what());
        return;
      }
      // Quotient vs the normalized layer.
      MultiPoly hat;
      for (const Permutation& s : cached_family(Family::Xhat, n)) {
        StatVector st = compute_stats(s);
        if (st.des != k) continue;
        hat += MultiPoly::term(Monomial::var(Var::q, st.les - k) *
                                   Monomial::var(Var::p, st.ress - k),
                               1);
      }
      if (!(quotient == hat)) {
        c.fail("gamma_{" + std::to_string(n) + "," + std::to_string(k) +
               "}/(p+q)^{2k} = " + quotient.to_string() +
               " but the Xhat enumeration gives " + hat.to_string());
        return;
      }
    }
  }
  c.summary("(p+q)^{2k} factorization with Xhat quotients verified by exact division for n <= " +
            std::to_string(c.max_n));
}

void check_pistols(Ctx& c) {
  // Worked example of section 4.
  Pistol ex{{2, 8, 4, 4, 12, 6, 10, 14, 10, 14, 14, 12, 14, 14}};
  c.require(ex.is_valid(), "worked pistol example is not a valid pistol");
  PistolStats st = pistol_stats(ex);
  c.require(st.mo == 1 && st.me == 2 && st.fd == 2 && st.fi == 1 &&
                st.sd == 2 && st.si == 1,
            "worked pistol statistics differ from (1,2,2,1,2,1)");

  SeidelTriangle tri = seidel(c.max_n + 1);
  auto G = tri.G();
  for (int n = 1; n <= c.max_n; ++n) {
    std::size_t count = enumerate_pistols(n, c.budget).size();
    c.require(BigInt(count) == G[n],
              "|P_" + std::to_string(2 * n) + "| = " + std::to_string(count) +
                  " != G_" + std::to_string(2 * n + 2));
    if (!c.ok) return;
  }

  // Specialization onto D-permutations, n <= 3.
  for (int n = 1; n <= std::min(c.max_n, 3); ++n) {
    MultiPoly gam = gamma_pistol(n + 1, c.budget)
                        .subst(Var::alpha, MultiPoly::variable(Var::x1) *
                                               MultiPoly::variable(Var::z))
                        .subst(Var::beta, MultiPoly::variable(Var::z))
                        .subst(Var::gamma, MultiPoly::one())
                        .subst(Var::alphabar, MultiPoly::zero())
                        .subst(Var::betabar, MultiPoly::variable(Var::x0) *
                                                 MultiPoly::variable(Var::z))
                        .subst(Var::gammabar, MultiPoly::one());
    MultiPoly want = family_poly(Family::D, n, [](const StatVector& s) {
      Monomial m = Monomial::var(Var::x0, s.fix_e) *
                   Monomial::var(Var::x1, s.fix_o) *
                   Monomial::var(Var::z, s.cyc);
      return MultiPoly::term(m, 1);
    });
    if (!(gam == want)) {
      c.fail("Gamma_{n+1} specialization differs from the D enumeration at n = " +
             std::to_string(n) + ": " + gam.to_string() + " vs " +
             want.to_string());
      return;
    }
  }
  c.summary("pistol statistics, counts |P_{2n}| = G_{2n+2} and the D-permutation specialization verified");
}

}  // namespace

void register_gamma_checks(std::vector<CheckDef>& defs) {
  defs.push_back({"thm2.6-cycles", "Theorem 2.6 (Lazar-Wachs conjecture)", 4,
                  0, check_thm26_cycles});
  defs.push_back({"thm2.7-gamma", "Theorem 2.7 quasi-gamma decomposition", 4,
                  0, check_thm27_gamma});
  defs.push_back({"lemma2.8-signature", "Lemma 2.8 signature identity", 4, 0,
                  check_lemma28});
  defs.push_back({"prop2.10", "Proposition 2.10 embracing bounds", 4, 0,
                  check_prop210});
  defs.push_back({"thm2.11-factorization",
                  "Theorem 2.11 (p+q)^{2k} factorization", 4, 0,
                  check_thm211});
  defs.push_back({"sec4-pistol-stats", "Section 4 pistol statistics", 4, 0,
                  check_pistols});
}

}  // namespace genocchi::verify
