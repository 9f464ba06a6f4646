#include "genocchi/brackets.hpp"
#include "genocchi/catalog.hpp"
#include "genocchi/pistol.hpp"
#include "genocchi/seidel.hpp"

#include "checks.hpp"

namespace genocchi::verify {

namespace {

MultiPoly V(Var v) { return MultiPoly::variable(v); }

void expect_integer_series(Ctx& c, const PowerSeries& s,
                           const std::vector<BigInt>& want,
                           const std::string& label) {
  for (std::size_t k = 0; k < want.size() && k <= std::size_t(s.order()); ++k) {
    MultiPoly coeff = s.coeff(static_cast<int>(k));
    if (!coeff.is_constant() || coeff.constant_value() != want[k]) {
      c.fail(label + ": x^" + std::to_string(k) + " = " + coeff.to_string() +
             ", expected " + want[k].str());
      return;
    }
  }
}

void check_cf_intro(Ctx& c) {
  const int N = c.order;
  SeidelTriangle tri = seidel(N + 1);
  auto G = tri.G();
  auto H = tri.H();
  auto h = tri.h();

  // (1.6): sum G_{2n+2} x^n, starting at G_2.
  std::vector<BigInt> g16(G.begin(), G.end());
  expect_integer_series(c, catalog("genocchi").expand(N), g16, "eq (1.6)");
  // (1.7): 1 + sum H_{2n+1} x^{n+1}.
  std::vector<BigInt> h17 = {1};
  h17.insert(h17.end(), H.begin(), H.end());
  expect_integer_series(c, catalog("mediangenocchi-s").expand(N), h17,
                        "eq (1.7)");
  // (1.9): sum H_{2n+1} x^n.
  expect_integer_series(c, catalog("mediangenocchi").expand(N), H, "eq (1.9)");
  // (1.10): sum h_n x^n.
  expect_integer_series(c, catalog("normalized").expand(N), h, "eq (1.10)");
  c.summary("eqs. (1.6), (1.7), (1.9), (1.10) reproduce the Seidel columns through order " +
            std::to_string(N));
}

void check_contraction(Ctx& c) {
  const int N = c.order;
  // Eight generic alphas realized as distinct formal variables; deeper
  // coefficients are zero, which truncates both sides identically.
  const Var slots[8] = {Var::a, Var::abar, Var::b,  Var::bbar,
                        Var::p, Var::q,    Var::y,  Var::t};
  SFractionSpec generic{[&slots](int k) {
    return k <= 8 ? V(slots[k - 1]) : MultiPoly::zero();
  }};
  PowerSeries s = sfrac_expand(generic, N);
  expect_series_equal(c, jfrac_expand(contract_even(generic), N), s,
                      "even contraction (1.8a)");
  expect_series_equal(c, contract_odd_expand(generic, N), s,
                      "odd contraction (1.8b)");
  c.summary("both contraction identities hold for generic alpha_1..alpha_8 through x^" +
            std::to_string(N));
}

void check_master(Ctx& c) {
  const int N = c.max_n;
  PowerSeries lhs = series_from([](int n) { return x_full_poly(n); }, N);
  expect_series_equal(c, lhs, catalog("master").expand(N),
                      "Theorem 2.1 master J-fraction");
  c.summary("1 + sum X_n x^n matches the master J-fraction in all eight variables through x^" +
            std::to_string(N));
}

void check_corollaries(Ctx& c) {
  const int N = c.max_n;
  const std::set<Var> no_b = {Var::a, Var::abar, Var::p, Var::q, Var::y,
                              Var::t};

  // Corollary 2.2: b = bbar = 1.
  PowerSeries lhs22 =
      series_from([&](int n) { return x_full_poly(n).keep_only(no_b); }, N);
  expect_series_equal(c, lhs22, catalog("cor2.2").expand(N), "Corollary 2.2");

  // Corollary 2.3: S-fraction at y = 1, head weight a*abar.
  const std::set<Var> no_by = {Var::a, Var::abar, Var::p, Var::q, Var::t};
  PowerSeries lhs23 = PowerSeries::one(N);
  MultiPoly aab = V(Var::a) * V(Var::abar);
  for (int n = 0; n + 1 <= N; ++n) {
    MultiPoly xn = n == 0 ? MultiPoly::one() : x_full_poly(n).keep_only(no_by);
    lhs23 = lhs23 + PowerSeries::monomial(N, aab * xn, n + 1);
  }
  expect_series_equal(c, lhs23, catalog("cor2.3").expand(N),
                      "Corollary 2.3 S-fraction");

  // Corollary 2.4: P_n(t,z) from both models.
  PowerSeries x_side = series_from(
      [](int n) {
        return family_poly(Family::X, n, [](const StatVector& st) {
          return MultiPoly::term(Monomial::var(Var::t, st.des) *
                                     Monomial::var(Var::z, st.lma),
                                 1);
        });
      },
      N);
  PowerSeries e_side = series_from(
      [](int n) {
        return family_poly(Family::E, n, [](const StatVector& st) {
          return MultiPoly::term(Monomial::var(Var::t, st.drop) *
                                     Monomial::var(Var::z, st.cyc),
                                 1);
        });
      },
      N);
  expect_series_equal(c, x_side, e_side,
                      "Corollary 2.4 (des,lma) vs (drop,cyc) models");
  expect_series_equal(c, x_side, catalog("cor2.4").expand(N),
                      "Corollary 2.4 J-fraction");

  // Corollary 2.5: y = 0 restricts to the Xbar layer.
  PowerSeries lhs25 = series_from(
      [](int n) {
        return family_poly(Family::Xbar, n, [](const StatVector& st) {
          Monomial m = Monomial::var(Var::a, st.lema) *
                       Monomial::var(Var::abar, st.loma) *
                       Monomial::var(Var::p, st.ress) *
                       Monomial::var(Var::q, st.les) *
                       Monomial::var(Var::t, st.des);
          return MultiPoly::term(m, 1);
        });
      },
      N);
  expect_series_equal(c, lhs25, catalog("cor2.5").expand(N), "Corollary 2.5");
  c.summary("Corollaries 2.2-2.5 match their enumerated polynomials through x^" +
            std::to_string(N));
}

void check_p3(Ctx& c) {
  const int N = c.max_n;
  // The printed left side reads p^ress q^les, but the [n]^2 / binom^2 scheme
  // is the t -> t/(p+q)^2 substitution of Corollary 2.5, so the exponents
  // carry the des-shift of the Theorem 2.11 quotient. The shifted sum is
  // what the fraction generates; the unshifted one fails already at x^2.
  PowerSeries lhs = series_from(
      [](int n) {
        return family_poly(Family::Xhat, n, [](const StatVector& st) {
          Monomial m = Monomial::var(Var::p, st.ress - st.des) *
                       Monomial::var(Var::q, st.les - st.des) *
                       Monomial::var(Var::t, st.des);
          return MultiPoly::term(m, 1);
        });
      },
      N);
  expect_series_equal(c, lhs, catalog("xhat").expand(N),
                      "Corollary (2.11) Xhat J-fraction");
  c.note("the displayed left side lacks the des-shift: the fraction "
         "generates sum p^(ress-des) q^(les-des) t^des over Xhat");
  // Reduction to (1.10) at p = q = t = 1.
  SeidelTriangle tri = seidel(N);
  auto h = tri.h();
  const std::set<Var> nothing;
  for (int n = 0; n <= N; ++n) {
    MultiPoly v = lhs.coeff(n).keep_only(nothing);
    if (!(v == MultiPoly(h[n]))) {
      c.fail("|Xhat_{" + std::to_string(2 * n) + "}| = " + v.to_string() +
             " != h_" + std::to_string(n) + " = " + h[n].str());
      return;
    }
  }
  c.summary("Xhat generating function matches the [n]^2 / binom^2 scheme; reduces to h_n at p=q=t=1");
}

void check_rz(Ctx& c) {
  const int N = c.max_n;
  PowerSeries cf = catalog("pistol_rz").expand(N - 1);
  for (int m = 1; m <= N; ++m) {
    MultiPoly want = gamma_pistol(m, c.budget);
    if (!(cf.coeff(m - 1) == want)) {
      c.fail("Gamma_" + std::to_string(m) + ": fraction gives " +
             cf.coeff(m - 1).to_string() + ", pistols give " +
             want.to_string());
      return;
    }
  }
  c.note("printed lambda_1 factor (betabar+z) corrected to (betabar+gamma); "
         "the corrected scheme matches brute-force enumeration");
  c.summary("six-variable pistol fraction matches Gamma_m for m <= " +
            std::to_string(N));
}

void check_dperm_cf(Ctx& c) {
  const int N = c.max_n;
  PowerSeries lhs = series_from(
      [](int n) {
        return family_poly(Family::D, n, [](const StatVector& st) {
          Monomial m = Monomial::var(Var::x0, st.fix_e) *
                       Monomial::var(Var::x1, st.fix_o) *
                       Monomial::var(Var::z, st.cyc);
          return MultiPoly::term(m, 1);
        });
      },
      N);
  expect_series_equal(c, lhs, catalog("dperm_cyc").expand(N),
                      "eq. (4.2a) fixed-point/cycle J-fraction");

  // The scheme is the pistol scheme under (alpha, beta, gamma, alphabar,
  // betabar, gammabar) = (x1 z, z, 1, 0, x0 z, 1).
  auto substitute = [](MultiPoly poly) {
    return poly.subst(Var::alpha, V(Var::x1) * V(Var::z))
        .subst(Var::beta, V(Var::z))
        .subst(Var::gamma, MultiPoly::one())
        .subst(Var::alphabar, MultiPoly::zero())
        .subst(Var::betabar, V(Var::x0) * V(Var::z))
        .subst(Var::gammabar, MultiPoly::one());
  };
  const auto& rz = std::get<JFractionSpec>(catalog("pistol_rz").spec);
  const auto& dz = std::get<JFractionSpec>(catalog("dperm_cyc").spec);
  for (int k = 0; k <= 3 && c.ok; ++k) {
    c.require(substitute(rz.b(k)) == dz.b(k),
              "b_" + std::to_string(k) + " mismatch under the pistol substitution");
    if (k >= 1)
      c.require(substitute(rz.lam(k)) == dz.lam(k),
                "lambda_" + std::to_string(k) +
                    " mismatch under the pistol substitution");
  }
  // Displayed heads.
  MultiPoly b0 = V(Var::x0) * V(Var::x1) * V(Var::z) * V(Var::z) + V(Var::z);
  MultiPoly l1 = V(Var::z) * (V(Var::x0) * V(Var::z) + MultiPoly::one()) *
                 (V(Var::x1) * V(Var::z) + MultiPoly::one());
  c.require(dz.b(0) == b0, "b_0 != x0 x1 z^2 + z");
  c.require(dz.lam(1) == l1, "lambda_1 != z (x0 z + 1)(x1 z + 1)");
  c.summary("D-permutation fixed-point/cycle fraction verified against enumeration and the pistol substitution");
}

void check_derangement(Ctx& c) {
  const int N = c.max_n;
  PowerSeries lhs = series_from(
      [](int n) {
        return family_poly(Family::Dstar, n, [](const StatVector& st) {
          return MultiPoly::term(Monomial::var(Var::z, st.cyc), 1);
        });
      },
      N);
  expect_series_equal(c, lhs, catalog("derangement").expand(N),
                      "eq. (4.3) derangement S-fraction");
  c.summary("derangement S-fraction matches the enumerated cycle polynomial through x^" +
            std::to_string(N));
}

}  // namespace

void register_cf_checks(std::vector<CheckDef>& defs) {
  defs.push_back({"cf1.6..1.10", "eqs. (1.6)-(1.10) classical expansions", 0,
                  6, check_cf_intro});
  defs.push_back({"lemma1.4-contract", "Lemma 1.4 contraction formulas", 0, 7,
                  check_contraction});
  defs.push_back({"thm2.1-master", "Theorem 2.1 master continued fraction", 3,
                  0, check_master});
  defs.push_back({"cor2.2..2.5", "Corollaries 2.2-2.5", 3, 0,
                  check_corollaries});
  defs.push_back({"cor2.11-p3", "Corollary (2.11) normalized fraction", 4, 4,
                  check_p3});
  defs.push_back({"lemma4.1-rz", "Lemma 4.1 (Randrianarivony-Zeng)", 3, 0,
                  check_rz});
  defs.push_back({"eq4.2-dperm-cf", "eq. (4.2a)/(4.2b) cycle fraction", 3, 0,
                  check_dperm_cf});
  defs.push_back({"eq4.3-derangement", "eq. (4.3) derangement fraction", 3, 0,
                  check_derangement});
}

}  // namespace genocchi::verify
