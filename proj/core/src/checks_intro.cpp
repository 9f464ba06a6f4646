#include "genocchi/gamma.hpp"
#include "genocchi/seidel.hpp"

#include "checks.hpp"

namespace genocchi::verify {

namespace {

void check_seidel(Ctx& c) {
  SeidelTriangle tri = seidel(6);
  auto G = tri.G();
  auto H = tri.H();
  auto h = tri.h();
  for (std::size_t i = 0; i < figure1_G().size(); ++i) {
    if (i >= G.size() || G[i] != figure1_G()[i]) {
      c.fail("G_" + std::to_string(2 * (i + 1)) + " = " + G[i].str() +
             ", expected " + std::to_string(figure1_G()[i]));
      return;
    }
  }
  for (std::size_t i = 0; i < figure1_H().size(); ++i) {
    if (i >= H.size() || H[i] != figure1_H()[i]) {
      c.fail("H_" + std::to_string(2 * i + 1) + " = " + H[i].str() +
             ", expected " + std::to_string(figure1_H()[i]));
      return;
    }
  }
  for (std::size_t i = 0; i < figure1_h().size(); ++i) {
    if (i >= h.size() || h[i] != figure1_h()[i]) {
      c.fail("h_" + std::to_string(i) + " = " + h[i].str() + ", expected " +
             std::to_string(figure1_h()[i]));
      return;
    }
  }
  c.summary("G, H and H/2^n columns match the boustrophedon table");
}

void check_thm11_counts(Ctx& c) {
  SeidelTriangle tri = seidel(c.max_n + 1);
  auto G = tri.G();
  auto H = tri.H();
  for (int n = 1; n <= c.max_n; ++n) {
    std::size_t nd = cached_family(Family::D, n).size();
    std::size_t ne = cached_family(Family::E, n).size();
    std::size_t nx = cached_family(Family::X, n).size();
    std::size_t nx_fast = generate(Family::X, n, GenMode::Accelerated).size();
    BigInt want = H[n];
    c.require(BigInt(nd) == want, "|D_" + std::to_string(2 * n) + "| = " +
                                      std::to_string(nd) + " != H = " +
                                      want.str());
    c.require(BigInt(ne) == want, "|E_" + std::to_string(2 * n) + "| = " +
                                      std::to_string(ne) + " != H = " +
                                      want.str());
    c.require(BigInt(nx) == want, "|X_" + std::to_string(2 * n) + "| = " +
                                      std::to_string(nx) + " != H = " +
                                      want.str());
    c.require(nx == nx_fast,
              "filter and accelerated X generators disagree at n = " +
                  std::to_string(n));
    std::size_t ndc = cached_family(Family::DC, n).size();
    c.require(BigInt(ndc) == G[n - 1],
              "|DC_" + std::to_string(2 * n) + "| = " + std::to_string(ndc) +
                  " != G_" + std::to_string(2 * n) + " = " + G[n - 1].str());
    if (!c.ok) return;
  }
  c.summary("D/E/X counts match H_{2n+1} and D-cycle counts match G_{2n} for n <= " +
            std::to_string(c.max_n));
}

void check_eq12_gamma(Ctx& c) {
  for (int n = 1; n <= c.max_n; ++n) {
    MultiPoly xp = family_poly(Family::X, n, [](const StatVector& st) {
      return MultiPoly::term(Monomial::var(Var::y, st.dom) *
                                 Monomial::var(Var::t, st.des),
                             1);
    });
    GammaExpansion ge;
    try {
      ge = gamma_extract(xp, n);
    } catch (const GammaError& e) {
      c.fail("X_" + std::to_string(n) + "(y,t): " + e.what());
      return;
    }
    // Descent-class counts over the Xbar layer.
    std::vector<BigInt> counts(n / 2 + 1, 0);
    for (const Permutation& s : cached_family(Family::Xbar, n)) {
      int k = stat_des(s);
      if (k <= n / 2) counts[k] += 1;
    }
    for (int k = 0; k <= n / 2; ++k) {
      if (!(ge.gammas[k] == MultiPoly(counts[k]))) {
        c.fail("gamma_{" + std::to_string(n) + "," + std::to_string(k) +
               "} = " + ge.gammas[k].to_string() + " but |Xbar_{" +
               std::to_string(2 * n) + "," + std::to_string(k) +
               "}| = " + counts[k].str());
        return;
      }
    }
    if (n == 2 && counts[1] != 4) c.fail("|Xbar_{4,1}| != 4");
    if (n == 3 && counts[1] != 24) c.fail("|Xbar_{6,1}| != 24");
  }
  c.summary("descent gamma-coefficients equal |Xbar_{2n,k}| for n <= " +
            std::to_string(c.max_n) + " (spot: |Xbar_{4,1}|=4, |Xbar_{6,1}|=24)");
}

void check_eq15_normalized(Ctx& c) {
  for (int n = 1; n <= c.max_n; ++n) {
    std::vector<BigInt> counts(n / 2 + 1, 0);
    for (const Permutation& s : cached_family(Family::Xbar, n))
      counts[stat_des(s)] += 1;
    BigInt total = 0;
    BigInt four_k = 1;
    for (int k = 0; k <= n / 2; ++k) {
      if (counts[k] % four_k != 0) {
        c.fail("|Xbar_{" + std::to_string(2 * n) + "," + std::to_string(k) +
               "}| = " + counts[k].str() + " not divisible by 4^" +
               std::to_string(k));
        return;
      }
      total += counts[k] / four_k;
      four_k *= 4;
    }
    BigInt hn = seidel(n).h()[n];
    if (total != hn) {
      c.fail("sum |Xbar_{2n,k}|/4^k = " + total.str() + " != h_" +
             std::to_string(n) + " = " + hn.str());
      return;
    }
  }
  c.summary("4^k-divisibility and the normalized refinement hold for n <= " +
            std::to_string(c.max_n));
}

}  // namespace

void register_intro_checks(std::vector<CheckDef>& defs) {
  defs.push_back({"seidel-figure1", "Seidel triangle, Figure 1", 6, 0,
                  check_seidel});
  defs.push_back({"thm1.1-counts", "Theorem 1.1 (Lazar-Wachs counts)", 4, 0,
                  check_thm11_counts});
  defs.push_back({"eq1.2-gamma", "Theorem 1.3 / eq. (1.2) gamma expansion", 4,
                  0, check_eq12_gamma});
  defs.push_back({"eq1.5-normalized", "eq. (1.5) normalized refinement", 4, 0,
                  check_eq15_normalized});
}

}  // namespace genocchi::verify
