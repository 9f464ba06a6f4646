#include <doctest.h>

#include "genocchi/brackets.hpp"
#include "genocchi/catalog.hpp"
#include "genocchi/cfengine.hpp"
#include "genocchi/seidel.hpp"

using namespace genocchi;

namespace {

MultiPoly V(Var v) { return MultiPoly::variable(v); }

void check_int_coeffs(const PowerSeries& s, const std::vector<long>& want) {
  for (std::size_t k = 0; k < want.size(); ++k) {
    REQUIRE(static_cast<int>(k) <= s.order());
    CHECK(s.coeff(static_cast<int>(k)) == MultiPoly(want[k]));
  }
}

}  // namespace

TEST_CASE("seidel triangle reproduces Figure 1") {
  SeidelTriangle tri = seidel(6);
  std::vector<BigInt> G = tri.G();
  std::vector<BigInt> H = tri.H();
  std::vector<BigInt> h = tri.h();
  const long wantG[] = {1, 1, 3, 17, 155, 2073};
  const long wantH[] = {1, 2, 8, 56, 608, 9440, 198272};
  const long wanth[] = {1, 1, 2, 7, 38, 295, 3098};
  for (int i = 0; i < 6; ++i) CHECK(G[i] == wantG[i]);
  for (int i = 0; i < 7; ++i) CHECK(H[i] == wantH[i]);
  for (int i = 0; i < 7; ++i) CHECK(h[i] == wanth[i]);
  CHECK_THROWS_AS(seidel(0), std::domain_error);
}

TEST_CASE("numeric expansions of the four classical fractions") {
  check_int_coeffs(catalog("genocchi").expand(4), {1, 1, 3, 17, 155});
  check_int_coeffs(catalog("mediangenocchi-s").expand(3), {1, 1, 2, 8});
  check_int_coeffs(catalog("mediangenocchi").expand(4), {1, 2, 8, 56, 608});
  check_int_coeffs(catalog("normalized").expand(4), {1, 1, 2, 7, 38});
}

TEST_CASE("trivial expansions") {
  JFractionSpec zero_j{[](int) { return MultiPoly::zero(); },
                       [](int) { return MultiPoly::zero(); }};
  CHECK(jfrac_expand(zero_j, 5) == PowerSeries::one(5));
  SFractionSpec zero_s{[](int) { return MultiPoly::zero(); }};
  CHECK(sfrac_expand(zero_s, 5) == PowerSeries::one(5));
}

TEST_CASE("odd contraction of (1.7) yields the (1.9) coefficients") {
  SFractionSpec mg{[](int j) {
    long k = (j + 1) / 2;
    return MultiPoly(k * k);
  }};
  auto [head, contracted] = contract_odd(mg);
  CHECK(head == MultiPoly(1));
  for (int n = 0; n <= 5; ++n) {
    long np1 = n + 1;
    CHECK(contracted.b(n) == MultiPoly(2 * np1 * np1));
    if (n >= 1) CHECK(contracted.lam(n) == MultiPoly(1L * n * n * np1 * np1));
  }
}

TEST_CASE("contraction identities for generic symbolic alphas") {
  const Var slots[8] = {Var::a, Var::abar, Var::b, Var::bbar,
                        Var::p, Var::q,    Var::y, Var::t};
  SFractionSpec generic{[&slots](int k) {
    return k <= 8 ? V(slots[k - 1]) : MultiPoly::zero();
  }};
  const int N = 7;
  PowerSeries s = sfrac_expand(generic, N);
  CHECK(jfrac_expand(contract_even(generic), N) == s);
  CHECK(contract_odd_expand(generic, N) == s);
}

TEST_CASE("depth stability of J-expansion") {
  for (const char* name : {"master", "xhat", "mediangenocchi", "pistol_rz"}) {
    CatalogEntry entry = catalog(name);
    const auto& spec = std::get<JFractionSpec>(entry.spec);
    for (int depth = 1; depth <= 4; ++depth) {
      PowerSeries a = jfrac_expand(spec, 2 * depth - 1, depth);
      PowerSeries b = jfrac_expand(spec, 2 * depth - 1, depth + 1);
      CHECK(a == b);
    }
  }
}

TEST_CASE("catalog heads match the displayed leading coefficients") {
  const auto& master = std::get<JFractionSpec>(catalog("master").spec);
  // b_0 = a b (abar bbar + t y).
  MultiPoly b0 = V(Var::a) * V(Var::b) *
                 (V(Var::abar) * V(Var::bbar) + V(Var::t) * V(Var::y));
  CHECK(master.b(0) == b0);
  // lambda_1 = a b t (a p + bbar q)(abar p + b q).
  MultiPoly l1 = V(Var::a) * V(Var::b) * V(Var::t) *
                 (V(Var::a) * V(Var::p) + V(Var::bbar) * V(Var::q)) *
                 (V(Var::abar) * V(Var::p) + V(Var::b) * V(Var::q));
  CHECK(master.lam(1) == l1);

  const auto& rz = std::get<JFractionSpec>(catalog("pistol_rz").spec);
  CHECK(rz.b(0) == V(Var::alpha) * V(Var::betabar) +
                       V(Var::beta) * V(Var::gammabar) +
                       V(Var::gamma) * V(Var::alphabar));
  CHECK(rz.lam(1) == (V(Var::alphabar) + V(Var::beta)) *
                         (V(Var::betabar) + V(Var::gamma)) *
                         (V(Var::gammabar) + V(Var::alpha)));

  const auto& xhat = std::get<JFractionSpec>(catalog("xhat").spec);
  std::map<Var, BigInt> ones = {{Var::p, 1}, {Var::q, 1}};
  for (int n = 1; n <= 5; ++n) {
    CHECK(xhat.b(n - 1).eval(ones) == n * n);
    MultiPoly lam = xhat.lam(n);
    CHECK(lam == pq_binomial(n + 1, 2).pow(2) * V(Var::t));
  }

  const auto& c24 = std::get<JFractionSpec>(catalog("cor2.4").spec);
  CHECK(c24.b(0) == V(Var::z) * (V(Var::z) + V(Var::t)));
  CHECK(c24.lam(1) ==
        V(Var::z) * (V(Var::z) + MultiPoly(1)).pow(2) * V(Var::t));
}

TEST_CASE("catalog rejects unknown names with the valid list") {
  CHECK_THROWS_WITH_AS(catalog("nope"), doctest::Contains("master"),
                       std::domain_error);
  CHECK(catalog_names().size() == 15);
}

TEST_CASE("series coefficients of the master fraction start as displayed") {
  PowerSeries s = catalog("master").expand(2);
  CHECK(s.coeff(0) == MultiPoly::one());
  // X_1 = a b (abar bbar + t y).
  CHECK(s.coeff(1) == V(Var::a) * V(Var::b) *
                          (V(Var::abar) * V(Var::bbar) + V(Var::t) * V(Var::y)));
}
