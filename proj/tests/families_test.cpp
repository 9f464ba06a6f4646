#include <doctest.h>

#include <algorithm>

#include "genocchi/families.hpp"
#include "genocchi/pistol.hpp"
#include "genocchi/seidel.hpp"
#include "genocchi/stats.hpp"

using namespace genocchi;

namespace {

Permutation P(const std::string& s) { return Permutation::parse_one_line(s); }

std::vector<Permutation> words(std::initializer_list<const char*> ws) {
  std::vector<Permutation> out;
  for (const char* w : ws) out.push_back(P(w));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("membership on pinned examples") {
  CHECK(is_member(Family::X, P("2 4 1 6 3 7 8 5")));
  CHECK_FALSE(is_member(Family::Xbar, P("2 4 1 6 3 7 8 5")));
  CHECK(is_member(Family::D, Permutation::parse_cycles("(1,3,4,2)")));
  CHECK(is_member(Family::E, Permutation::parse_cycles("(1,2,3,4)")));
  CHECK(is_member(Family::Xhat, P("2 4 1 3")));
  CHECK_FALSE(is_member(Family::Xhat, P("3 4 1 2")));
  CHECK_THROWS_WITH_AS(is_member(Family::D, P("2 1 3")),
                       doctest::Contains("D"), std::domain_error);
  CHECK_THROWS_AS(is_member(Family::Ystar, P("2 1 4 3")), std::domain_error);
}

TEST_CASE("the X_4 list of the introduction") {
  auto got = generate(Family::X, 2);
  auto want = words({"1 2 3 4", "2 1 3 4", "1 2 4 3", "3 4 1 2", "4 1 2 3",
                     "2 3 4 1", "2 4 1 3", "2 1 4 3"});
  CHECK(got == want);
}

TEST_CASE("the D_4 and E_4 lists of the introduction") {
  auto d4 = generate(Family::D, 2);
  CHECK(d4 == words({"1 2 3 4", "2 1 3 4", "4 2 3 1", "1 2 4 3", "2 1 4 3",
                     "3 2 4 1", "4 1 3 2", "3 1 4 2"}));
  auto e4 = generate(Family::E, 2);
  CHECK(e4 == words({"1 2 3 4", "2 1 3 4", "4 2 3 1", "1 2 4 3", "2 1 4 3",
                     "3 2 4 1", "2 4 3 1", "2 3 4 1"}));
}

TEST_CASE("family cardinalities against the Seidel columns") {
  SeidelTriangle tri = seidel(5);
  auto G = tri.G();
  auto H = tri.H();
  auto h = tri.h();
  for (int n = 1; n <= 4; ++n) {
    CHECK(BigInt(generate(Family::D, n).size()) == H[n]);
    CHECK(BigInt(generate(Family::E, n).size()) == H[n]);
    CHECK(BigInt(generate(Family::X, n).size()) == H[n]);
    CHECK(BigInt(generate(Family::DC, n).size()) == G[n - 1]);
    CHECK(BigInt(generate(Family::EC, n).size()) == G[n - 1]);
    CHECK(BigInt(generate(Family::Ystar, n).size()) == H[n]);
    CHECK(BigInt(generate(Family::Xhat, n, GenMode::Filter).size()) == h[n]);
    CHECK(BigInt(generate(Family::Yhat, n).size()) == h[n]);
    // |Y_{2n+1}| = G_{2n+4} by enumeration (the introduction's G_{2n+2} is
    // off by one Genocchi index, as is its even-even count for S_{2n}).
    CHECK(BigInt(generate(Family::Y, n).size()) == G[n + 1]);
  }
}

TEST_CASE("Xhat and Ystar explicit lists") {
  CHECK(generate(Family::Xhat, 1, GenMode::Filter) == words({"1 2"}));
  CHECK(generate(Family::Xhat, 2, GenMode::Filter) ==
        words({"1 2 3 4", "2 4 1 3"}));
  CHECK(generate(Family::Xhat, 3, GenMode::Filter) ==
        words({"1 2 3 4 5 6", "1 2 4 6 3 5", "2 4 1 3 5 6", "2 3 4 6 1 5",
               "2 6 1 3 4 5", "2 3 6 1 4 5", "2 4 6 1 3 5"}));
  CHECK(generate(Family::Ystar, 2) ==
        words({"1 2 3 4 5", "1 2 4 5 3", "2 3 4 5 1", "2 4 5 3 1",
               "2 4 5 1 3", "2 3 1 4 5", "3 1 2 4 5", "4 5 1 2 3"}));
}

TEST_CASE("Xbar_{6,1} holds the 24 listed E-permutations") {
  std::vector<Permutation> got;
  for (const Permutation& s : generate(Family::Xbar, 3))
    if (stat_des(s) == 1) got.push_back(s);
  CHECK(got.size() == 24);
  auto want = words(
      {"1 2 4 5 6 3", "1 2 4 6 3 5", "1 2 5 6 3 4", "1 2 6 3 4 5",
       "2 3 4 1 5 6", "2 4 1 3 5 6", "4 1 2 3 5 6", "3 4 1 2 5 6",
       "2 6 1 3 4 5", "3 6 1 2 4 5", "4 6 1 2 3 5", "5 6 1 2 3 4",
       "2 3 6 1 4 5", "2 4 6 1 3 5", "2 5 6 1 3 4", "3 4 6 1 2 5",
       "3 5 6 1 2 4", "4 5 6 1 2 3", "2 3 4 6 1 5", "2 3 5 6 1 4",
       "2 4 5 6 1 3", "3 4 5 6 1 2", "2 3 4 5 6 1", "6 1 2 3 4 5"});
  CHECK(got == want);
}

TEST_CASE("filter and accelerated X generators agree") {
  for (int n = 1; n <= 4; ++n) {
    CHECK(generate(Family::X, n, GenMode::Filter) ==
          generate(Family::X, n, GenMode::Accelerated));
  }
}

TEST_CASE("parallel filter matches sequential") {
  CHECK(generate(Family::X, 3, GenMode::Filter, kDefaultBudget, 4) ==
        generate(Family::X, 3, GenMode::Filter));
  CHECK(generate(Family::D, 3, GenMode::Filter, kDefaultBudget, 3) ==
        generate(Family::D, 3, GenMode::Filter));
}

TEST_CASE("budget gate names the bound") {
  CHECK_THROWS_WITH_AS(generate(Family::D, 7, GenMode::Filter, 1000),
                       doctest::Contains("budget"), BudgetError);
}

TEST_CASE("Dumont families pinned by enumeration") {
  SeidelTriangle tri = seidel(5);
  auto G = tri.G();
  auto H = tri.H();
  for (int n = 1; n <= 4; ++n) {
    // |Dumont_{2n}| = G_{2n+2}; |DumontDerangement_{2n}| = H_{2n-1}.
    CHECK(BigInt(generate(Family::Dumont, n).size()) == G[n]);
    CHECK(BigInt(generate(Family::DumontDerangement, n).size()) == H[n - 1]);
    // Dstar and DumontDerangement coincide as predicates.
    CHECK(generate(Family::Dstar, n) ==
          generate(Family::DumontDerangement, n));
  }
}

TEST_CASE("pistol validity and the worked example") {
  Pistol ex{{2, 8, 4, 4, 12, 6, 10, 14, 10, 14, 14, 12, 14, 14}};
  REQUIRE(ex.is_valid());
  PistolStats st = pistol_stats(ex);
  CHECK(st.mo == 1);
  CHECK(st.me == 2);
  CHECK(st.fd == 2);
  CHECK(st.fi == 1);
  CHECK(st.sd == 2);
  CHECK(st.si == 1);

  // n = 1: the unique pistol has every statistic zero.
  auto p2 = enumerate_pistols(1);
  REQUIRE(p2.size() == 1);
  CHECK(p2[0].f == std::vector<int>{2, 2});
  PistolStats z = pistol_stats(p2[0]);
  CHECK(z.mo + z.me + z.fd + z.fi + z.sd + z.si == 0);

  CHECK_FALSE(Pistol{{2, 1}}.is_valid());   // odd value
  CHECK_FALSE(Pistol{{2, 2, 4, 2}}.is_valid());  // f(4) < 4
  CHECK_FALSE(Pistol{{4, 4, 4, 4}}.is_valid());  // not surjective
}

TEST_CASE("pistol counts match G_{2n+2}") {
  SeidelTriangle tri = seidel(5);
  auto G = tri.G();
  for (int n = 1; n <= 4; ++n)
    CHECK(BigInt(enumerate_pistols(n).size()) == G[n]);
  CHECK(enumerate_pistols(2).size() == 3);
}

TEST_CASE("gamma_pistol heads") {
  // Gamma_1 = 1 and Gamma_2 = alpha*betabar + beta*gammabar + gamma*alphabar.
  CHECK(gamma_pistol(1) == MultiPoly::one());
  MultiPoly want =
      MultiPoly::variable(Var::alpha) * MultiPoly::variable(Var::betabar) +
      MultiPoly::variable(Var::beta) * MultiPoly::variable(Var::gammabar) +
      MultiPoly::variable(Var::gamma) * MultiPoly::variable(Var::alphabar);
  CHECK(gamma_pistol(2) == want);
}
