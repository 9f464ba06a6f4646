#include <doctest.h>

#include <algorithm>

#include "genocchi/families.hpp"
#include "genocchi/permutation.hpp"
#include "genocchi/signature.hpp"
#include "genocchi/stats.hpp"

using namespace genocchi;

namespace {

Permutation P(const std::string& s) { return Permutation::parse_one_line(s); }

template <typename Fn>
void for_each_perm(int m, Fn fn) {
  std::vector<int> w(m);
  for (int i = 0; i < m; ++i) w[i] = i + 1;
  do {
    fn(Permutation(w));
  } while (std::next_permutation(w.begin(), w.end()));
}

}  // namespace

TEST_CASE("parsing") {
  CHECK(P("3 1 4 2").word() == std::vector<int>{3, 1, 4, 2});
  CHECK(P("3,1,4,2").word() == std::vector<int>{3, 1, 4, 2});
  CHECK_THROWS_AS(P("1 1 2"), std::domain_error);
  CHECK_THROWS_AS(P("1 3"), std::domain_error);
  CHECK_THROWS_AS(P("x y"), std::domain_error);

  CHECK(Permutation::parse_cycles("(1,3,4,2)").word() ==
        std::vector<int>{3, 1, 4, 2});
  CHECK(Permutation::parse_cycles("(1,2)(3)(4)").word() ==
        std::vector<int>{2, 1, 3, 4});
  CHECK_THROWS_AS(Permutation::parse_cycles("(1,3)"), std::domain_error);
  CHECK_THROWS_AS(Permutation::parse_cycles("(1,2)(2,3)"), std::domain_error);
}

TEST_CASE("basic statistics on pinned examples") {
  Permutation s = P("3 1 4 2");
  CHECK(stat_des(s) == 2);
  CHECK(stat_drop(s) == 2);
  CHECK(stat_cyc(s) == 1);

  Permutation id4 = Permutation::identity(4);
  CHECK(stat_des(id4) == 0);
  CHECK(stat_drop(id4) == 0);
  CHECK(stat_cyc(id4) == 4);
  CHECK(stat_lma(id4) == 4);
  CHECK(stat_rmi(id4) == 4);

  Permutation s21 = P("2 1");
  CHECK(stat_des(s21) == 1);
  CHECK(stat_drop(s21) == 1);
  CHECK(stat_cyc(s21) == 1);
}

TEST_CASE("parity split of maxima and minima") {
  StatVector a = compute_stats(P("1 2"));
  CHECK(a.lema == 1);
  CHECK(a.loma == 1);
  CHECK(a.remi == 1);
  CHECK(a.romi == 1);

  StatVector b = compute_stats(P("2 1"));
  CHECK(b.lema == 1);
  CHECK(b.loma == 0);
  CHECK(b.remi == 0);
  CHECK(b.romi == 1);

  StatVector c = compute_stats(Permutation::identity(4));
  CHECK(c.lema == 2);
  CHECK(c.loma == 2);
  CHECK(c.remi == 2);
  CHECK(c.romi == 2);
}

TEST_CASE("embracing statistics") {
  StatVector st = compute_stats(P("2 4 1 3"));
  CHECK(st.les == 1);   // value 3 under the descent (4,1)
  CHECK(st.ress == 1);  // value 2 under the descent (4,1)
  CHECK(st.res == 1);   // value 2 under the ascent (1,3)

  StatVector inc = compute_stats(Permutation::identity(6));
  CHECK(inc.les == 0);
  CHECK(inc.ress == 0);
  CHECK(inc.res == 0);
}

TEST_CASE("per-value embracing vectors sum to the statistics") {
  for (int m = 1; m <= 6; ++m) {
    for_each_perm(m, [](const Permutation& s) {
      StatVector st = compute_stats(s);
      int les = 0, ress = 0, res = 0;
      for (int v = 1; v <= s.size(); ++v) {
        les += st.l_desc[v];
        ress += st.r_desc[v];
        res += st.r_asc[v];
      }
      CHECK(les == st.les);
      CHECK(ress == st.ress);
      CHECK(res == st.res);
      CHECK(st.lema + st.loma == st.lma);
      CHECK(st.remi + st.romi == st.rmi);
    });
  }
}

TEST_CASE("dominoes") {
  CHECK(stat_dom(P("2 1")) == 1);
  CHECK(stat_dom(P("2 1 4 3")) == 2);
  CHECK(stat_dom(Permutation::identity(6)) == 0);
  CHECK_THROWS_AS(stat_dom(P("2 1 3")), std::domain_error);
}

TEST_CASE("valley/peak taxonomy with zero boundary") {
  StatVector a = compute_stats(P("2 3 1"));
  CHECK(a.peaks == 1);
  CHECK(a.valleys == 0);
  CHECK(a.dasc == 1);
  CHECK(a.dd == 1);

  StatVector b = compute_stats(Permutation::identity(5));
  CHECK(b.dd == 0);
  CHECK(b.peaks == 1);  // only the final value

  StatVector c = compute_stats(P("1 2 4 5 3"));
  CHECK(c.dd == 1);  // the final 3 under 5 > 3 > 0

  // The final entry is never a valley.
  for (int m = 1; m <= 6; ++m) {
    for_each_perm(m, [](const Permutation& s) {
      StatVector st = compute_stats(s);
      CHECK(st.cls[s.size()] != PosClass::Valley);
      CHECK(st.peaks + st.valleys + st.dasc + st.dd == s.size());
    });
  }
}

TEST_CASE("foata transform on pinned examples") {
  CHECK(foata(P("3 1 4 2")) == P("4 2 1 3"));
  CHECK(foata(Permutation::identity(5)) == Permutation::identity(5));
  CHECK(foata(P("2 1 3 4")) == P("2 1 3 4"));
}

TEST_CASE("foata carries (drop,cyc) to (des,lma), exhaustively to m = 7") {
  for (int m = 1; m <= 7; ++m) {
    for_each_perm(m, [](const Permutation& s) {
      Permutation f = foata(s);
      CHECK(stat_drop(s) == stat_des(f));
      CHECK(stat_cyc(s) == stat_lma(f));
    });
  }
}

TEST_CASE("foata restricts to a bijection E -> X") {
  for (int n = 1; n <= 4; ++n) {
    auto e = generate(Family::E, n, GenMode::Filter);
    std::set<Permutation> images;
    for (const Permutation& s : e) {
      Permutation f = foata(s);
      CHECK(is_member(Family::X, f));
      images.insert(f);
    }
    CHECK(images.size() == e.size());
  }
}

TEST_CASE("signature of the worked example") {
  auto [ws, sf] =
      signature_of(P("2 6 8 1 4 7 14 9 10 12 3 5 11 15 16 13"));
  CHECK(ws.S == std::set<int>{1, 3, 9, 13, 8, 12, 14, 16});
  // (s(2j-1), s(2j)) pairs of Figure 3.
  const int want[8][2] = {{1, 2}, {2, 3}, {3, 3}, {3, 2},
                          {2, 3}, {3, 2}, {2, 2}, {2, 1}};
  for (int j = 1; j <= 8; ++j) {
    CHECK(sf(2 * j - 1) == want[j - 1][0]);
    CHECK(sf(2 * j) == want[j - 1][1]);
  }
}

TEST_CASE("signature of the identity is trivial") {
  auto [ws, sf] = signature_of(Permutation::identity(6));
  CHECK(ws.S.empty());
  for (int i = 1; i <= 6; ++i) CHECK(sf(i) == 1);
}

TEST_CASE("signature rejects non even-odd descent permutations") {
  CHECK_THROWS_AS(signature_of(P("3 2 1 4")), std::domain_error);
}

TEST_CASE("Lemma 2.8 exhaustively for n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    for (const Permutation& s : generate(Family::X, n)) {
      auto [ws, sf] = signature_of(s);  // asserts s = l + r + 1 internally
      CHECK(ws.is_valid());
      StatVector st = compute_stats(s);
      for (int i = 1; i <= 2 * n; ++i)
        CHECK(sf(i) == st.l_desc[i] + st.r_desc[i] + 1);
    }
  }
}

TEST_CASE("les and ress dominate des on the normalized layer (Prop 2.10)") {
  for (int n = 1; n <= 4; ++n) {
    for (const Permutation& s : generate(Family::Xhat, n, GenMode::Filter)) {
      StatVector st = compute_stats(s);
      CHECK(st.les >= st.des);
      CHECK(st.ress >= st.des);
    }
  }
}
