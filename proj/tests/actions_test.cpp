#include <doctest.h>

#include <set>

#include "genocchi/actions.hpp"
#include "genocchi/multipoly.hpp"
#include "genocchi/families.hpp"
#include "genocchi/signature.hpp"
#include "genocchi/stats.hpp"

using namespace genocchi;

namespace {

Permutation P(const std::string& s) { return Permutation::parse_one_line(s); }

MultiPoly V(Var v) { return MultiPoly::variable(v); }

std::set<int> sig_set(const Permutation& s) {
  std::set<int> S;
  for (int v : descent_tops(s)) S.insert(v);
  for (int v : descent_bottoms(s)) S.insert(v);
  return S;
}

}  // namespace

TEST_CASE("free pairs") {
  CHECK(free_pairs(Permutation::identity(6)) == std::vector<int>{1, 2, 3});
  // 2 4 1 3 has S = {4,1}; neither pair is free.
  CHECK(free_pairs(P("2 4 1 3")).empty());
  // 2 1 4 3 has both pairs inside S.
  CHECK(free_pairs(P("2 1 4 3")) == std::vector<int>{1, 2});
}

TEST_CASE("theta swaps the pair values") {
  CHECK(theta(P("1 2"), 1) == P("2 1"));
  CHECK(theta(P("2 1"), 1) == P("1 2"));  // adjacent descent swaps back
  CHECK_THROWS_AS(theta(P("2 4 1 3"), 1), ActionError);  // not free
  // theta is an involution wherever it applies, n <= 3.
  for (int n = 1; n <= 3; ++n) {
    for (const Permutation& w : generate(Family::X, n)) {
      std::set<int> S = sig_set(w);
      for (int r : free_pairs(w)) {
        if (S.count(2 * r - 1)) continue;  // outside-S pairs only
        Permutation t = theta(w, r);
        CHECK(is_member(Family::X, t));
        CHECK(theta(t, r) == w);
      }
    }
  }
}

TEST_CASE("interhop on the two-letter example") {
  CHECK(interhop(P("2 1"), 1) == P("1 2"));
  CHECK(interhop(P("1 2"), 1) == P("2 1"));
}

TEST_CASE("interhop involution, descent step and les/ress preservation") {
  for (int n = 1; n <= 3; ++n) {
    for (const Permutation& w : generate(Family::X, n)) {
      StatVector sw = compute_stats(w);
      for (int r : free_pairs(w)) {
        Permutation img = interhop(w, r);
        CHECK(is_member(Family::X, img));
        CHECK(interhop(img, r) == w);
        StatVector si = compute_stats(img);
        CHECK(std::abs(si.des - sw.des) == 1);
        CHECK(si.les == sw.les);
        CHECK(si.ress == sw.ress);
      }
    }
  }
}

TEST_CASE("Lemma 5.2 statistics under theta and interhop") {
  for (int n = 1; n <= 3; ++n) {
    for (const Permutation& w : generate(Family::X, n)) {
      std::set<int> S = sig_set(w);
      StatVector sw = compute_stats(w);
      for (int r : free_pairs(w)) {
        if (!S.count(2 * r - 1)) {
          StatVector th = compute_stats(theta(w, r));
          StatVector ph = compute_stats(interhop(w, r));
          CHECK(th.lema == ph.lema);
          CHECK(th.romi == ph.romi);
          StatVector comp = compute_stats(interhop(theta(w, r), r));
          CHECK(comp.lema == sw.lema);
          CHECK(comp.romi == sw.romi);
        } else {
          StatVector comp = compute_stats(theta(interhop(w, r), r));
          CHECK(comp.lema == sw.lema);
          CHECK(comp.romi == sw.romi);
        }
      }
    }
  }
}

TEST_CASE("interhop orbit identity (5.1)") {
  for (int n = 1; n <= 3; ++n) {
    std::set<Permutation> seen;
    for (const Permutation& s : generate(Family::X, n)) {
      if (seen.count(s)) continue;
      Orbit orb = interhop_orbit(s);
      const Permutation* rep = nullptr;
      for (const Permutation& m : orb.members) {
        seen.insert(m);
        if (is_member(Family::Xbar, m)) {
          CHECK(rep == nullptr);
          rep = &m;
        }
      }
      REQUIRE(rep != nullptr);
      StatVector sr = compute_stats(*rep);
      CHECK(orb.members.size() == (std::size_t{1} << (n - 2 * sr.des)));
      MultiPoly lhs;
      for (const Permutation& m : orb.members) {
        StatVector st = compute_stats(m);
        lhs += MultiPoly::term(
            Monomial::var(Var::p, st.les) * Monomial::var(Var::q, st.ress) *
                Monomial::var(Var::t, st.des) * Monomial::var(Var::y, st.dom),
            1);
      }
      MultiPoly rhs =
          MultiPoly::term(Monomial::var(Var::p, sr.les) *
                              Monomial::var(Var::q, sr.ress) *
                              Monomial::var(Var::t, sr.des),
                          1) *
          (MultiPoly::one() + V(Var::y) * V(Var::t)).pow(n - 2 * sr.des);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("normalizer_phi worked examples of section 6") {
  Permutation base = P("5 6 3 4 7 8 1 2 9 10");
  CHECK(normalizer_phi(base, 1) == P("2 5 6 3 4 7 8 1 9 10"));
  CHECK(normalizer_phi(base, 3) == P("5 6 1 2 4 7 8 3 9 10"));
  CHECK(normalizer_phi(base, 6) == P("5 7 8 3 4 6 1 2 9 10"));
  CHECK(normalizer_phi(base, 8) == P("5 6 3 4 8 1 2 7 9 10"));
  CHECK_THROWS_AS(normalizer_phi(base, 2), ActionError);  // 2 not in S
}

TEST_CASE("normalizer orbit of the section 6 example") {
  Orbit orb = normalizer_orbit(P("1 2 4 6 3 5"));
  std::set<Permutation> want = {P("1 2 4 6 3 5"), P("1 2 6 3 4 5"),
                                P("1 2 4 5 6 3"), P("1 2 5 6 3 4")};
  CHECK(std::set<Permutation>(orb.members.begin(), orb.members.end()) == want);
  // The identity has an empty signature set: singleton orbit.
  CHECK(normalizer_orbit(Permutation::identity(6)).members.size() == 1);
}

TEST_CASE("normalizer_phi involution, commutation and signature preservation") {
  for (int n = 1; n <= 3; ++n) {
    for (const Permutation& s : generate(Family::Xbar, n)) {
      std::set<int> S = sig_set(s);
      for (int x : S) {
        Permutation img = normalizer_phi(s, x);
        CHECK(is_member(Family::Xbar, img));
        CHECK(sig_set(img) == S);
        CHECK(normalizer_phi(img, x) == s);
        for (int x2 : S) {
          if (x2 <= x) continue;
          CHECK(normalizer_phi(normalizer_phi(s, x), x2) ==
                normalizer_phi(normalizer_phi(s, x2), x));
        }
      }
    }
  }
}

TEST_CASE("orbit sizes over Xbar are powers of two") {
  for (int n = 1; n <= 3; ++n) {
    for (const Permutation& s : generate(Family::Xbar, n)) {
      Orbit orb = normalizer_orbit(s);
      CHECK(orb.members.size() == (std::size_t{1} << sig_set(s).size()));
    }
  }
}

TEST_CASE("section 6 orbit identity (6.4)") {
  for (int n = 1; n <= 3; ++n) {
    for (const Permutation& rep : generate(Family::Xhat, n, GenMode::Filter)) {
      StatVector sr = compute_stats(rep);
      int k = sr.des;
      Orbit orb = normalizer_orbit(rep);
      MultiPoly lhs;
      for (const Permutation& m : orb.members) {
        StatVector st = compute_stats(m);
        lhs += MultiPoly::term(Monomial::var(Var::p, st.ress) *
                                   Monomial::var(Var::q, st.les),
                               1);
      }
      MultiPoly rhs = (V(Var::p) + V(Var::q)).pow(2 * k) *
                      MultiPoly::term(Monomial::var(Var::q, sr.les - k) *
                                          Monomial::var(Var::p, sr.ress - k),
                                      1);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("fbar_phi fixed points and involution") {
  // No VOP pairs: the orbit is a singleton.
  CHECK(vop_pairs_of(Permutation::identity(5)).empty());
  CHECK(fbar_orbit(Permutation::identity(7)).members.size() == 1);

  for (int n = 1; n <= 3; ++n) {
    for (const Permutation& s : generate(Family::Ybar, n)) {
      StatVector st = compute_stats(s);
      for (int i : vop_pairs_of(s)) {
        Permutation img = fbar_phi(s, i);
        CHECK(is_member(Family::Ybar, img));
        CHECK(fbar_phi(img, i) == s);
        // Valley and peak sets are preserved.
        StatVector si = compute_stats(img);
        for (int v = 1; v <= s.size(); ++v) {
          PosClass ca = st.cls[s.position_of(v)];
          PosClass cb = si.cls[img.position_of(v)];
          CHECK((ca == PosClass::Valley) == (cb == PosClass::Valley));
          CHECK((ca == PosClass::Peak) == (cb == PosClass::Peak));
        }
        // Delta per the embracing parity.
        int want_dres = vop_embracing_number(s, i) % 2 == 0 ? -1 : 1;
        CHECK(si.res - st.res == want_dres);
        CHECK(si.les - st.les == -want_dres);
        for (int i2 : vop_pairs_of(s)) {
          if (i2 <= i) continue;
          CHECK(fbar_phi(fbar_phi(s, i), i2) ==
                fbar_phi(fbar_phi(s, i2), i));
        }
      }
    }
  }
}

TEST_CASE("section 7 orbit identity on Ybar*_{7,1}") {
  for (int n = 2; n <= 3; ++n) {
    std::map<int, MultiPoly> via_orbits;
    for (const Permutation& rep : generate(Family::Yhat, n)) {
      StatVector sr = compute_stats(rep);
      int k = sr.des;
      CHECK(static_cast<int>(vop_pairs_of(rep).size()) == 2 * k);
      Orbit orb = fbar_orbit(rep);
      MultiPoly lhs;
      for (const Permutation& m : orb.members) {
        StatVector st = compute_stats(m);
        lhs += MultiPoly::term(Monomial::var(Var::p, st.res) *
                                   Monomial::var(Var::q, st.les),
                               1);
      }
      MultiPoly rhs = (V(Var::p) + V(Var::q)).pow(2 * k) *
                      MultiPoly::term(Monomial::var(Var::p, sr.res - 2 * k) *
                                          Monomial::var(Var::q, sr.les),
                                      1);
      CHECK(lhs == rhs);
      via_orbits[k] += lhs;
    }
    // Orbit sums reproduce gamma_{n,k}(1,p,q) from direct enumeration.
    for (int k = 0; k <= n / 2; ++k) {
      MultiPoly direct;
      for (const Permutation& s : generate(Family::Ybar, n)) {
        StatVector st = compute_stats(s);
        if (st.des != k) continue;
        direct += MultiPoly::term(Monomial::var(Var::p, st.res) *
                                      Monomial::var(Var::q, st.les),
                                  1);
      }
      MultiPoly got = via_orbits.count(k) ? via_orbits[k] : MultiPoly::zero();
      CHECK(direct == got);
    }
  }
}
