#include <doctest.h>

#include <set>

#include "genocchi/brackets.hpp"
#include "genocchi/families.hpp"
#include "genocchi/multipoly.hpp"
#include "genocchi/pathdiag.hpp"
#include "genocchi/stats.hpp"
#include "genocchi/weights.hpp"

using namespace genocchi;

namespace {

Permutation P(const std::string& s) { return Permutation::parse_one_line(s); }

MultiPoly V(Var v) { return MultiPoly::variable(v); }

}  // namespace

TEST_CASE("path parsing and validity") {
  MotzkinPath p = MotzkinPath::parse("UUL1DUDL2D");
  CHECK(p.length() == 8);
  CHECK(p.to_string() == "UUL1DUDL2D");
  CHECK(p.is_valid());
  CHECK(p.start_height(1) == 0);
  CHECK(p.start_height(4) == 2);
  CHECK(p.end_height(4) == 1);
  CHECK_THROWS_AS(MotzkinPath::parse("UD D"), std::domain_error);
  CHECK_THROWS_AS(MotzkinPath::parse("DU"), std::domain_error);  // dips below 0
  CHECK_THROWS_AS(MotzkinPath::parse("UU"), std::domain_error);  // open
}

TEST_CASE("diagram counts are median Genocchi numbers") {
  const long H[] = {1, 2, 8, 56, 608};
  for (int n = 0; n <= 4; ++n)
    CHECK(enumerate_diagrams(n).size() == std::size_t(H[n]));
}

TEST_CASE("n = 1 diagrams are the two labelled level steps") {
  auto ds = enumerate_diagrams(1);
  REQUIRE(ds.size() == 2);
  for (const auto& d : ds) {
    CHECK(d.xi[0] == 0);
    CHECK(d.xi_prime[0] == 0);
    CHECK((d.path.steps[0] == Step::L1 || d.path.steps[0] == Step::L2));
  }
}

TEST_CASE("label bounds are enforced") {
  PathDiagram d;
  d.path = MotzkinPath::parse("L1");
  d.xi = {0};
  d.xi_prime = {1};  // level at height 0 allows only (0,0)
  CHECK_FALSE(d.is_legal());
  d.xi_prime = {0};
  CHECK(d.is_legal());
}

TEST_CASE("phi on the worked example of section 3") {
  PathDiagram d = phi(P("2 6 8 1 4 7 14 9 10 12 3 5 11 15 16 13"));
  CHECK(d.path.to_string() == "UUL1DUDL2D");
  CHECK(d.xi == std::vector<int>{0, 0, 0, 1, 1, 0, 0, 1});
  CHECK(d.xi_prime == std::vector<int>{1, 1, 2, 1, 1, 0, 1, 0});
}

TEST_CASE("phi of the identity is all unlabelled L1 steps") {
  PathDiagram d = phi(Permutation::identity(8));
  CHECK(d.path.to_string() == "L1L1L1L1");
  for (int j = 0; j < 4; ++j) {
    CHECK(d.xi[j] == 0);
    CHECK(d.xi_prime[j] == 0);
  }
  CHECK(phi_inverse(d) == Permutation::identity(8));
}

TEST_CASE("phi round-trips exhaustively for n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    std::set<std::string> seen;
    for (const Permutation& s : generate(Family::X, n, GenMode::Filter)) {
      PathDiagram d = phi(s);
      CHECK(d.is_legal());
      CHECK(phi_inverse(d) == s);
      seen.insert(d.to_string());
    }
    auto all = enumerate_diagrams(n);
    CHECK(seen.size() == all.size());
    for (const PathDiagram& d : all) CHECK(phi(phi_inverse(d)).to_string() == d.to_string());
  }
}

TEST_CASE("phi rejects non-members") {
  CHECK_THROWS_AS(phi(P("3 2 1 4")), std::domain_error);
}

TEST_CASE("step weight sums reproduce the bracket products") {
  for (int h = 0; h <= 4; ++h) {
    // Master scheme rows of the weight table.
    CHECK(step_weight_sum(Scheme::Master, Step::U, h) ==
          V(Var::t) * pq_bracket(V(Var::b), h + 1, Var::q, Var::p) *
              pq_bracket(V(Var::a), h + 2, V(Var::bbar)));
    if (h >= 1)
      CHECK(step_weight_sum(Scheme::Master, Step::D, h) ==
            pq_bracket(V(Var::abar), h + 1, V(Var::b)) *
                pq_bracket(V(Var::a), h));
    CHECK(step_weight_sum(Scheme::Master, Step::L1, h) ==
          pq_bracket(V(Var::abar), h + 1, V(Var::b)) *
              pq_bracket(V(Var::a), h + 1, V(Var::bbar)));
    CHECK(step_weight_sum(Scheme::Master, Step::L2, h) ==
          V(Var::t) * V(Var::y) * pq_bracket(V(Var::a), h + 1) *
              pq_bracket(V(Var::b), h + 1, Var::q, Var::p));

    // Odd-odd scheme rows.
    CHECK(step_weight_sum(Scheme::OddOdd, Step::U, h) ==
          V(Var::t) * pq_int(h + 1) * pq_bracket(V(Var::a), h + 2));
    if (h >= 1)
      CHECK(step_weight_sum(Scheme::OddOdd, Step::D, h) ==
            pq_int(h + 1) * pq_bracket(V(Var::a), h));
    CHECK(step_weight_sum(Scheme::OddOdd, Step::L1, h) ==
          pq_int(h + 1) * pq_bracket(V(Var::a), h + 1));
    CHECK(step_weight_sum(Scheme::OddOdd, Step::L2, h) ==
          V(Var::t) * V(Var::y) * pq_int(h + 1) *
              pq_bracket(V(Var::a), h + 1));
  }
}

TEST_CASE("single-step weights match the X_1 monomials") {
  // L2 with zero labels carries a b t y, matching sigma = 2 1.
  CHECK(step_weight(Scheme::Master, Step::L2, 0, 0, 0) ==
        V(Var::a) * V(Var::b) * V(Var::t) * V(Var::y));
  // L1 with zero labels carries a abar b bbar, matching sigma = 1 2.
  CHECK(step_weight(Scheme::Master, Step::L1, 0, 0, 0) ==
        V(Var::a) * V(Var::abar) * V(Var::b) * V(Var::bbar));
}

TEST_CASE("diagram weight equals the statistic monomial of the preimage") {
  for (int n = 1; n <= 3; ++n) {
    for (const PathDiagram& d : enumerate_diagrams(n)) {
      Permutation s = phi_inverse(d);
      StatVector st = compute_stats(s);
      Monomial m = Monomial::var(Var::a, st.lema) *
                   Monomial::var(Var::abar, st.loma) *
                   Monomial::var(Var::b, st.romi) *
                   Monomial::var(Var::bbar, st.remi) *
                   Monomial::var(Var::p, st.ress) *
                   Monomial::var(Var::q, st.les) *
                   Monomial::var(Var::y, st.dom) *
                   Monomial::var(Var::t, st.des);
      CHECK(diagram_weight(Scheme::Master, d) == MultiPoly::term(m, 1));
    }
  }
}

TEST_CASE("flajolet identity for both schemes") {
  CHECK(flajolet_check(Scheme::Master, 4).pass);
  CHECK(flajolet_check(Scheme::OddOdd, 4).pass);
  // Zero weights: both sides are 1.
  auto zero = [](int) { return MultiPoly::zero(); };
  FlajoletResult r = flajolet_check_generic(zero, zero, zero, zero, 4);
  CHECK(r.pass);
}

TEST_CASE("psi classifies odd values") {
  // Identity of length 5: odd carriers 1 and 3 are double ascents.
  PathDiagram d = psi(Permutation::identity(5));
  CHECK(d.path.to_string() == "L1L1");
  CHECK(d.xi == std::vector<int>{0, 0});
  CHECK(d.xi_prime == std::vector<int>{0, 0});

  // Y*_3: 123 -> L1 and 231 -> L2.
  CHECK(psi(P("1 2 3")).path.to_string() == "L1");
  CHECK(psi(P("2 3 1")).path.to_string() == "L2");

  CHECK_THROWS_AS(psi(P("2 1 3")), std::domain_error);   // descent (2,1)
  CHECK_THROWS_AS(psi(P("1 3 2")), std::domain_error);   // ends even
}

TEST_CASE("psi is injective with median Genocchi image counts") {
  const long H[] = {1, 2, 8, 56};
  for (int n = 1; n <= 3; ++n) {
    std::set<std::string> images;
    auto members = generate(Family::Ystar, n);
    for (const Permutation& s : members) {
      PathDiagram d = psi(s);
      CHECK(d.is_legal());
      images.insert(d.to_string());
    }
    CHECK(images.size() == members.size());
    CHECK(images.size() == std::size_t(H[n]));
  }
}

TEST_CASE("psi weight aggregates to the odd-odd fraction") {
  // Sum of diagram weights over psi images equals the Y_n polynomial, which
  // the flajolet check ties to the fraction; spot-check n = 2 directly.
  MultiPoly total;
  for (const Permutation& s : generate(Family::Ystar, 2))
    total += diagram_weight(Scheme::OddOdd, psi(s));
  MultiPoly want;
  for (const Permutation& s : generate(Family::Ystar, 2)) {
    StatVector st = compute_stats(s);
    Monomial m = Monomial::var(Var::a, st.lema) *
                 Monomial::var(Var::p, st.res) *
                 Monomial::var(Var::q, st.les) *
                 Monomial::var(Var::y, st.dd) * Monomial::var(Var::t, st.des);
    want += MultiPoly::term(m, 1);
  }
  CHECK(total == want);
}
