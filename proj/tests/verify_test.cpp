#include <doctest.h>

#include "genocchi/verify.hpp"

using namespace genocchi::verify;

TEST_CASE("every CheckId is registered and runnable at tiny budgets") {
  CheckParams small;
  small.max_n = 2;
  small.order = 2;
  const auto& ids = all_check_ids();
  CHECK(ids.size() == 26);
  for (const std::string& id : ids) {
    CHECK(is_check_id(id));
    VerificationReport r = run_check(id, small);
    CHECK(r.check == id);
    CHECK_FALSE(r.theorem.empty());
    // A fail must carry a witness; these shrunken runs are expected green.
    if (r.status == Status::Fail) {
      INFO(id << ": " << r.witness);
      CHECK(r.status != Status::Fail);
    }
  }
  CHECK_FALSE(is_check_id("nonsense"));
  CHECK_THROWS_AS(run_check("nonsense", small), std::domain_error);
}

TEST_CASE("report JSON round-trips") {
  CheckParams small;
  small.max_n = 2;
  small.order = 2;
  std::vector<VerificationReport> reports = {
      run_check("seidel-figure1", small),
      run_check("lemma1.4-contract", small)};
  reports[0].witness = "quoted \"stuff\" and\nnewlines";
  std::string text = to_json(reports);
  auto back = reports_from_json(text);
  REQUIRE(back.size() == reports.size());
  for (std::size_t i = 0; i < reports.size(); ++i) {
    CHECK(back[i].check == reports[i].check);
    CHECK(back[i].theorem == reports[i].theorem);
    CHECK(back[i].max_n == reports[i].max_n);
    CHECK(back[i].order == reports[i].order);
    CHECK(back[i].status == reports[i].status);
    CHECK(back[i].witness == reports[i].witness);
    CHECK(back[i].wall_ms == doctest::Approx(reports[i].wall_ms));
  }
}

TEST_CASE("parallel run returns reports in canonical order") {
  CheckParams small;
  small.max_n = 1;
  small.order = 1;
  auto seq = run_all(small, false);
  auto par = run_all(small, true);
  REQUIRE(seq.size() == par.size());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    CHECK(seq[i].check == par[i].check);
    CHECK(seq[i].status == par[i].status);
  }
  for (std::size_t i = 0; i < seq.size(); ++i)
    CHECK(seq[i].check == all_check_ids()[i]);
}
