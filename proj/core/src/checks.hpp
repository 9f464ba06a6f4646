#pragma once

// Internal plumbing shared by the check implementations. Not installed.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "genocchi/families.hpp"
#include "genocchi/multipoly.hpp"
#include "genocchi/permutation.hpp"
#include "genocchi/series.hpp"
#include "genocchi/stats.hpp"
#include "genocchi/verify.hpp"

namespace genocchi::verify {

/// Mutable state threaded through a check: resolved parameters plus the
/// first failure witness and any informational notes.
struct Ctx {
  int max_n = 0;
  int order = 0;
  std::uint64_t budget = kDefaultBudget;

  bool ok = true;
  std::string witness;
  std::vector<std::string> notes;

  void fail(const std::string& msg) {
    if (ok) {
      ok = false;
      witness = msg;
    }
  }
  void require(bool cond, const std::string& msg) {
    if (!cond) fail(msg);
  }
  void note(const std::string& msg) { notes.push_back(msg); }
  void summary(const std::string& msg) {
    if (ok) witness = msg;
  }
};

struct CheckDef {
  std::string id;
  std::string theorem;
  int default_max_n;
  int default_order;
  std::function<void(Ctx&)> fn;
};

const std::vector<CheckDef>& check_table();

// Registration units, one per paper region.
void register_intro_checks(std::vector<CheckDef>& defs);
void register_cf_checks(std::vector<CheckDef>& defs);
void register_gamma_checks(std::vector<CheckDef>& defs);
void register_path_checks(std::vector<CheckDef>& defs);
void register_action_checks(std::vector<CheckDef>& defs);

// ---- shared helpers ----

/// Memoized family enumeration (filter mode), shared across checks.
const std::vector<Permutation>& cached_family(Family f, int n);

/// Sum of a per-permutation monomial over a family.
MultiPoly family_poly(Family f, int n,
                      const std::function<MultiPoly(const StatVector&)>& mono);

/// The full eight-variable X_n polynomial (cached).
const MultiPoly& x_full_poly(int n);
/// The five-variable Y_n polynomial over Ystar_{2n+1} (cached).
const MultiPoly& y_full_poly(int n);

/// Statistic monomial a^lema abar^loma b^romi bbar^remi p^ress q^les
/// y^dom t^des.
MultiPoly x_monomial(const StatVector& st);
/// Statistic monomial a^lema p^res q^les y^dd t^des.
MultiPoly y_monomial(const StatVector& st);

/// Series with coefficients 1 + sum_n poly(n) x^n for n = 1..N.
PowerSeries series_from(const std::function<MultiPoly(int)>& coeff, int N);

/// Compares two series, failing the context with the first differing order.
void expect_series_equal(Ctx& c, const PowerSeries& got,
                         const PowerSeries& want, const std::string& label);

/// Frozen Figure 1 columns.
const std::vector<long>& figure1_G();
const std::vector<long>& figure1_H();
const std::vector<long>& figure1_h();

}  // namespace genocchi::verify
