#include "genocchi/verify.hpp"

#include <chrono>
#include <future>
#include <mutex>
#include <sstream>

#include <json.hpp>

#include "checks.hpp"

namespace genocchi::verify {

std::string status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
  }
  return "?";
}

const std::vector<CheckDef>& check_table() {
  static const std::vector<CheckDef> defs = [] {
    std::vector<CheckDef> d;
    register_intro_checks(d);
    register_cf_checks(d);
    register_gamma_checks(d);
    register_path_checks(d);
    register_action_checks(d);
    return d;
  }();
  return defs;
}

const std::vector<std::string>& all_check_ids() {
  // Canonical order; coverage against the registered table is asserted so a
  // check can neither go missing nor appear unregistered.
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v = {
        "seidel-figure1",  "thm1.1-counts",   "eq1.2-gamma",
        "eq1.5-normalized", "cf1.6..1.10",    "lemma1.4-contract",
        "thm2.1-master",   "cor2.2..2.5",     "thm2.6-cycles",
        "thm2.7-gamma",    "lemma2.8-signature", "prop2.10",
        "thm2.11-factorization", "cor2.11-p3", "lemma3.1-flajolet",
        "lemma3.2-bijection", "lemma3.3-indicators", "sec4-pistol-stats",
        "lemma4.1-rz",     "eq4.2-dperm-cf",  "eq4.3-derangement",
        "sec5-orbits",     "sec6-orbits",     "thm7.2-specialization",
        "thm7.4-gamma",    "thm7.x-factorization"};
    const auto& table = check_table();
    if (table.size() != v.size())
      throw std::logic_error("check table size mismatch");
    for (const std::string& id : v) {
      bool found = false;
      for (const CheckDef& d : table) found = found || d.id == id;
      if (!found) throw std::logic_error("check not registered: " + id);
    }
    return v;
  }();
  return ids;
}

bool is_check_id(const std::string& id) {
  for (const auto& known : all_check_ids())
    if (known == id) return true;
  return false;
}

VerificationReport run_check(const std::string& id, const CheckParams& p) {
  const CheckDef* def = nullptr;
  for (const CheckDef& d : check_table()) {
    if (d.id == id) {
      def = &d;
      break;
    }
  }
  if (!def) throw std::domain_error("unknown check id '" + id + "'");

  Ctx ctx;
  ctx.max_n = p.max_n >= 0 ? p.max_n : def->default_max_n;
  ctx.order = p.order >= 0 ? p.order : def->default_order;
  ctx.budget = p.budget;

  VerificationReport rep;
  rep.check = def->id;
  rep.theorem = def->theorem;
  rep.max_n = ctx.max_n;
  rep.order = ctx.order;

  auto start = std::chrono::steady_clock::now();
  try {
    def->fn(ctx);
    rep.status = ctx.ok ? Status::Pass : Status::Fail;
    rep.witness = ctx.witness;
  } catch (const BudgetError& e) {
    rep.status = Status::Skipped;
    rep.witness = std::string("budget: ") + e.what();
  } catch (const std::exception& e) {
    rep.status = Status::Fail;
    rep.witness = std::string("exception: ") + e.what();
  }
  for (const std::string& n : ctx.notes) {
    rep.witness += rep.witness.empty() ? "note: " : "; note: ";
    rep.witness += n;
  }
  rep.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  return rep;
}

std::vector<VerificationReport> run_all(const CheckParams& p, bool parallel) {
  const auto& ids = all_check_ids();
  std::vector<VerificationReport> out(ids.size());
  if (!parallel) {
    for (std::size_t i = 0; i < ids.size(); ++i) out[i] = run_check(ids[i], p);
    return out;
  }
  std::vector<std::future<VerificationReport>> futs;
  futs.reserve(ids.size());
  for (const std::string& id : ids)
    futs.push_back(std::async(std::launch::async,
                              [&p, id] { return run_check(id, p); }));
  for (std::size_t i = 0; i < futs.size(); ++i) out[i] = futs[i].get();
  return out;
}

std::string to_json(const std::vector<VerificationReport>& reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json obj;
    obj["check"] = r.check;
    obj["theorem"] = r.theorem;
    obj["params"] = {{"max_n", r.max_n}, {"order", r.order}};
    obj["status"] = status_name(r.status);
    obj["witness"] = r.witness;
    obj["wall_ms"] = r.wall_ms;
    arr.push_back(obj);
  }
  return arr.dump(2);
}

std::vector<VerificationReport> reports_from_json(const std::string& text) {
  auto arr = nlohmann::json::parse(text);
  std::vector<VerificationReport> out;
  for (const auto& obj : arr) {
    VerificationReport r;
    r.check = obj.at("check").get<std::string>();
    r.theorem = obj.at("theorem").get<std::string>();
    r.max_n = obj.at("params").at("max_n").get<int>();
    r.order = obj.at("params").at("order").get<int>();
    std::string st = obj.at("status").get<std::string>();
    r.status = st == "pass" ? Status::Pass
               : st == "fail" ? Status::Fail
                              : Status::Skipped;
    r.witness = obj.at("witness").get<std::string>();
    r.wall_ms = obj.at("wall_ms").get<double>();
    out.push_back(std::move(r));
  }
  return out;
}

std::string render_line(const VerificationReport& r) {
  std::ostringstream os;
  os << (r.status == Status::Pass ? "PASS" :
         r.status == Status::Fail ? "FAIL" : "SKIP")
     << "  " << r.check << "  [" << r.theorem << "]"
     << "  (max_n=" << r.max_n << ", order=" << r.order << ", "
     << static_cast<long>(r.wall_ms) << " ms)";
  if (!r.witness.empty()) os << "\n      " << r.witness;
  return os.str();
}

// ---- shared helpers ----

const std::vector<Permutation>& cached_family(Family f, int n) {
  static std::mutex mu;
  static std::map<std::pair<Family, int>, std::vector<Permutation>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(f, n);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, generate(f, n, GenMode::Filter)).first;
  return it->second;
}

MultiPoly family_poly(
    Family f, int n,
    const std::function<MultiPoly(const StatVector&)>& mono) {
  MultiPoly acc;
  for (const Permutation& s : cached_family(f, n)) acc += mono(compute_stats(s));
  return acc;
}

MultiPoly x_monomial(const StatVector& st) {
  Monomial m = Monomial::var(Var::a, st.lema) *
               Monomial::var(Var::abar, st.loma) *
               Monomial::var(Var::b, st.romi) *
               Monomial::var(Var::bbar, st.remi) *
               Monomial::var(Var::p, st.ress) * Monomial::var(Var::q, st.les) *
               Monomial::var(Var::y, st.dom) * Monomial::var(Var::t, st.des);
  return MultiPoly::term(m, 1);
}

MultiPoly y_monomial(const StatVector& st) {
  Monomial m = Monomial::var(Var::a, st.lema) *
               Monomial::var(Var::p, st.res) * Monomial::var(Var::q, st.les) *
               Monomial::var(Var::y, st.dd) * Monomial::var(Var::t, st.des);
  return MultiPoly::term(m, 1);
}

const MultiPoly& x_full_poly(int n) {
  static std::mutex mu;
  static std::map<int, MultiPoly> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end())
    it = cache.emplace(n, family_poly(Family::X, n, x_monomial)).first;
  return it->second;
}

const MultiPoly& y_full_poly(int n) {
  static std::mutex mu;
  static std::map<int, MultiPoly> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end())
    it = cache.emplace(n, family_poly(Family::Ystar, n, y_monomial)).first;
  return it->second;
}

PowerSeries series_from(const std::function<MultiPoly(int)>& coeff, int N) {
  PowerSeries s = PowerSeries::one(N);
  for (int n = 1; n <= N; ++n)
    s = s + PowerSeries::monomial(N, coeff(n), n);
  return s;
}

void expect_series_equal(Ctx& c, const PowerSeries& got,
                         const PowerSeries& want, const std::string& label) {
  int N = std::min(got.order(), want.order());
  for (int k = 0; k <= N; ++k) {
    if (!(got.coeff(k) == want.coeff(k))) {
      c.fail(label + ": x^" + std::to_string(k) + " differs: got " +
             got.coeff(k).to_string() + ", want " + want.coeff(k).to_string());
      return;
    }
  }
}

const std::vector<long>& figure1_G() {
  static const std::vector<long> v = {1, 1, 3, 17, 155, 2073};  // G_2..G_12
  return v;
}
const std::vector<long>& figure1_H() {
  static const std::vector<long> v = {1,   2,    8,     56,
                                      608, 9440, 198272};  // H_1..H_13
  return v;
}
const std::vector<long>& figure1_h() {
  static const std::vector<long> v = {1, 1, 2, 7, 38, 295, 3098};
  return v;
}

}  // namespace genocchi::verify
