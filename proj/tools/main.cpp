// Command-line front end: enumeration, continued fractions, gamma
// decompositions, bijections, orbits and the verification harness.

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "genocchi/actions.hpp"
#include "genocchi/catalog.hpp"
#include "genocchi/families.hpp"
#include "genocchi/gamma.hpp"
#include "genocchi/pathdiag.hpp"
#include "genocchi/pistol.hpp"
#include "genocchi/stats.hpp"
#include "genocchi/verify.hpp"

using namespace genocchi;

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

std::set<Var> parse_vars(const std::string& csv) {
  std::set<Var> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    auto v = var_from_name(tok);
    if (!v) throw std::domain_error("unknown variable '" + tok + "'");
    out.insert(*v);
  }
  return out;
}

Family parse_family(const std::string& name) {
  auto f = family_from_name(name);
  if (!f) {
    std::ostringstream os;
    os << "unknown family '" << name << "'; valid:";
    for (Family g : all_families()) os << " " << family_name(g);
    throw std::domain_error(os.str());
  }
  return *f;
}

MultiPoly stat_monomial(const StatVector& st) {
  Monomial m = Monomial::var(Var::a, st.lema) *
               Monomial::var(Var::abar, st.loma) *
               Monomial::var(Var::b, st.romi) *
               Monomial::var(Var::bbar, st.remi) *
               Monomial::var(Var::p, st.ress) * Monomial::var(Var::q, st.les) *
               Monomial::var(Var::y, st.dom) * Monomial::var(Var::t, st.des);
  return MultiPoly::term(m, 1);
}

MultiPoly stat_monomial_odd(const StatVector& st) {
  Monomial m = Monomial::var(Var::a, st.lema) *
               Monomial::var(Var::p, st.res) * Monomial::var(Var::q, st.les) *
               Monomial::var(Var::y, st.dd) * Monomial::var(Var::t, st.des);
  return MultiPoly::term(m, 1);
}

bool is_odd_family(Family f) {
  return f == Family::Y || f == Family::Ystar || f == Family::Ybar ||
         f == Family::Yhat;
}

MultiPoly family_polynomial(Family f, int n, std::uint64_t budget) {
  MultiPoly acc;
  for (const Permutation& s : generate(f, n, GenMode::Auto, budget)) {
    StatVector st = compute_stats(s);
    acc += is_odd_family(f) ? stat_monomial_odd(st) : stat_monomial(st);
  }
  return acc;
}

nlohmann::ordered_json poly_to_json(const MultiPoly& poly) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (auto it = poly.terms().rbegin(); it != poly.terms().rend(); ++it) {
    nlohmann::ordered_json mono;
    for (const auto& [v, e] : it->first.factors())
      mono[std::string(var_name(v))] = e;
    terms.push_back({{"m", mono}, {"c", it->second.str()}});
  }
  return terms;
}

int stat_of(const StatVector& st, const std::string& name) {
  if (name == "des") return st.des;
  if (name == "drop") return st.drop;
  if (name == "cyc") return st.cyc;
  if (name == "lma") return st.lma;
  if (name == "rmi") return st.rmi;
  if (name == "lema") return st.lema;
  if (name == "loma") return st.loma;
  if (name == "remi") return st.remi;
  if (name == "romi") return st.romi;
  if (name == "les") return st.les;
  if (name == "ress") return st.ress;
  if (name == "res") return st.res;
  if (name == "dom") return st.dom;
  if (name == "dd") return st.dd;
  if (name == "fix_e") return st.fix_e;
  if (name == "fix_o") return st.fix_o;
  throw std::domain_error("unknown statistic '" + name + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact combinatorics engine for Genocchi-type permutation "
               "families and their continued fractions"};
  app.require_subcommand(1);

  std::uint64_t budget = kDefaultBudget;
  app.add_option("--budget", budget,
                 "enumeration budget (factorial carrier bound)");

  // verify
  auto* sc_verify = app.add_subcommand("verify", "replay paper checks");
  std::string check_id = "all";
  int opt_max_n = -1, opt_order = -1;
  std::string json_path;
  bool parallel = false;
  sc_verify->add_option("check", check_id, "check id or 'all'");
  sc_verify->add_option("--max-n", opt_max_n, "cap the per-check n");
  sc_verify->add_option("--order", opt_order, "cap the series order");
  sc_verify->add_option("--json", json_path, "also write a JSON report");
  sc_verify->add_flag("--parallel", parallel, "run checks concurrently");

  // poly
  auto* sc_poly = app.add_subcommand("poly", "enumerated family polynomial");
  std::string poly_family, poly_vars;
  int poly_n = 1;
  bool poly_json = false;
  sc_poly->add_option("family", poly_family)->required();
  sc_poly->add_option("n", poly_n)->required();
  sc_poly->add_option("--vars", poly_vars,
                      "comma-separated variables to keep (others set to 1)");
  sc_poly->add_flag("--json", poly_json);

  // enumerate
  auto* sc_enum = app.add_subcommand("enumerate", "list family members");
  std::string enum_family, enum_stat, enum_mode = "auto";
  int enum_n = 1;
  sc_enum->add_option("family", enum_family)->required();
  sc_enum->add_option("n", enum_n)->required();
  sc_enum->add_option("--mode", enum_mode, "auto|filter|accel");
  sc_enum->add_option("--stat", enum_stat,
                      "emit a JSON histogram of this statistic instead");

  // cf
  auto* sc_cf = app.add_subcommand("cf", "expand a catalog continued fraction");
  std::string cf_name;
  int cf_order = 6;
  bool cf_json = false;
  sc_cf->add_option("name", cf_name)->required();
  sc_cf->add_option("--order", cf_order);
  sc_cf->add_flag("--json", cf_json);

  // gamma
  auto* sc_gamma = app.add_subcommand("gamma", "gamma-decompose a family polynomial");
  std::string gamma_family, gamma_vars;
  int gamma_n = 1;
  sc_gamma->add_option("family", gamma_family)->required();
  sc_gamma->add_option("n", gamma_n)->required();
  sc_gamma->add_option("--vars", gamma_vars,
                       "extra variables to keep besides y and t");

  // orbit
  auto* sc_orbit = app.add_subcommand("orbit", "orbit of a permutation");
  std::string orbit_action, orbit_word;
  sc_orbit->add_option("action", orbit_action, "sec5|sec6|sec7")->required();
  sc_orbit->add_option("word", orbit_word, "one-line permutation")->required();

  // bijection
  auto* sc_bij = app.add_subcommand("bijection", "apply phi / phi-inv / psi");
  std::string bij_map, bij_input, bij_labels;
  sc_bij->add_option("map", bij_map, "phi|phi-inv|psi")->required();
  sc_bij->add_option("input", bij_input, "permutation word or step word")
      ->required();
  sc_bij->add_option("--labels", bij_labels,
                     "label pairs for phi-inv, e.g. \"0,1 0,1 0,2\"");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*sc_verify) {
      verify::CheckParams params;
      params.max_n = opt_max_n;
      params.order = opt_order;
      params.budget = budget;
      std::vector<verify::VerificationReport> reports;
      if (check_id == "all") {
        reports = verify::run_all(params, parallel);
      } else {
        if (!verify::is_check_id(check_id)) {
          std::cerr << "unknown check '" << check_id << "'; valid ids:\n";
          for (const auto& id : verify::all_check_ids())
            std::cerr << "  " << id << "\n";
          return kExitUsage;
        }
        reports.push_back(verify::run_check(check_id, params));
      }
      bool all_pass = true;
      for (const auto& r : reports) {
        std::cout << verify::render_line(r) << "\n";
        all_pass = all_pass && r.status != verify::Status::Fail;
      }
      if (!json_path.empty()) {
        std::ofstream out(json_path);
        out << verify::to_json(reports) << "\n";
      }
      return all_pass ? 0 : kExitCheckFailed;
    }

    if (*sc_poly) {
      Family f = parse_family(poly_family);
      MultiPoly poly = family_polynomial(f, poly_n, budget);
      if (!poly_vars.empty()) poly = poly.keep_only(parse_vars(poly_vars));
      if (poly_json)
        std::cout << poly_to_json(poly).dump(2) << "\n";
      else
        std::cout << poly.to_string() << "\n";
      return 0;
    }

    if (*sc_enum) {
      Family f = parse_family(enum_family);
      if (f == Family::Pistol) {
        for (const Pistol& p : enumerate_pistols(enum_n, budget))
          std::cout << p.to_string() << "\n";
        return 0;
      }
      GenMode mode = enum_mode == "filter" ? GenMode::Filter
                     : enum_mode == "accel" ? GenMode::Accelerated
                                            : GenMode::Auto;
      auto members = generate(f, enum_n, mode, budget);
      if (!enum_stat.empty()) {
        std::map<int, long> histogram;
        for (const Permutation& s : members)
          ++histogram[stat_of(compute_stats(s), enum_stat)];
        nlohmann::ordered_json obj;
        obj["family"] = family_name(f);
        obj["n"] = enum_n;
        obj["stat"] = enum_stat;
        nlohmann::ordered_json hist;
        for (const auto& [k, v] : histogram) hist[std::to_string(k)] = v;
        obj["histogram"] = hist;
        std::cout << obj.dump(2) << "\n";
      } else {
        for (const Permutation& s : members) std::cout << s.to_string() << "\n";
      }
      return 0;
    }

    if (*sc_cf) {
      PowerSeries s = catalog(cf_name).expand(cf_order);
      if (cf_json) {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (int k = 0; k <= s.order(); ++k)
          arr.push_back(s.coeff(k).to_string());
        std::cout << arr.dump(2) << "\n";
      } else {
        std::cout << s.to_string() << "\n";
      }
      return 0;
    }

    if (*sc_gamma) {
      Family f = parse_family(gamma_family);
      std::set<Var> keep = {Var::y, Var::t};
      if (!gamma_vars.empty())
        for (Var v : parse_vars(gamma_vars)) keep.insert(v);
      MultiPoly poly = family_polynomial(f, gamma_n, budget).keep_only(keep);
      GammaExpansion ge = gamma_extract(poly, gamma_n);
      for (std::size_t k = 0; k < ge.gammas.size(); ++k)
        std::cout << "gamma_" << k << ": " << ge.gammas[k].to_string() << "\n";
      return 0;
    }

    if (*sc_orbit) {
      Permutation base = Permutation::parse_one_line(orbit_word);
      Orbit orb;
      MultiPoly total;
      if (orbit_action == "sec5") {
        orb = interhop_orbit(base);
        for (const Permutation& m : orb.members) {
          StatVector st = compute_stats(m);
          total += MultiPoly::term(Monomial::var(Var::p, st.les) *
                                       Monomial::var(Var::q, st.ress) *
                                       Monomial::var(Var::t, st.des) *
                                       Monomial::var(Var::y, st.dom),
                                   1);
        }
      } else if (orbit_action == "sec6") {
        orb = normalizer_orbit(base);
        for (const Permutation& m : orb.members) {
          StatVector st = compute_stats(m);
          total += MultiPoly::term(Monomial::var(Var::p, st.ress) *
                                       Monomial::var(Var::q, st.les),
                                   1);
        }
      } else if (orbit_action == "sec7") {
        orb = fbar_orbit(base);
        for (const Permutation& m : orb.members) {
          StatVector st = compute_stats(m);
          total += MultiPoly::term(Monomial::var(Var::p, st.res) *
                                       Monomial::var(Var::q, st.les),
                                   1);
        }
      } else {
        throw std::domain_error("unknown action '" + orbit_action +
                                "' (use sec5, sec6 or sec7)");
      }
      for (const Permutation& m : orb.members)
        std::cout << m.to_string() << "\n";
      std::cout << "orbit sum: " << total.to_string() << "\n";
      return 0;
    }

    if (*sc_bij) {
      if (bij_map == "phi" || bij_map == "psi") {
        Permutation s = Permutation::parse_one_line(bij_input);
        PathDiagram d = bij_map == "phi" ? phi(s) : psi(s);
        std::cout << d.to_string() << "\n";
        return 0;
      }
      if (bij_map == "phi-inv") {
        PathDiagram d;
        d.path = MotzkinPath::parse(bij_input);
        std::stringstream ss(bij_labels);
        std::string pair;
        while (ss >> pair) {
          auto comma = pair.find(',');
          if (comma == std::string::npos)
            throw std::domain_error("labels must look like \"0,1 0,2\"");
          d.xi.push_back(std::stoi(pair.substr(0, comma)));
          d.xi_prime.push_back(std::stoi(pair.substr(comma + 1)));
        }
        if (!d.is_legal())
          throw std::domain_error("illegal path diagram");
        std::cout << phi_inverse(d).to_string() << "\n";
        return 0;
      }
      throw std::domain_error("unknown map '" + bij_map +
                              "' (use phi, phi-inv or psi)");
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
