#include "genocchi/catalog.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include "genocchi/brackets.hpp"

namespace genocchi {

PowerSeries CatalogEntry::expand(int N) const {
  if (is_jfraction()) return jfrac_expand(jfraction(), N);
  return sfrac_expand(sfraction(), N);
}

namespace {

MultiPoly V(Var v) { return MultiPoly::variable(v); }
MultiPoly C(long v) { return MultiPoly(v); }

/// Two-argument bracket in (q,p) order: [x,n]_{q,p}.
MultiPoly bracket_qp(const MultiPoly& x, int n) {
  return pq_bracket(x, n, Var::q, Var::p);
}

std::map<std::string, CatalogEntry> build_catalog() {
  std::map<std::string, CatalogEntry> cat;
  auto add = [&cat](std::string name, std::string desc,
                    std::variant<JFractionSpec, SFractionSpec> spec) {
    cat[name] = CatalogEntry{name, std::move(desc), std::move(spec)};
  };

  add("master", "octuple-variable J-fraction for the X_n polynomials",
      JFractionSpec{
          [](int k) {
            int n = k + 1;
            return pq_bracket(V(Var::abar), n, V(Var::b)) *
                       pq_bracket(V(Var::a), n, V(Var::bbar)) +
                   V(Var::t) * V(Var::y) * pq_bracket(V(Var::a), n) *
                       bracket_qp(V(Var::b), n);
          },
          [](int n) {
            return V(Var::t) * pq_bracket(V(Var::a), n) *
                   pq_bracket(V(Var::a), n + 1, V(Var::bbar)) *
                   bracket_qp(V(Var::b), n) *
                   pq_bracket(V(Var::abar), n + 1, V(Var::b));
          }});

  add("cor2.2", "compact form at b = bbar = 1",
      JFractionSpec{
          [](int k) {
            int n = k + 1;
            return (pq_bracket(V(Var::abar), n) +
                    V(Var::t) * V(Var::y) * pq_int(n)) *
                   pq_bracket(V(Var::a), n);
          },
          [](int n) {
            return V(Var::t) * pq_bracket(V(Var::a), n) *
                   pq_bracket(V(Var::a), n + 1) * pq_int(n) *
                   pq_bracket(V(Var::abar), n + 1);
          }});

  add("cor2.3", "S-fraction at y = 1 (head weight a*abar)",
      SFractionSpec{[](int j) {
        int k = (j + 1) / 2;
        if (j % 2 == 1)
          return pq_bracket(V(Var::abar), k) * pq_bracket(V(Var::a), k);
        return pq_bracket(V(Var::a), k) * pq_int(k) * V(Var::t);
      }});

  add("cor2.4", "cycle/descent scheme P_n(t,z)",
      JFractionSpec{
          [](int k) {
            return (V(Var::z) + C(k)) *
                   (V(Var::z) + C(k) + C(k + 1) * V(Var::t));
          },
          [](int k) {
            return C(k) * (V(Var::z) + C(k - 1)) *
                   (V(Var::z) + C(k)).pow(2) * V(Var::t);
          }});

  add("cor2.5", "E-permutation scheme (y = 0)",
      JFractionSpec{
          [](int k) {
            int n = k + 1;
            return pq_bracket(V(Var::a), n) * pq_bracket(V(Var::abar), n);
          },
          [](int n) {
            return V(Var::t) * pq_bracket(V(Var::a), n) *
                   pq_bracket(V(Var::a), n + 1) * pq_int(n) *
                   pq_bracket(V(Var::abar), n + 1);
          }});

  add("thm2.7", "quasi-gamma scheme at abar = bbar = 1",
      JFractionSpec{
          [](int k) {
            int n = k + 1;
            return (C(1) + V(Var::t) * V(Var::y)) * pq_bracket(V(Var::a), n) *
                   bracket_qp(V(Var::b), n);
          },
          [](int n) {
            return V(Var::t) * pq_bracket(V(Var::a), n) *
                   pq_bracket(V(Var::a), n + 1) * bracket_qp(V(Var::b), n) *
                   bracket_qp(V(Var::b), n + 1);
          }});

  add("xhat", "normalized-permutation scheme ([n]^2, binom(n+1,2)^2 t)",
      JFractionSpec{[](int k) { return pq_int(k + 1).pow(2); },
                    [](int n) {
                      return pq_binomial(n + 1, 2).pow(2) * V(Var::t);
                    }});

  add("genocchi", "S-fraction of the Genocchi numbers",
      SFractionSpec{[](int j) {
        long k = (j + 1) / 2;
        return j % 2 == 1 ? C(k * k) : C(k * (k + 1));
      }});

  add("mediangenocchi-s", "S-fraction of the median Genocchi numbers",
      SFractionSpec{[](int j) {
        long k = (j + 1) / 2;
        return C(k * k);
      }});

  add("mediangenocchi", "J-fraction of the median Genocchi numbers",
      JFractionSpec{
          [](int k) { return C(2L * (k + 1) * (k + 1)); },
          [](int k) { return C(static_cast<long>(k) * k * (k + 1) * (k + 1)); }});

  add("normalized", "J-fraction of the normalized median Genocchi numbers",
      JFractionSpec{[](int k) { return C(static_cast<long>(k + 1) * (k + 1)); },
                    [](int k) {
                      long c = static_cast<long>(k) * (k + 1) / 2;
                      return C(c * c);
                    }});

  // Randrianarivony-Zeng pistol scheme. The printed head has (betabar + z)
  // where the algebra forces (betabar + gamma); the corrected factor is used
  // and is pinned against brute-force pistol enumeration.
  add("pistol_rz", "six-variable pistol scheme",
      JFractionSpec{
          [](int k) {
            return (V(Var::alpha) + C(k)) * (V(Var::betabar) + C(k)) +
                   (V(Var::beta) + C(k)) * (V(Var::gammabar) + C(k)) +
                   (V(Var::gamma) + C(k)) * (V(Var::alphabar) + C(k)) -
                   C(static_cast<long>(k) * (k + 1));
          },
          [](int k) {
            return C(k) * (V(Var::alphabar) + V(Var::beta) + C(k - 1)) *
                   (V(Var::betabar) + V(Var::gamma) + C(k - 1)) *
                   (V(Var::gammabar) + V(Var::alpha) + C(k - 1));
          }});

  add("dperm_cyc", "fixed-point/cycle scheme over D-permutations",
      JFractionSpec{
          [](int k) {
            return (V(Var::x1) * V(Var::z) + C(k)) *
                       (V(Var::x0) * V(Var::z) + C(k)) +
                   (V(Var::z) + C(k)) * C(k + 1);
          },
          [](int k) {
            return C(k) * (V(Var::z) + C(k - 1)) *
                   (V(Var::x0) * V(Var::z) + C(k)) *
                   (V(Var::x1) * V(Var::z) + C(k));
          }});

  add("derangement", "S-fraction for derangements in D with cycle weight z",
      SFractionSpec{[](int j) {
        long k = (j + 1) / 2;
        if (j % 2 == 1) return C(k) * (V(Var::z) + C(k - 1));
        return C(k * k);
      }});

  add("oddodd", "odd-odd descent scheme for the Y_n polynomials",
      JFractionSpec{
          [](int k) {
            int n = k + 1;
            return (C(1) + V(Var::t) * V(Var::y)) * pq_bracket(V(Var::a), n) *
                   pq_int(n);
          },
          [](int n) {
            return V(Var::t) * pq_bracket(V(Var::a), n) *
                   pq_bracket(V(Var::a), n + 1) * pq_int(n) * pq_int(n + 1);
          }});

  return cat;
}

const std::map<std::string, CatalogEntry>& the_catalog() {
  static const std::map<std::string, CatalogEntry> cat = build_catalog();
  return cat;
}

}  // namespace

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (const auto& [name, entry] : the_catalog()) names.push_back(name);
  return names;
}

CatalogEntry catalog(const std::string& name) {
  const auto& cat = the_catalog();
  auto it = cat.find(name);
  if (it == cat.end()) {
    std::ostringstream os;
    os << "unknown catalog name '" << name << "'; valid names:";
    for (const auto& [n, e] : cat) os << " " << n;
    throw std::domain_error(os.str());
  }
  return it->second;
}

}  // namespace genocchi
