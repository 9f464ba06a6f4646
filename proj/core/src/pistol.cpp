#include "genocchi/pistol.hpp"

#include <algorithm>
#include <sstream>

#include "genocchi/families.hpp"

namespace genocchi {

std::string Pistol::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) os << " ";
    os << f[i];
  }
  return os.str();
}

bool Pistol::is_valid() const {
  const int m = static_cast<int>(f.size());
  if (m == 0 || m % 2 != 0) return false;
  std::vector<bool> hit(m + 1, false);
  for (int i = 1; i <= m; ++i) {
    int v = f[i - 1];
    if (v < i || v > m || v % 2 != 0) return false;
    hit[v] = true;
  }
  for (int v = 2; v <= m; v += 2)
    if (!hit[v]) return false;
  return true;
}

PistolStats pistol_stats(const Pistol& f) {
  PistolStats st;
  const int m = 2 * f.n();
  std::vector<int> multiplicity(m + 1, 0);
  for (int i = 1; i <= m; ++i) ++multiplicity[f(i)];
  for (int k = 1; k <= m; ++k) {
    int v = f(k);
    bool doubled = multiplicity[v] > 1;
    if (v == m && k <= m - 2) {
      if (k % 2 == 0)
        ++st.me;
      else
        ++st.mo;
    }
    if (v == k && k < m) {
      if (doubled)
        ++st.fd;
      else
        ++st.fi;
    }
    if (v == k + 1 && v < m) {
      if (doubled)
        ++st.sd;
      else
        ++st.si;
    }
  }
  return st;
}

namespace {

void dfs_pistols(int n, int i, std::vector<int>& f, std::vector<int>& mult,
                 int uncovered, std::vector<Pistol>& out) {
  const int m = 2 * n;
  if (i > m) {
    if (uncovered == 0) out.push_back(Pistol{f});
    return;
  }
  // Values below i can no longer be covered; positions left must suffice.
  for (int v = 2; v < i; v += 2)
    if (mult[v] == 0) return;
  if (uncovered > m - i + 1) return;

  int lo = i + (i % 2);  // smallest even value >= i
  for (int v = lo; v <= m; v += 2) {
    f.push_back(v);
    bool fresh = mult[v] == 0;
    ++mult[v];
    dfs_pistols(n, i + 1, f, mult, uncovered - (fresh ? 1 : 0), out);
    --mult[v];
    f.pop_back();
  }
}

std::uint64_t pistol_work_bound(int n) {
  // Choice counts multiply to (n!)^2.
  std::uint64_t w = 1;
  for (int i = 1; i <= n; ++i) {
    w *= static_cast<std::uint64_t>(i) * i;
    if (w > (1ull << 62)) return w;
  }
  return w;
}

}  // namespace

std::vector<Pistol> enumerate_pistols(int n, std::uint64_t budget) {
  if (n < 1) throw std::domain_error("pistols need n >= 1");
  if (pistol_work_bound(n) > budget)
    throw BudgetError("pistol enumeration for 2n = " + std::to_string(2 * n) +
                      " exceeds budget " + std::to_string(budget) +
                      " (work bound (n!)^2)");
  std::vector<Pistol> out;
  std::vector<int> f;
  f.reserve(2 * n);
  std::vector<int> mult(2 * n + 1, 0);
  dfs_pistols(n, 1, f, mult, n, out);
  return out;
}

MultiPoly gamma_pistol(int n, std::uint64_t budget) {
  MultiPoly acc;
  for (const Pistol& f : enumerate_pistols(n, budget)) {
    PistolStats st = pistol_stats(f);
    Monomial m = Monomial::var(Var::alpha, st.mo) *
                 Monomial::var(Var::beta, st.fd) *
                 Monomial::var(Var::gamma, st.si) *
                 Monomial::var(Var::alphabar, st.me) *
                 Monomial::var(Var::betabar, st.fi) *
                 Monomial::var(Var::gammabar, st.sd);
    acc += MultiPoly::term(m, 1);
  }
  return acc;
}

}  // namespace genocchi
