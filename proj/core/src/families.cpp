#include "genocchi/families.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>

#include "genocchi/pathdiag.hpp"
#include "genocchi/signature.hpp"
#include "genocchi/stats.hpp"

namespace genocchi {

std::string family_name(Family f) {
  switch (f) {
    case Family::D: return "D";
    case Family::DC: return "DC";
    case Family::E: return "E";
    case Family::EC: return "EC";
    case Family::Dstar: return "Dstar";
    case Family::X: return "X";
    case Family::Xbar: return "Xbar";
    case Family::Xhat: return "Xhat";
    case Family::Y: return "Y";
    case Family::Ystar: return "Ystar";
    case Family::Ybar: return "Ybar";
    case Family::Yhat: return "Yhat";
    case Family::Dumont: return "Dumont";
    case Family::DumontDerangement: return "DumontDerangement";
    case Family::Pistol: return "Pistol";
  }
  return "?";
}

std::optional<Family> family_from_name(const std::string& name) {
  for (Family f : all_families()) {
    if (family_name(f) == name) return f;
  }
  return std::nullopt;
}

std::vector<Family> all_families() {
  return {Family::D,     Family::DC,    Family::E,     Family::EC,
          Family::Dstar, Family::X,     Family::Xbar,  Family::Xhat,
          Family::Y,     Family::Ystar, Family::Ybar,  Family::Yhat,
          Family::Dumont, Family::DumontDerangement, Family::Pistol};
}

static bool odd_carrier(Family f) {
  return f == Family::Y || f == Family::Ystar || f == Family::Ybar ||
         f == Family::Yhat;
}

int carrier_length(Family f, int n) {
  return odd_carrier(f) ? 2 * n + 1 : 2 * n;
}

static void check_parity(Family f, const Permutation& sigma) {
  bool want_odd = odd_carrier(f);
  if ((sigma.size() % 2 == 0) == want_odd)
    throw std::domain_error("family " + family_name(f) + " requires " +
                            (want_odd ? "odd" : "even") +
                            "-length carrier, got length " +
                            std::to_string(sigma.size()));
}

static bool is_D(const Permutation& s) {
  for (int i = 1; i <= s.size(); ++i) {
    if (i % 2 == 1 && s(i) < i) return false;
    if (i % 2 == 0 && s(i) > i) return false;
  }
  return true;
}

static bool is_E(const Permutation& s) {
  for (int i = 1; i <= s.size(); ++i) {
    if (s(i) < i && !(i % 2 == 0 && s(i) % 2 == 1)) return false;
  }
  return true;
}

static bool is_X(const Permutation& s) {
  for (int k = 1; k < s.size(); ++k) {
    if (s(k) > s(k + 1) && !(s(k) % 2 == 0 && s(k + 1) % 2 == 1)) return false;
  }
  return true;
}

static bool is_Y(const Permutation& s) {
  for (int k = 1; k < s.size(); ++k) {
    if (s(k) > s(k + 1) && !(s(k) % 2 == 1 && s(k + 1) % 2 == 1)) return false;
  }
  return true;
}

static bool is_Dumont(const Permutation& s, bool strict) {
  for (int i = 1; i <= s.size(); ++i) {
    if (i % 2 == 1) {
      if (strict ? s(i) <= i : s(i) < i) return false;
    } else {
      if (s(i) >= i) return false;
    }
  }
  return true;
}

static bool has_fixed_point(const Permutation& s) {
  for (int i = 1; i <= s.size(); ++i)
    if (s(i) == i) return true;
  return false;
}

/// Normalization clauses of the X-hat definition, on top of Xbar membership.
static bool is_Xhat_normalized(const Permutation& s) {
  auto [ws, sf] = signature_of(s);
  StatVector st = compute_stats(s);
  for (int j = 1; j <= ws.n; ++j) {
    int o = 2 * j - 1, e = 2 * j;
    if (ws.S.count(o)) {
      if (sf(o) % 2 == 1) {
        if (st.l_desc[e] % 2 != 0) return false;
      } else {
        if (st.l_desc[o] % 2 != 0) return false;
      }
    }
    if (ws.S.count(e)) {
      if (sf(e) % 2 == 1) {
        if (st.r_desc[o] % 2 != 0) return false;
      } else {
        if (st.r_desc[e] % 2 != 0) return false;
      }
    }
  }
  return true;
}

namespace detail {

// Valley/peak balance sequence a(j) = f(j) - g(j) + 1 where f(j)/g(j) count
// valleys/peaks of value below j.
std::vector<int> vop_balance(const Permutation& s, const StatVector& st) {
  const int m = s.size();
  std::vector<int> a(m + 1, 0);
  int valleys_below = 0, peaks_below = 0;
  for (int j = 1; j <= m; ++j) {
    a[j] = valleys_below - peaks_below + 1;
    PosClass c = st.cls[s.position_of(j)];
    if (c == PosClass::Valley) ++valleys_below;
    if (c == PosClass::Peak) ++peaks_below;
  }
  return a;
}

std::vector<int> vop_pairs(const Permutation& s, const StatVector& st) {
  std::vector<int> pairs;
  for (int i = 1; 2 * i <= s.size(); ++i) {
    PosClass c = st.cls[s.position_of(2 * i - 1)];
    if (c == PosClass::Valley || c == PosClass::Peak) pairs.push_back(i);
  }
  return pairs;
}

int vop_embracing(const Permutation& s, const StatVector& st,
                  const std::vector<int>& a, int i) {
  // Exactly one of a(2i-1), a(2i) is even for a VOP pair; the embracing
  // number is the left-embracing (les) count of that member. Pinned by the
  // orbit identity on Ybar*_{5,1} and |Yhat_{2n+1}| = h_n.
  bool odd_even = a[2 * i - 1] % 2 == 0;
  bool even_even = a[2 * i] % 2 == 0;
  if (odd_even == even_even)
    throw std::logic_error("VOP balance parity fact violated for " +
                           s.to_string() + " at pair " + std::to_string(i));
  return odd_even ? st.l_desc[2 * i - 1] : st.l_desc[2 * i];
}

}  // namespace detail

static bool is_Yhat_normalized(const Permutation& s) {
  StatVector st = compute_stats(s);
  auto a = detail::vop_balance(s, st);
  for (int i : detail::vop_pairs(s, st)) {
    if (detail::vop_embracing(s, st, a, i) % 2 != 0) return false;
  }
  return true;
}

bool is_member(Family f, const Permutation& sigma) {
  if (f == Family::Pistol)
    throw std::domain_error("Pistol members are maps, not permutations");
  check_parity(f, sigma);
  switch (f) {
    case Family::D: return is_D(sigma);
    case Family::DC: return is_D(sigma) && stat_cyc(sigma) == 1;
    case Family::E: return is_E(sigma);
    case Family::EC: return is_E(sigma) && stat_cyc(sigma) == 1;
    case Family::Dstar: return is_D(sigma) && !has_fixed_point(sigma);
    case Family::X: return is_X(sigma);
    case Family::Xbar: return is_X(sigma) && compute_stats(sigma).dom == 0;
    case Family::Xhat:
      return is_X(sigma) && compute_stats(sigma).dom == 0 &&
             is_Xhat_normalized(sigma);
    case Family::Y: return is_Y(sigma);
    case Family::Ystar: return is_Y(sigma) && sigma(sigma.size()) % 2 == 1;
    case Family::Ybar:
      return is_Y(sigma) && sigma(sigma.size()) % 2 == 1 &&
             compute_stats(sigma).dd == 0;
    case Family::Yhat:
      return is_Y(sigma) && sigma(sigma.size()) % 2 == 1 &&
             compute_stats(sigma).dd == 0 && is_Yhat_normalized(sigma);
    case Family::Dumont: return is_Dumont(sigma, /*strict=*/false);
    case Family::DumontDerangement: return is_Dumont(sigma, /*strict=*/true);
    case Family::Pistol: break;
  }
  return false;
}

static std::uint64_t factorial_checked(int m, std::uint64_t budget) {
  std::uint64_t f = 1;
  for (int i = 2; i <= m; ++i) {
    if (f > budget / i + 1) return budget + 1;
    f *= i;
  }
  return f;
}

static std::vector<Permutation> filter_generate(
    int m, const std::function<bool(const Permutation&)>& pred,
    std::uint64_t budget, int threads) {
  if (factorial_checked(m, budget) > budget)
    throw BudgetError("filter enumeration of S_" + std::to_string(m) +
                      " exceeds budget " + std::to_string(budget) +
                      " (need " + std::to_string(m) + "!)");

  auto scan_with_prefix = [&pred, m](int first) {
    std::vector<Permutation> out;
    std::vector<int> rest;
    for (int v = 1; v <= m; ++v)
      if (v != first) rest.push_back(v);
    do {
      std::vector<int> w;
      w.reserve(m);
      w.push_back(first);
      w.insert(w.end(), rest.begin(), rest.end());
      Permutation s(std::move(w));
      if (pred(s)) out.push_back(std::move(s));
    } while (std::next_permutation(rest.begin(), rest.end()));
    return out;
  };

  std::vector<Permutation> out;
  if (threads <= 1 || m < 2) {
    std::vector<int> w(m);
    for (int i = 0; i < m; ++i) w[i] = i + 1;
    do {
      Permutation s(w);
      if (pred(s)) out.push_back(std::move(s));
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
  }

  std::vector<std::future<std::vector<Permutation>>> parts;
  parts.reserve(m);
  for (int first = 1; first <= m; ++first)
    parts.push_back(std::async(std::launch::async, scan_with_prefix, first));
  for (auto& part : parts) {
    auto chunk = part.get();
    out.insert(out.end(), std::make_move_iterator(chunk.begin()),
               std::make_move_iterator(chunk.end()));
  }
  return out;  // prefix order is already lexicographic
}

std::vector<Permutation> generate(Family f, int n, GenMode mode,
                                  std::uint64_t budget, int threads) {
  if (f == Family::Pistol)
    throw std::domain_error("use enumerate_pistols for the Pistol family");
  if (n == 0) {
    // Empty carriers for even families; odd families start at length 1.
    if (!odd_carrier(f)) return {};
  }
  const int m = carrier_length(f, n);

  bool accelerated = (mode == GenMode::Accelerated) ||
                     (mode == GenMode::Auto && f == Family::X);
  if (accelerated) {
    if (f != Family::X)
      throw std::domain_error("accelerated generation only covers X");
    std::vector<Permutation> out;
    for (const PathDiagram& d : enumerate_diagrams(n, budget))
      out.push_back(phi_inverse(d));
    std::sort(out.begin(), out.end());
    return out;
  }
  return filter_generate(
      m, [f](const Permutation& s) { return is_member(f, s); }, budget,
      threads);
}

}  // namespace genocchi
