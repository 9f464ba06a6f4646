#include "genocchi/stats.hpp"

#include <stdexcept>

namespace genocchi {

StatVector compute_stats(const Permutation& sigma) {
  const int m = sigma.size();
  StatVector s;
  s.l_desc.assign(m + 1, 0);
  s.r_desc.assign(m + 1, 0);
  s.r_asc.assign(m + 1, 0);
  s.cls.assign(m + 1, PosClass::DoubleAscent);

  // Adjacent pairs: descents (k, k+1) with sigma_k > sigma_{k+1}.
  std::vector<int> desc_pos;  // start position of each descent
  std::vector<int> asc_pos;
  for (int k = 1; k < m; ++k) {
    if (sigma(k) > sigma(k + 1))
      desc_pos.push_back(k);
    else
      asc_pos.push_back(k);
  }
  s.des = static_cast<int>(desc_pos.size());

  for (int i = 1; i <= m; ++i) {
    if (sigma(i) < i) ++s.drop;
    if (sigma(i) == i) {
      if (i % 2 == 0)
        ++s.fix_e;
      else
        ++s.fix_o;
    }
  }
  s.cyc = static_cast<int>(sigma.cycles().size());

  int running_max = 0;
  for (int i = 1; i <= m; ++i) {
    if (sigma(i) > running_max) {
      running_max = sigma(i);
      ++s.lma;
      if (sigma(i) % 2 == 0)
        ++s.lema;
      else
        ++s.loma;
    }
  }
  int running_min = m + 1;
  for (int i = m; i >= 1; --i) {
    if (sigma(i) < running_min) {
      running_min = sigma(i);
      ++s.rmi;
      if (sigma(i) % 2 == 0)
        ++s.remi;
      else
        ++s.romi;
    }
  }

  // Embracing counts. A descent (sigma_k, sigma_{k+1}) embraces v when
  // sigma_k > v > sigma_{k+1}; it is a left embrace of v if the pair lies
  // strictly left of v's position and a right embrace if strictly right.
  for (int v = 1; v <= m; ++v) {
    int pv = sigma.position_of(v);
    for (int k : desc_pos) {
      if (sigma(k) > v && v > sigma(k + 1)) {
        if (k + 1 < pv)
          ++s.l_desc[v];
        else if (k > pv)
          ++s.r_desc[v];
      }
    }
    for (int k : asc_pos) {
      if (k > pv && sigma(k) < v && v < sigma(k + 1)) ++s.r_asc[v];
    }
    s.les += s.l_desc[v];
    s.ress += s.r_desc[v];
    s.res += s.r_asc[v];
  }

  if (m % 2 == 0) {
    std::vector<bool> top(m + 1, false), bottom(m + 1, false);
    for (int k : desc_pos) {
      top[sigma(k)] = true;
      bottom[sigma(k + 1)] = true;
    }
    for (int j = 1; 2 * j <= m; ++j) {
      if (top[2 * j] && bottom[2 * j - 1]) ++s.dom;
    }
  }

  // Peak/valley taxonomy with sigma_0 = sigma_{m+1} = 0.
  for (int i = 1; i <= m; ++i) {
    int left = (i == 1) ? 0 : sigma(i - 1);
    int right = (i == m) ? 0 : sigma(i + 1);
    int v = sigma(i);
    PosClass c;
    if (left < v && v > right) {
      c = PosClass::Peak;
      ++s.peaks;
    } else if (left > v && v < right) {
      c = PosClass::Valley;
      ++s.valleys;
    } else if (left < v && v < right) {
      c = PosClass::DoubleAscent;
      ++s.dasc;
    } else {
      c = PosClass::DoubleDescent;
      ++s.dd;
    }
    s.cls[i] = c;
  }
  return s;
}

int stat_des(const Permutation& s) {
  int d = 0;
  for (int k = 1; k < s.size(); ++k)
    if (s(k) > s(k + 1)) ++d;
  return d;
}

int stat_drop(const Permutation& s) {
  int d = 0;
  for (int i = 1; i <= s.size(); ++i)
    if (s(i) < i) ++d;
  return d;
}

int stat_cyc(const Permutation& s) {
  return static_cast<int>(s.cycles().size());
}

int stat_lma(const Permutation& s) {
  int c = 0, mx = 0;
  for (int i = 1; i <= s.size(); ++i)
    if (s(i) > mx) mx = s(i), ++c;
  return c;
}

int stat_rmi(const Permutation& s) {
  int c = 0, mn = s.size() + 1;
  for (int i = s.size(); i >= 1; --i)
    if (s(i) < mn) mn = s(i), ++c;
  return c;
}

int stat_dom(const Permutation& s) {
  if (s.size() % 2 != 0)
    throw std::domain_error("dom requires an even-length permutation, got " +
                            std::to_string(s.size()));
  return compute_stats(s).dom;
}

std::vector<int> descent_tops(const Permutation& s) {
  std::vector<int> out;
  for (int k = 1; k < s.size(); ++k)
    if (s(k) > s(k + 1)) out.push_back(s(k));
  return out;
}

std::vector<int> descent_bottoms(const Permutation& s) {
  std::vector<int> out;
  for (int k = 1; k < s.size(); ++k)
    if (s(k) > s(k + 1)) out.push_back(s(k + 1));
  return out;
}

}  // namespace genocchi
