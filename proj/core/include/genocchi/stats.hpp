#pragma once

#include <vector>

#include "genocchi/permutation.hpp"

namespace genocchi {

/// Position taxonomy under the boundary convention sigma_0 = sigma_{n+1} = 0.
enum class PosClass { Peak, Valley, DoubleAscent, DoubleDescent };

/// Every permutation statistic used by the engine, computed in one pass.
/// Per-value embracing vectors are 1-indexed by value (index 0 unused).
struct StatVector {
  int des = 0;    // descents (adjacent strict drops)
  int drop = 0;   // #{i : sigma(i) < i}
  int cyc = 0;
  int lma = 0;    // left-to-right maxima
  int rmi = 0;    // right-to-left minima
  int lema = 0;   // even left-to-right maxima
  int loma = 0;   // odd left-to-right maxima
  int remi = 0;   // even right-to-left minima
  int romi = 0;   // odd right-to-left minima
  int les = 0;    // descents embracing a value to their right
  int ress = 0;   // descents embracing a value to their left
  int res = 0;    // ascents embracing a value to their left
  int dom = 0;    // dominoes {2j-1, 2j}; only meaningful for even length
  int dd = 0;     // double descents (boundary convention)
  int peaks = 0;
  int valleys = 0;
  int dasc = 0;   // double ascents
  int fix_e = 0;  // even fixed points
  int fix_o = 0;  // odd fixed points

  std::vector<int> l_desc;   // l_sigma(v): embracing descents left of v
  std::vector<int> r_desc;   // r_sigma(v): embracing descents right of v
  std::vector<int> r_asc;    // embracing ascents right of v (res per value)
  std::vector<PosClass> cls;  // class of the value at position i (1-indexed)
};

StatVector compute_stats(const Permutation& sigma);

// Focused accessors used where a full StatVector would be noise.
int stat_des(const Permutation& s);
int stat_drop(const Permutation& s);
int stat_cyc(const Permutation& s);
int stat_lma(const Permutation& s);
int stat_rmi(const Permutation& s);
/// Number of dominoes; rejects odd-length input.
int stat_dom(const Permutation& s);

/// Descent tops and descent bottoms of sigma.
std::vector<int> descent_tops(const Permutation& s);
std::vector<int> descent_bottoms(const Permutation& s);

}  // namespace genocchi
