#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "genocchi/multipoly.hpp"

namespace genocchi {

/// Surjective pistol on [2n]: f maps [2n] onto the even values {2,4,..,2n}
/// with f(i) >= i. Stored as the value list f(1..2n).
struct Pistol {
  std::vector<int> f;

  int n() const { return static_cast<int>(f.size()) / 2; }
  int operator()(int i) const { return f[i - 1]; }
  std::string to_string() const;
  bool is_valid() const;
};

/// The six point-type statistics of a pistol.
struct PistolStats {
  int mo = 0;  // odd maxima
  int me = 0;  // even maxima
  int fd = 0;  // doubled fixed points
  int fi = 0;  // isolated fixed points
  int sd = 0;  // doubled surfixed points
  int si = 0;  // isolated surfixed points
};

PistolStats pistol_stats(const Pistol& f);

/// All of P_{2n}, lexicographically by value list.
std::vector<Pistol> enumerate_pistols(int n, std::uint64_t budget = 39916800);

/// Gamma_n = sum over P_{2n} of
///   alpha^mo beta^fd gamma^si alphabar^me betabar^fi gammabar^sd.
MultiPoly gamma_pistol(int n, std::uint64_t budget = 39916800);

}  // namespace genocchi
