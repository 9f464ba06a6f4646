#pragma once

#include <functional>
#include <utility>

#include "genocchi/series.hpp"

namespace genocchi {

/// J-type continued fraction 1 / (1 - b_0 x - lam_1 x^2 / (1 - b_1 x - ...)),
/// given by total coefficient generators b(n >= 0) and lam(n >= 1).
struct JFractionSpec {
  std::function<MultiPoly(int)> b;
  std::function<MultiPoly(int)> lam;
};

/// S-type continued fraction 1 / (1 - alpha_1 x / (1 - alpha_2 x / ...)).
struct SFractionSpec {
  std::function<MultiPoly(int)> alpha;
};

/// Truncated expansion to order N, computed bottom-up from the given depth.
/// The default depth ceil(N/2)+1 is sufficient for J-fractions; expanding
/// deeper never changes the result (depth-stability).
PowerSeries jfrac_expand(const JFractionSpec& spec, int N, int depth = -1);
PowerSeries sfrac_expand(const SFractionSpec& spec, int N, int depth = -1);

/// Even contraction: b_0 = a_1, b_n = a_2n + a_{2n+1}, lam_n = a_{2n-1} a_2n.
JFractionSpec contract_even(const SFractionSpec& s);

/// Odd contraction: the S-fraction equals 1 + a_1 x * J(spec) with
/// b_{n-1} = a_{2n-1} + a_2n and lam_n = a_2n a_{2n+1}; returns the head
/// coefficient a_1 together with the J spec.
std::pair<MultiPoly, JFractionSpec> contract_odd(const SFractionSpec& s);

/// Convenience: the series 1 + alpha_1 x * J as produced by contract_odd.
PowerSeries contract_odd_expand(const SFractionSpec& s, int N);

}  // namespace genocchi
