#include "genocchi/cfengine.hpp"

#include <stdexcept>

namespace genocchi {

PowerSeries jfrac_expand(const JFractionSpec& spec, int N, int depth) {
  if (N < 0) throw std::domain_error("negative truncation order");
  if (depth < 0) depth = (N + 1) / 2 + 1;
  PowerSeries tail = PowerSeries::one(N);
  for (int d = depth - 1; d >= 0; --d) {
    PowerSeries denom = PowerSeries::one(N) -
                        PowerSeries::monomial(N, spec.b(d), 1) -
                        tail.shift(2) * spec.lam(d + 1);
    tail = denom.invert();
  }
  return tail;
}

PowerSeries sfrac_expand(const SFractionSpec& spec, int N, int depth) {
  if (N < 0) throw std::domain_error("negative truncation order");
  if (depth < 0) depth = N + 1;
  PowerSeries tail = PowerSeries::one(N);
  for (int d = depth - 1; d >= 0; --d) {
    PowerSeries denom =
        PowerSeries::one(N) - tail.shift(1) * spec.alpha(d + 1);
    tail = denom.invert();
  }
  return tail;
}

JFractionSpec contract_even(const SFractionSpec& s) {
  auto alpha = s.alpha;
  JFractionSpec j;
  j.b = [alpha](int n) {
    return n == 0 ? alpha(1) : alpha(2 * n) + alpha(2 * n + 1);
  };
  j.lam = [alpha](int n) { return alpha(2 * n - 1) * alpha(2 * n); };
  return j;
}

std::pair<MultiPoly, JFractionSpec> contract_odd(const SFractionSpec& s) {
  auto alpha = s.alpha;
  JFractionSpec j;
  j.b = [alpha](int n) { return alpha(2 * n + 1) + alpha(2 * n + 2); };
  j.lam = [alpha](int n) { return alpha(2 * n) * alpha(2 * n + 1); };
  return {alpha(1), j};
}

PowerSeries contract_odd_expand(const SFractionSpec& s, int N) {
  auto [head, j] = contract_odd(s);
  return PowerSeries::one(N) + jfrac_expand(j, N).shift(1) * head;
}

}  // namespace genocchi
