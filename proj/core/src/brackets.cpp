#include "genocchi/brackets.hpp"

#include <stdexcept>

namespace genocchi {

MultiPoly pq_bracket(const MultiPoly& x, int n, const MultiPoly& y, Var pv,
                     Var qv) {
  if (n < 1) throw std::domain_error("pq_bracket requires n >= 1");
  if (n == 1) return x * y;
  MultiPoly r = x * MultiPoly::variable(pv, n - 1);
  for (int i = 1; i <= n - 2; ++i) {
    r += MultiPoly::term(Monomial::var(pv, n - 1 - i) * Monomial::var(qv, i), 1);
  }
  r += y * MultiPoly::variable(qv, n - 1);
  return r;
}

MultiPoly pq_bracket(const MultiPoly& x, int n, Var pv, Var qv) {
  return pq_bracket(x, n, MultiPoly::one(), pv, qv);
}

MultiPoly pq_int(int n, Var pv, Var qv) {
  return pq_bracket(MultiPoly::one(), n, MultiPoly::one(), pv, qv);
}

MultiPoly pq_binomial(int n, int k) {
  if (k < 0 || k > n) throw std::domain_error("pq_binomial requires 0 <= k <= n");
  MultiPoly num = MultiPoly::one();
  for (int i = n; i > n - k; --i) num *= pq_int(i);
  MultiPoly den = MultiPoly::one();
  for (int i = 1; i <= k; ++i) den *= pq_int(i);
  return num.divide_exact(den);
}

}  // namespace genocchi
