#include "genocchi/gamma.hpp"

namespace genocchi {

MultiPoly GammaExpansion::reconstruct() const {
  MultiPoly base = MultiPoly::one() +
                   MultiPoly::variable(Var::y) * MultiPoly::variable(Var::t);
  MultiPoly acc;
  for (std::size_t k = 0; k < gammas.size(); ++k) {
    acc += gammas[k] * MultiPoly::variable(Var::t).pow(static_cast<int>(k)) *
           base.pow(n - 2 * static_cast<int>(k));
  }
  return acc;
}

GammaExpansion gamma_extract(const MultiPoly& poly, int n) {
  if (n < 0) throw GammaError("gamma_extract requires n >= 0");
  if (poly.degree_in(Var::t) > n)
    throw GammaError("degree in t exceeds n");

  MultiPoly base = MultiPoly::one() +
                   MultiPoly::variable(Var::y) * MultiPoly::variable(Var::t);
  GammaExpansion out;
  out.n = n;
  MultiPoly rem = poly;
  for (int k = 0; k <= n / 2; ++k) {
    MultiPoly g = rem.coeff_of(Var::t, k);
    if (g.contains(Var::y))
      throw GammaError(
          "not gamma-decomposable in the (t, 1+yt) basis: coefficient of t^" +
          std::to_string(k) + " involves y: " + g.to_string());
    out.gammas.push_back(g);
    rem -= g * MultiPoly::variable(Var::t).pow(k) * base.pow(n - 2 * k);
  }
  if (!rem.is_zero())
    throw GammaError(
        "not gamma-decomposable in the (t, 1+yt) basis: nonzero remainder " +
        rem.to_string());
  return out;
}

}  // namespace genocchi
