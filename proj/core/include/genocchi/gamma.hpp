#pragma once

#include <stdexcept>
#include <vector>

#include "genocchi/multipoly.hpp"

namespace genocchi {

class GammaError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Expansion of a polynomial in the basis t^k (1+y t)^(n-2k). The gammas are
/// free of both t and y; reconstruct() returns the exact source polynomial.
struct GammaExpansion {
  int n = 0;
  std::vector<MultiPoly> gammas;  // gamma_0 .. gamma_{floor(n/2)}

  MultiPoly reconstruct() const;
};

/// Peels gamma_k = [t^k] of the running remainder, subtracting
/// gamma_k t^k (1+yt)^(n-2k) at each step. Throws GammaError when the input
/// is not decomposable in this basis (y-contaminated coefficient or nonzero
/// final remainder).
GammaExpansion gamma_extract(const MultiPoly& poly, int n);

}  // namespace genocchi
