#pragma once

#include <set>
#include <stdexcept>
#include <vector>

#include "genocchi/permutation.hpp"

namespace genocchi {

class ActionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Indices r whose doubleton {2r-1, 2r} lies entirely inside or entirely
/// outside the signature set of sigma.
std::vector<int> free_pairs(const Permutation& sigma);

/// Involution theta_r: exchanges the values 2r-1 and 2r. Defined for free
/// pairs outside the signature set and for the adjacent descent (2r, 2r-1);
/// other configurations are rejected.
Permutation theta(const Permutation& sigma, int r);

/// Inter-hopping action phi_r on X_{2n}: toggles the free pair {2r-1, 2r}
/// between signature and non-signature status, changing des by exactly one
/// while preserving les and ress.
Permutation interhop(const Permutation& sigma, int r);

/// Signature-preserving action phi_x on Xbar_{2n} for x in S_sigma. Cases
/// with odd signature value move the partner element across adjacent blocks;
/// cases with even signature value are constrained reinsertions, realized as
/// a search over the Xbar carrier with a uniqueness assertion.
Permutation normalizer_phi(const Permutation& sigma, int x);

/// Valley-or-peak pair action on Ybar*_{2n+1}; `i` indexes the VOP pair
/// {2i-1, 2i}.
Permutation fbar_phi(const Permutation& sigma, int i);

/// VOP pair indices of a member of Ybar*.
std::vector<int> vop_pairs_of(const Permutation& sigma);

/// Embracing number of the VOP pair {2i-1, 2i}: the res count of 2i-1 when
/// its valley/peak balance is even, the les count of 2i otherwise.
int vop_embracing_number(const Permutation& sigma, int i);

struct Orbit {
  Permutation base;
  std::vector<Permutation> members;  // sorted, duplicates removed
};

/// Closure under interhop over free pairs (section 5).
Orbit interhop_orbit(const Permutation& sigma);
/// Closure under normalizer_phi over x in S_sigma (section 6).
Orbit normalizer_orbit(const Permutation& sigma);
/// Closure under fbar_phi over VOP pairs (section 7).
Orbit fbar_orbit(const Permutation& sigma);

/// Cached family carriers backing the constrained searches.
const std::vector<Permutation>& xbar_carrier(int n);
const std::vector<Permutation>& ybar_carrier(int n);

}  // namespace genocchi
