#pragma once

#include <set>
#include <vector>

#include "genocchi/permutation.hpp"
#include "genocchi/stats.hpp"

namespace genocchi {

/// Subset of [2n] with equally many odd and even members where every prefix
/// holds at least as many odd members as even ones.
struct WeakSignature {
  std::set<int> S;
  int n = 0;  // half-length of the carrier

  bool is_valid() const;
};

/// s(x) = S_o(x) - S_e(x) + (1 if x is an odd member of S or x is not in S),
/// where S_o(x)/S_e(x) count odd/even members of S strictly below x.
struct SignatureFunction {
  std::vector<int> values;  // s(1..2n), index 0 unused

  int operator()(int i) const { return values[i]; }
};

/// Builds the weak signature (descent tops plus bottoms) and its signature
/// function for a member of X_{2n}. Rejects permutations with a non even-odd
/// descent and asserts the identity s(i) = l(i) + r(i) + 1.
std::pair<WeakSignature, SignatureFunction> signature_of(
    const Permutation& sigma);

/// Signature function computed from a bare signature set (no permutation
/// needed); used when reconstructing permutations from path diagrams.
SignatureFunction signature_function(const WeakSignature& ws);

}  // namespace genocchi
