#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "genocchi/permutation.hpp"

namespace genocchi {

enum class Step : std::uint8_t { U, D, L1, L2 };

std::string step_name(Step s);

/// 2-Motzkin path: word over {U, D, L1, L2} with nonnegative prefix heights
/// returning to zero.
struct MotzkinPath {
  std::vector<Step> steps;

  int length() const { return static_cast<int>(steps.size()); }
  /// Heights before each step: start_height(j) for 1-based step j.
  int start_height(int j) const;
  int end_height(int j) const;
  bool is_valid() const;

  /// Compact rendering like "UUL1DUDL2D"; parses the same form.
  std::string to_string() const;
  static MotzkinPath parse(const std::string& text);
};

/// Path plus the two label sequences (xi, xi'), bounded per step by the
/// starting height h: rise (0..h) x (0..h+1); fall (0..h) x (0..h-1);
/// level (0..h) x (0..h).
struct PathDiagram {
  MotzkinPath path;
  std::vector<int> xi;
  std::vector<int> xi_prime;

  int length() const { return path.length(); }
  bool is_legal() const;
  std::string to_string() const;  // path word plus label list
};

/// Every legal diagram of length n exactly once; the count equals H_{2n+1}.
std::vector<PathDiagram> enumerate_diagrams(int n,
                                            std::uint64_t budget = 39916800);

/// Bijection X_{2n} -> path diagrams: step j classified by which of
/// {2j-1, 2j} lie in the signature set, labels (r(2j-1), r(2j)).
PathDiagram phi(const Permutation& sigma);

/// Inverse slot construction; slots are counted right to left throughout.
Permutation phi_inverse(const PathDiagram& d);

/// Odd-odd map on Y*_{2n+1}: step j from the valley/peak class of the value
/// 2j-1, labels (l(2j-1), l(2j)).
PathDiagram psi(const Permutation& sigma);

}  // namespace genocchi
