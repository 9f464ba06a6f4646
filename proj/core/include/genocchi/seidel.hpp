#pragma once

#include <vector>

#include "genocchi/multipoly.hpp"

namespace genocchi {

/// Boustrophedon Seidel triangle. Row r (1-based) holds ceil(r/2) entries;
/// odd rows fill left to right, even rows right to left, each row seeded by
/// the previous row's terminal entry.
struct SeidelTriangle {
  std::vector<std::vector<BigInt>> rows;

  /// Genocchi numbers G_2, G_4, ...: terminal entries of odd rows.
  std::vector<BigInt> G() const;
  /// Median Genocchi numbers H_1, H_3, ...: leading entries of even rows.
  std::vector<BigInt> H() const;
  /// Normalized numbers H_{2n+1} / 2^n; exact divisibility is asserted.
  std::vector<BigInt> h() const;
};

/// Builds enough rows to read off G_{2n} for n = 1..N and H_{2n+1} for
/// n = 0..N.
SeidelTriangle seidel(int N);

}  // namespace genocchi
