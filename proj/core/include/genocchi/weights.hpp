#pragma once

#include <functional>
#include <string>

#include "genocchi/multipoly.hpp"
#include "genocchi/pathdiag.hpp"
#include "genocchi/series.hpp"

namespace genocchi {

/// The two label-level weight systems. `Master` carries the eight-variable
/// X_n weights; `OddOdd` carries the five-variable Y_n weights. `h` is the
/// starting height of the step.
enum class Scheme { Master, OddOdd };

std::string scheme_name(Scheme s);

MultiPoly step_weight(Scheme scheme, Step s, int h, int xi, int xip);

/// Sum of step_weight over all legal labels at the given starting height;
/// equals the displayed bracket products of the paper's weight tables.
MultiPoly step_weight_sum(Scheme scheme, Step s, int h);

MultiPoly diagram_weight(Scheme scheme, const PathDiagram& d);

struct FlajoletResult {
  bool pass = true;
  std::string first_discrepancy;  // empty when pass
};

/// Checks sum over diagrams of weight * x^n against the matching catalog
/// expansion ("master" or "oddodd") through order N.
FlajoletResult flajolet_check(Scheme scheme, int N);

/// Generic Flajolet identity: level/rise/fall weights b_i, b'_i, a_i, c_i
/// drawn from the supplied generators (paths only, no labels) against the
/// J-fraction with b_n = b_n + b'_n and lam_n = a_{n-1} c_n.
FlajoletResult flajolet_check_generic(
    const std::function<MultiPoly(int)>& rise,
    const std::function<MultiPoly(int)>& fall,
    const std::function<MultiPoly(int)>& level1,
    const std::function<MultiPoly(int)>& level2, int N);

}  // namespace genocchi
