#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "genocchi/permutation.hpp"

namespace genocchi {

enum class Family {
  D,
  DC,
  E,
  EC,
  Dstar,
  X,
  Xbar,
  Xhat,
  Y,
  Ystar,
  Ybar,
  Yhat,
  Dumont,
  DumontDerangement,
  Pistol,
};

std::string family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);
std::vector<Family> all_families();

/// Carrier length for index n (2n for the even families, 2n+1 for the odd
/// ones).
int carrier_length(Family f, int n);

class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Default enumeration budget: factorial carriers up to 11!.
inline constexpr std::uint64_t kDefaultBudget = 39916800;

/// Exact membership predicate. Rejects carriers of the wrong parity with the
/// family name in the message.
bool is_member(Family f, const Permutation& sigma);

enum class GenMode {
  Auto,        // accelerated where available, filter otherwise
  Filter,      // scan S_m in lexicographic order
  Accelerated  // X_{2n} via path diagrams and the inverse bijection
};

/// Every member exactly once, in lexicographic one-line order. Filter mode
/// requires m! <= budget; the accelerated X generator is bounded by the
/// number of path diagrams instead. `threads` > 1 partitions the filter scan
/// by first entry; output order is unaffected.
std::vector<Permutation> generate(Family f, int n,
                                  GenMode mode = GenMode::Auto,
                                  std::uint64_t budget = kDefaultBudget,
                                  int threads = 1);

}  // namespace genocchi
