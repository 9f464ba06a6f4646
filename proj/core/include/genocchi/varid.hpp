#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace genocchi {

/// Fixed variable alphabet. The enumerator order doubles as the canonical
/// variable order used by the graded-lexicographic term order and by all
/// text renderings.
enum class Var : std::uint8_t {
  a,
  abar,
  b,
  bbar,
  p,
  q,
  y,
  t,
  z,
  x0,
  x1,
  alpha,
  beta,
  gamma,
  alphabar,
  betabar,
  gammabar,
};

inline constexpr std::size_t kVarCount = 17;

std::string_view var_name(Var v);

/// Parses a variable name; unknown names yield nullopt (callers reject them).
std::optional<Var> var_from_name(std::string_view name);

constexpr std::array<Var, kVarCount> all_vars() {
  return {Var::a,     Var::abar,  Var::b,        Var::bbar,    Var::p,
          Var::q,     Var::y,     Var::t,        Var::z,       Var::x0,
          Var::x1,    Var::alpha, Var::beta,     Var::gamma,   Var::alphabar,
          Var::betabar, Var::gammabar};
}

}  // namespace genocchi
