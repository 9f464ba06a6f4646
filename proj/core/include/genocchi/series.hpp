#pragma once

#include <string>
#include <vector>

#include "genocchi/multipoly.hpp"

namespace genocchi {

/// Formal power series in x truncated at a fixed order, with MultiPoly
/// coefficients. Arithmetic truncates consistently; mixing orders is an
/// error.
class PowerSeries {
 public:
  explicit PowerSeries(int order);
  PowerSeries(int order, std::vector<MultiPoly> coeffs);

  static PowerSeries one(int order);
  /// c * x^k as a series of the given order.
  static PowerSeries monomial(int order, const MultiPoly& c, int k);

  int order() const { return order_; }
  const MultiPoly& coeff(int k) const;
  const std::vector<MultiPoly>& coeffs() const { return c_; }

  PowerSeries operator+(const PowerSeries& o) const;
  PowerSeries operator-(const PowerSeries& o) const;
  PowerSeries operator*(const PowerSeries& o) const;
  PowerSeries operator*(const MultiPoly& c) const;
  bool operator==(const PowerSeries& o) const;

  /// Multiplies by x^k, dropping coefficients past the order.
  PowerSeries shift(int k) const;

  /// Multiplicative inverse; requires the constant coefficient to be the
  /// unit polynomial 1. Throws std::domain_error otherwise.
  PowerSeries invert() const;

  /// One line per coefficient: "x^k: <canonical polynomial>".
  std::string to_string() const;

 private:
  int order_;
  std::vector<MultiPoly> c_;
};

}  // namespace genocchi
