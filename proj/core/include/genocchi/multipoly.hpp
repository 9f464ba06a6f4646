#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <initializer_list>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "genocchi/varid.hpp"

namespace genocchi {

using BigInt = boost::multiprecision::cpp_int;

/// Sparse exponent vector over the fixed alphabet, kept sorted by Var with
/// strictly positive exponents.
class Monomial {
 public:
  Monomial() = default;
  static Monomial var(Var v, int exp = 1);

  int exponent(Var v) const;
  int degree() const;
  bool is_unit() const { return e_.empty(); }

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& m) const;
  /// Quotient this / d; caller must ensure d.divides(*this).
  Monomial divided_by(const Monomial& d) const;

  /// Graded-lex: total degree first, ties broken by the first variable (in
  /// alphabet order) with differing exponent, larger exponent = larger
  /// monomial.
  static int cmp(const Monomial& x, const Monomial& y);

  bool operator==(const Monomial& o) const { return e_ == o.e_; }

  const std::vector<std::pair<Var, int>>& factors() const { return e_; }

  std::string to_string() const;

 private:
  std::vector<std::pair<Var, int>> e_;
};

struct MonomialGrlexLess {
  bool operator()(const Monomial& x, const Monomial& y) const {
    return Monomial::cmp(x, y) < 0;
  }
};

/// Exact sparse multivariate polynomial with arbitrary-precision integer
/// coefficients. Immutable in spirit: all operations return fresh values, so
/// instances are safe to share across threads.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, BigInt, MonomialGrlexLess>;

  MultiPoly() = default;
  MultiPoly(long v) : MultiPoly(BigInt(v)) {}
  explicit MultiPoly(BigInt c);

  static MultiPoly zero() { return MultiPoly(); }
  static MultiPoly one() { return MultiPoly(BigInt(1)); }
  static MultiPoly variable(Var v, int exp = 1);
  static MultiPoly term(Monomial m, BigInt c);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  /// True if no variable occurs; value() is then meaningful.
  bool is_constant() const;
  BigInt constant_value() const;

  MultiPoly operator-() const;
  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }

  MultiPoly pow(int e) const;

  int degree_in(Var v) const;
  int total_degree() const;
  /// Coefficient of v^k as a polynomial in the remaining variables.
  MultiPoly coeff_of(Var v, int k) const;
  bool contains(Var v) const { return degree_in(v) > 0; }

  /// Substitutes a polynomial for a variable.
  MultiPoly subst(Var v, const MultiPoly& value) const;
  /// Sets every variable outside `keep` to 1.
  MultiPoly keep_only(const std::set<Var>& keep) const;
  /// Full integer evaluation; every occurring variable must be assigned.
  BigInt eval(const std::map<Var, BigInt>& assignment) const;

  /// Exact polynomial long division (graded-lex leading terms). Throws
  /// std::domain_error when the division is not exact.
  MultiPoly divide_exact(const MultiPoly& divisor) const;

  const TermMap& terms() const { return terms_; }

  /// Canonical rendering: graded-lex descending, `^` powers, `*` products.
  std::string to_string() const;

 private:
  void prune(const Monomial& m);
  TermMap terms_;
};

MultiPoly operator*(const BigInt& c, const MultiPoly& p);

}  // namespace genocchi
