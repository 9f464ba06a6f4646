#pragma once

#include <string>
#include <vector>

namespace genocchi {

/// A permutation of [m] in one-line notation. All positions and values are
/// 1-based in the public API and in error messages.
class Permutation {
 public:
  Permutation() = default;
  /// Validates that `word` is a bijection of [m].
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int m);

  /// One-line notation: whitespace- or comma-separated integers. Compact
  /// digit strings like "2413" are not accepted (ambiguous for values >= 10).
  static Permutation parse_one_line(const std::string& text);

  /// Cycle notation like "(1,3,4,2)(5)"; every value of [m] must appear.
  static Permutation parse_cycles(const std::string& text);

  int size() const { return static_cast<int>(w_.size()); }
  /// Value at position i (1-based).
  int at(int i) const { return w_[i - 1]; }
  /// sigma(i) viewed as a function; identical to at(i).
  int operator()(int i) const { return at(i); }
  /// Position of value v (1-based).
  int position_of(int v) const { return pos_[v - 1]; }

  const std::vector<int>& word() const { return w_; }

  /// Cycles in the max-first, increasing-maxima canonical form.
  std::vector<std::vector<int>> cycles() const;

  std::string to_string() const;  // space-separated one-line word

  bool operator==(const Permutation& o) const { return w_ == o.w_; }
  bool operator<(const Permutation& o) const { return w_ < o.w_; }

 private:
  std::vector<int> w_;
  std::vector<int> pos_;
};

/// Foata's first fundamental transform, max-first / increasing-maxima
/// variant: each cycle is written with its maximum first, cycles are sorted
/// by increasing maximum and concatenated. Satisfies
/// (drop, cyc)(sigma) = (des, lma)(foata(sigma)).
Permutation foata(const Permutation& sigma);

}  // namespace genocchi
