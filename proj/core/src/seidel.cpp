#include "genocchi/seidel.hpp"

#include <stdexcept>

namespace genocchi {

SeidelTriangle seidel(int N) {
  if (N < 1) throw std::domain_error("seidel requires N >= 1");
  const int row_count = 2 * N + 2;
  SeidelTriangle tri;
  tri.rows.reserve(row_count);
  tri.rows.push_back({1});  // row 1
  for (int r = 2; r <= row_count; ++r) {
    const auto& prev = tri.rows.back();
    const int len = (r + 1) / 2;
    std::vector<BigInt> row(len);
    auto prev_at = [&prev](int j) {
      return j < static_cast<int>(prev.size()) ? prev[j] : BigInt(0);
    };
    if (r % 2 == 1) {
      // Left to right, seeded by the previous row's leftmost entry.
      row[0] = prev[0];
      for (int j = 1; j < len; ++j) row[j] = row[j - 1] + prev_at(j);
    } else {
      // Right to left, seeded by the previous row's rightmost entry.
      row[len - 1] = prev.back();
      for (int j = len - 2; j >= 0; --j) row[j] = row[j + 1] + prev_at(j);
    }
    tri.rows.push_back(std::move(row));
  }
  return tri;
}

std::vector<BigInt> SeidelTriangle::G() const {
  // Row 2n-1 terminates in G_2n.
  std::vector<BigInt> out;
  for (std::size_t n = 1; 2 * n - 1 <= rows.size(); ++n)
    out.push_back(rows[2 * n - 2].back());
  return out;
}

std::vector<BigInt> SeidelTriangle::H() const {
  std::vector<BigInt> out;
  for (std::size_t n = 0; 2 * n + 2 <= rows.size(); ++n)
    out.push_back(rows[2 * n + 1].front());
  return out;
}

std::vector<BigInt> SeidelTriangle::h() const {
  std::vector<BigInt> out;
  BigInt power = 1;
  for (const BigInt& v : H()) {
    if (v % power != 0)
      throw std::logic_error("H value " + v.str() + " not divisible by " +
                             power.str());
    out.push_back(v / power);
    power *= 2;
  }
  return out;
}

}  // namespace genocchi
