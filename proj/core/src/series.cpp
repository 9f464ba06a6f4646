#include "genocchi/series.hpp"

#include <sstream>
#include <stdexcept>

namespace genocchi {

PowerSeries::PowerSeries(int order) : order_(order) {
  if (order < 0) throw std::domain_error("negative series order");
  c_.resize(order + 1);
}

PowerSeries::PowerSeries(int order, std::vector<MultiPoly> coeffs)
    : order_(order), c_(std::move(coeffs)) {
  if (static_cast<int>(c_.size()) != order + 1)
    throw std::domain_error("series coefficient count != order + 1");
}

PowerSeries PowerSeries::one(int order) {
  PowerSeries s(order);
  s.c_[0] = MultiPoly::one();
  return s;
}

PowerSeries PowerSeries::monomial(int order, const MultiPoly& c, int k) {
  PowerSeries s(order);
  if (k <= order) s.c_[k] = c;
  return s;
}

const MultiPoly& PowerSeries::coeff(int k) const {
  if (k < 0 || k > order_) throw std::out_of_range("series coefficient index");
  return c_[k];
}

static void check_orders(const PowerSeries& a, const PowerSeries& b) {
  if (a.order() != b.order())
    throw std::domain_error("series order mismatch");
}

PowerSeries PowerSeries::operator+(const PowerSeries& o) const {
  check_orders(*this, o);
  PowerSeries r(order_);
  for (int k = 0; k <= order_; ++k) r.c_[k] = c_[k] + o.c_[k];
  return r;
}

PowerSeries PowerSeries::operator-(const PowerSeries& o) const {
  check_orders(*this, o);
  PowerSeries r(order_);
  for (int k = 0; k <= order_; ++k) r.c_[k] = c_[k] - o.c_[k];
  return r;
}

PowerSeries PowerSeries::operator*(const PowerSeries& o) const {
  check_orders(*this, o);
  PowerSeries r(order_);
  for (int i = 0; i <= order_; ++i) {
    if (c_[i].is_zero()) continue;
    for (int j = 0; i + j <= order_; ++j) {
      if (o.c_[j].is_zero()) continue;
      r.c_[i + j] += c_[i] * o.c_[j];
    }
  }
  return r;
}

PowerSeries PowerSeries::operator*(const MultiPoly& c) const {
  PowerSeries r(order_);
  for (int k = 0; k <= order_; ++k) r.c_[k] = c_[k] * c;
  return r;
}

bool PowerSeries::operator==(const PowerSeries& o) const {
  return order_ == o.order_ && c_ == o.c_;
}

PowerSeries PowerSeries::shift(int k) const {
  PowerSeries r(order_);
  for (int i = 0; i + k <= order_; ++i) r.c_[i + k] = c_[i];
  return r;
}

PowerSeries PowerSeries::invert() const {
  if (!c_[0].is_one())
    throw std::domain_error("series_invert requires unit constant term");
  PowerSeries r(order_);
  r.c_[0] = MultiPoly::one();
  for (int k = 1; k <= order_; ++k) {
    MultiPoly acc;
    for (int i = 1; i <= k; ++i) acc += c_[i] * r.c_[k - i];
    r.c_[k] = -acc;
  }
  return r;
}

std::string PowerSeries::to_string() const {
  std::ostringstream os;
  for (int k = 0; k <= order_; ++k) {
    if (k > 0) os << "\n";
    os << "x^" << k << ": " << c_[k].to_string();
  }
  return os.str();
}

}  // namespace genocchi
