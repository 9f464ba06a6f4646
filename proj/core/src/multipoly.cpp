#include "genocchi/multipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace genocchi {

std::string_view var_name(Var v) {
  switch (v) {
    case Var::a: return "a";
    case Var::abar: return "abar";
    case Var::b: return "b";
    case Var::bbar: return "bbar";
    case Var::p: return "p";
    case Var::q: return "q";
    case Var::y: return "y";
    case Var::t: return "t";
    case Var::z: return "z";
    case Var::x0: return "x0";
    case Var::x1: return "x1";
    case Var::alpha: return "alpha";
    case Var::beta: return "beta";
    case Var::gamma: return "gamma";
    case Var::alphabar: return "alphabar";
    case Var::betabar: return "betabar";
    case Var::gammabar: return "gammabar";
  }
  return "?";
}

std::optional<Var> var_from_name(std::string_view name) {
  for (Var v : all_vars()) {
    if (var_name(v) == name) return v;
  }
  return std::nullopt;
}

Monomial Monomial::var(Var v, int exp) {
  Monomial m;
  if (exp < 0) throw std::domain_error("negative exponent");
  if (exp > 0) m.e_.push_back({v, exp});
  return m;
}

int Monomial::exponent(Var v) const {
  for (const auto& [w, e] : e_) {
    if (w == v) return e;
  }
  return 0;
}

int Monomial::degree() const {
  int d = 0;
  for (const auto& [w, e] : e_) d += e;
  return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.e_.reserve(e_.size() + o.e_.size());
  auto i = e_.begin();
  auto j = o.e_.begin();
  while (i != e_.end() && j != o.e_.end()) {
    if (i->first == j->first) {
      r.e_.push_back({i->first, i->second + j->second});
      ++i;
      ++j;
    } else if (i->first < j->first) {
      r.e_.push_back(*i++);
    } else {
      r.e_.push_back(*j++);
    }
  }
  r.e_.insert(r.e_.end(), i, e_.end());
  r.e_.insert(r.e_.end(), j, o.e_.end());
  return r;
}

bool Monomial::divides(const Monomial& m) const {
  for (const auto& [w, e] : e_) {
    if (m.exponent(w) < e) return false;
  }
  return true;
}

Monomial Monomial::divided_by(const Monomial& d) const {
  Monomial r;
  for (const auto& [w, e] : e_) {
    int rem = e - d.exponent(w);
    if (rem < 0) throw std::domain_error("monomial division not exact");
    if (rem > 0) r.e_.push_back({w, rem});
  }
  return r;
}

int Monomial::cmp(const Monomial& x, const Monomial& y) {
  int dx = x.degree(), dy = y.degree();
  if (dx != dy) return dx < dy ? -1 : 1;
  auto i = x.e_.begin();
  auto j = y.e_.begin();
  while (i != x.e_.end() && j != y.e_.end()) {
    if (i->first != j->first) {
      // The earlier variable occurs in exactly one monomial: that one is
      // lexicographically larger.
      return i->first < j->first ? 1 : -1;
    }
    if (i->second != j->second) return i->second < j->second ? -1 : 1;
    ++i;
    ++j;
  }
  if (i != x.e_.end()) return 1;
  if (j != y.e_.end()) return -1;
  return 0;
}

std::string Monomial::to_string() const {
  if (e_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, e] : e_) {
    if (!first) os << "*";
    first = false;
    os << var_name(w);
    if (e > 1) os << "^" << e;
  }
  return os.str();
}

MultiPoly::MultiPoly(BigInt c) {
  if (c != 0) terms_[Monomial{}] = std::move(c);
}

MultiPoly MultiPoly::variable(Var v, int exp) {
  MultiPoly r;
  r.terms_[Monomial::var(v, exp)] = 1;
  return r;
}

MultiPoly MultiPoly::term(Monomial m, BigInt c) {
  MultiPoly r;
  if (c != 0) r.terms_[std::move(m)] = std::move(c);
  return r;
}

bool MultiPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.is_unit() &&
         terms_.begin()->second == 1;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

BigInt MultiPoly::constant_value() const {
  if (terms_.empty()) return 0;
  if (!is_constant()) throw std::domain_error("polynomial is not constant");
  return terms_.begin()->second;
}

void MultiPoly::prune(const Monomial& m) {
  auto it = terms_.find(m);
  if (it != terms_.end() && it->second == 0) terms_.erase(it);
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r;
  for (const auto& [m, c] : terms_) r.terms_[m] = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [m, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(m, BigInt(-c));
    if (!inserted) {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly r = *this;
  r += o;
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  MultiPoly r = *this;
  r -= o;
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  MultiPoly r;
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : o.terms_) {
      Monomial m = m1 * m2;
      auto [it, inserted] = r.terms_.try_emplace(m, BigInt(c1 * c2));
      if (!inserted) {
        it->second += c1 * c2;
        if (it->second == 0) r.terms_.erase(it);
      }
    }
  }
  return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = *this * o;
  return *this;
}

MultiPoly MultiPoly::pow(int e) const {
  if (e < 0) throw std::domain_error("negative power");
  MultiPoly r = one();
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

int MultiPoly::degree_in(Var v) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(v));
  return d;
}

int MultiPoly::total_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

MultiPoly MultiPoly::coeff_of(Var v, int k) const {
  MultiPoly r;
  for (const auto& [m, c] : terms_) {
    if (m.exponent(v) != k) continue;
    r.terms_[m.divided_by(Monomial::var(v, k))] = c;
  }
  return r;
}

MultiPoly MultiPoly::subst(Var v, const MultiPoly& value) const {
  int dv = degree_in(v);
  std::vector<MultiPoly> powers;
  powers.reserve(dv + 1);
  powers.push_back(one());
  for (int e = 1; e <= dv; ++e) powers.push_back(powers.back() * value);

  MultiPoly r;
  for (const auto& [m, c] : terms_) {
    int e = m.exponent(v);
    MultiPoly base = term(e > 0 ? m.divided_by(Monomial::var(v, e)) : m, c);
    r += base * powers[e];
  }
  return r;
}

MultiPoly MultiPoly::keep_only(const std::set<Var>& keep) const {
  MultiPoly r;
  for (const auto& [m, c] : terms_) {
    Monomial stripped;
    for (const auto& [w, e] : m.factors()) {
      if (keep.count(w)) stripped = stripped * Monomial::var(w, e);
    }
    r += term(stripped, c);
  }
  return r;
}

BigInt MultiPoly::eval(const std::map<Var, BigInt>& assignment) const {
  BigInt total = 0;
  for (const auto& [m, c] : terms_) {
    BigInt v = c;
    for (const auto& [w, e] : m.factors()) {
      auto it = assignment.find(w);
      if (it == assignment.end())
        throw std::domain_error("unassigned variable in eval: " +
                                std::string(var_name(w)));
      for (int i = 0; i < e; ++i) v *= it->second;
    }
    total += v;
  }
  return total;
}

MultiPoly MultiPoly::divide_exact(const MultiPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
  MultiPoly quotient;
  MultiPoly rem = *this;
  const auto& dlt = *divisor.terms_.rbegin();
  while (!rem.is_zero()) {
    const auto& rlt = *rem.terms_.rbegin();
    if (!dlt.first.divides(rlt.first) || rlt.second % dlt.second != 0)
      throw std::domain_error("polynomial division not exact");
    MultiPoly qterm =
        term(rlt.first.divided_by(dlt.first), rlt.second / dlt.second);
    quotient += qterm;
    rem -= qterm * divisor;
  }
  return quotient;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    BigInt abs_c = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (m.is_unit()) {
      os << abs_c.str();
    } else {
      if (abs_c != 1) os << abs_c.str() << "*";
      os << m.to_string();
    }
  }
  return os.str();
}

MultiPoly operator*(const BigInt& c, const MultiPoly& p) {
  return MultiPoly(c) * p;
}

}  // namespace genocchi
