#include "genocchi/pathdiag.hpp"

#include <sstream>
#include <stdexcept>

#include "genocchi/families.hpp"
#include "genocchi/signature.hpp"
#include "genocchi/stats.hpp"

namespace genocchi {

std::string step_name(Step s) {
  switch (s) {
    case Step::U: return "U";
    case Step::D: return "D";
    case Step::L1: return "L1";
    case Step::L2: return "L2";
  }
  return "?";
}

static int step_delta(Step s) {
  return s == Step::U ? 1 : s == Step::D ? -1 : 0;
}

int MotzkinPath::start_height(int j) const {
  int h = 0;
  for (int i = 1; i < j; ++i) h += step_delta(steps[i - 1]);
  return h;
}

int MotzkinPath::end_height(int j) const {
  return start_height(j) + step_delta(steps[j - 1]);
}

bool MotzkinPath::is_valid() const {
  int h = 0;
  for (Step s : steps) {
    h += step_delta(s);
    if (h < 0) return false;
  }
  return h == 0;
}

std::string MotzkinPath::to_string() const {
  std::string out;
  for (Step s : steps) out += step_name(s);
  return out;
}

MotzkinPath MotzkinPath::parse(const std::string& text) {
  MotzkinPath p;
  for (std::size_t i = 0; i < text.size();) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == 'U') {
      p.steps.push_back(Step::U);
      ++i;
    } else if (c == 'D') {
      p.steps.push_back(Step::D);
      ++i;
    } else if (c == 'L' && i + 1 < text.size() &&
               (text[i + 1] == '1' || text[i + 1] == '2')) {
      p.steps.push_back(text[i + 1] == '1' ? Step::L1 : Step::L2);
      i += 2;
    } else {
      throw std::domain_error("cannot parse step at offset " +
                              std::to_string(i) + " of '" + text + "'");
    }
  }
  if (!p.is_valid())
    throw std::domain_error("step word is not a Motzkin path: " + text);
  return p;
}

static bool label_bounds(Step s, int h, int xi, int xip) {
  if (xi < 0 || xip < 0) return false;
  switch (s) {
    case Step::U: return xi <= h && xip <= h + 1;
    case Step::D: return h > 0 && xi <= h && xip <= h - 1;
    case Step::L1:
    case Step::L2: return xi <= h && xip <= h;
  }
  return false;
}

bool PathDiagram::is_legal() const {
  if (!path.is_valid()) return false;
  const int n = path.length();
  if (static_cast<int>(xi.size()) != n ||
      static_cast<int>(xi_prime.size()) != n)
    return false;
  int h = 0;
  for (int j = 1; j <= n; ++j) {
    Step s = path.steps[j - 1];
    if (!label_bounds(s, h, xi[j - 1], xi_prime[j - 1])) return false;
    h += step_delta(s);
  }
  return true;
}

std::string PathDiagram::to_string() const {
  std::ostringstream os;
  os << path.to_string();
  for (int j = 0; j < length(); ++j)
    os << (j == 0 ? " " : " ") << "(" << xi[j] << "," << xi_prime[j] << ")";
  return os.str();
}

namespace {

void extend_diagrams(int n, int j, int h, PathDiagram& d,
                     std::vector<PathDiagram>& out) {
  if (j > n) {
    if (h == 0) out.push_back(d);
    return;
  }
  // Height must be able to return to zero with the remaining steps.
  if (h > n - j + 1) return;
  for (Step s : {Step::U, Step::D, Step::L1, Step::L2}) {
    int nh = h + step_delta(s);
    if (nh < 0 || nh > n - j) continue;
    int xi_max = h;
    int xip_max = s == Step::U ? h + 1 : s == Step::D ? h - 1 : h;
    d.path.steps.push_back(s);
    for (int xi = 0; xi <= xi_max; ++xi) {
      for (int xip = 0; xip <= xip_max; ++xip) {
        d.xi.push_back(xi);
        d.xi_prime.push_back(xip);
        extend_diagrams(n, j + 1, nh, d, out);
        d.xi.pop_back();
        d.xi_prime.pop_back();
      }
    }
    d.path.steps.pop_back();
  }
}

}  // namespace

std::vector<PathDiagram> enumerate_diagrams(int n, std::uint64_t budget) {
  if (n < 0) throw std::domain_error("diagram length must be nonnegative");
  // Diagram counts are median Genocchi numbers; gate on that growth.
  std::uint64_t estimate = 1;
  for (int i = 0; i < n; ++i) {
    estimate *= 4 * (i + 1) * (i + 1);
    if (estimate > budget)
      throw BudgetError("diagram enumeration for n = " + std::to_string(n) +
                        " exceeds budget " + std::to_string(budget));
  }
  std::vector<PathDiagram> out;
  PathDiagram d;
  extend_diagrams(n, 1, 0, d, out);
  return out;
}

PathDiagram phi(const Permutation& sigma) {
  auto [ws, sf] = signature_of(sigma);  // rejects sigma outside X_{2n}
  StatVector st = compute_stats(sigma);
  PathDiagram d;
  for (int j = 1; j <= ws.n; ++j) {
    bool odd_in = ws.S.count(2 * j - 1) > 0;
    bool even_in = ws.S.count(2 * j) > 0;
    Step s = odd_in ? (even_in ? Step::L2 : Step::U)
                    : (even_in ? Step::D : Step::L1);
    d.path.steps.push_back(s);
    d.xi.push_back(st.r_desc[2 * j - 1]);
    d.xi_prime.push_back(st.r_desc[2 * j]);
  }
  if (!d.is_legal())
    throw std::logic_error("phi produced an illegal diagram for " +
                           sigma.to_string());
  return d;
}

namespace {

// Words with slots, used by the inverse construction. Values are positive;
// kSlot marks an open slot.
constexpr int kSlot = 0;

// Replaces the k-th slot counted from the right (1-based) by `repl`.
void replace_slot(std::vector<int>& word, int k,
                  const std::vector<int>& repl) {
  for (int i = static_cast<int>(word.size()) - 1; i >= 0; --i) {
    if (word[i] != kSlot) continue;
    if (--k == 0) {
      std::vector<int> next;
      next.reserve(word.size() + repl.size() - 1);
      next.insert(next.end(), word.begin(), word.begin() + i);
      next.insert(next.end(), repl.begin(), repl.end());
      next.insert(next.end(), word.begin() + i + 1, word.end());
      word = std::move(next);
      return;
    }
  }
  throw std::logic_error("slot index out of range in phi_inverse");
}

}  // namespace

Permutation phi_inverse(const PathDiagram& d) {
  if (!d.is_legal())
    throw std::domain_error("phi_inverse requires a legal path diagram");
  std::vector<int> word = {kSlot};
  for (int j = 1; j <= d.length(); ++j) {
    const int lo = 2 * j - 1, hi = 2 * j;
    const int xi = d.xi[j - 1], xip = d.xi_prime[j - 1];
    switch (d.path.steps[j - 1]) {
      case Step::U:
        replace_slot(word, xi + 1, {kSlot, lo, kSlot});
        replace_slot(word, xip + 1, {hi, kSlot});
        break;
      case Step::D:
        replace_slot(word, xi + 1, {lo, kSlot});
        replace_slot(word, xip + 2, {hi});
        break;
      case Step::L1:
        replace_slot(word, xi + 1, {lo, kSlot});
        replace_slot(word, xip + 1, {hi, kSlot});
        break;
      case Step::L2:
        replace_slot(word, xi + 1, {kSlot, lo, kSlot});
        replace_slot(word, xip + 2, {hi});
        break;
    }
  }
  // Exactly one slot remains; drop it.
  std::vector<int> out;
  out.reserve(word.size() - 1);
  int slots = 0;
  for (int v : word) {
    if (v == kSlot)
      ++slots;
    else
      out.push_back(v);
  }
  if (slots != 1)
    throw std::logic_error("phi_inverse ended with " + std::to_string(slots) +
                           " slots");
  return Permutation(std::move(out));
}

PathDiagram psi(const Permutation& sigma) {
  int m = sigma.size();
  if (m % 2 == 0 || !is_member(Family::Ystar, sigma))
    throw std::domain_error("psi requires a member of Ystar, got " +
                            sigma.to_string());
  StatVector st = compute_stats(sigma);
  PathDiagram d;
  const int n = (m - 1) / 2;
  for (int j = 1; j <= n; ++j) {
    PosClass c = st.cls[sigma.position_of(2 * j - 1)];
    Step s = c == PosClass::Valley ? Step::U
             : c == PosClass::Peak ? Step::D
             : c == PosClass::DoubleAscent ? Step::L1
                                           : Step::L2;
    d.path.steps.push_back(s);
    d.xi.push_back(st.l_desc[2 * j - 1]);
    d.xi_prime.push_back(st.l_desc[2 * j]);
  }
  if (!d.is_legal())
    throw std::logic_error("psi produced an illegal diagram for " +
                           sigma.to_string());
  return d;
}

}  // namespace genocchi
