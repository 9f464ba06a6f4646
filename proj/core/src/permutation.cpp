#include "genocchi/permutation.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace genocchi {

Permutation::Permutation(std::vector<int> word) : w_(std::move(word)) {
  const int m = static_cast<int>(w_.size());
  pos_.assign(m, 0);
  std::vector<bool> seen(m, false);
  for (int i = 0; i < m; ++i) {
    int v = w_[i];
    if (v < 1 || v > m)
      throw std::domain_error("permutation value " + std::to_string(v) +
                              " at position " + std::to_string(i + 1) +
                              " outside 1.." + std::to_string(m));
    if (seen[v - 1])
      throw std::domain_error("duplicate value " + std::to_string(v) +
                              " in permutation word");
    seen[v - 1] = true;
    pos_[v - 1] = i + 1;
  }
}

Permutation Permutation::identity(int m) {
  std::vector<int> w(m);
  for (int i = 0; i < m; ++i) w[i] = i + 1;
  return Permutation(std::move(w));
}

Permutation Permutation::parse_one_line(const std::string& text) {
  std::string normalized = text;
  std::replace(normalized.begin(), normalized.end(), ',', ' ');
  std::istringstream is(normalized);
  std::vector<int> w;
  std::string tok;
  while (is >> tok) {
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      w.push_back(v);
    } catch (const std::exception&) {
      throw std::domain_error("cannot parse permutation token '" + tok + "'");
    }
  }
  if (w.empty()) throw std::domain_error("empty permutation word");
  return Permutation(std::move(w));
}

Permutation Permutation::parse_cycles(const std::string& text) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(')
      throw std::domain_error("expected '(' in cycle notation at offset " +
                              std::to_string(i));
    ++i;
    std::vector<int> cyc;
    std::string tok;
    for (; i < text.size() && text[i] != ')'; ++i) {
      char c = text[i];
      if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
        if (!tok.empty()) {
          cyc.push_back(std::stoi(tok));
          tok.clear();
        }
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        tok.push_back(c);
      } else {
        throw std::domain_error(std::string("unexpected character '") + c +
                                "' in cycle notation");
      }
    }
    if (i >= text.size()) throw std::domain_error("unterminated cycle");
    ++i;  // consume ')'
    if (!tok.empty()) cyc.push_back(std::stoi(tok));
    if (cyc.empty()) throw std::domain_error("empty cycle");
    cycles.push_back(std::move(cyc));
    skip_ws();
  }
  if (cycles.empty()) throw std::domain_error("no cycles given");

  int m = 0;
  for (const auto& cyc : cycles)
    for (int v : cyc) m = std::max(m, v);
  std::vector<int> w(m, 0);
  for (const auto& cyc : cycles) {
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      int from = cyc[k];
      int to = cyc[(k + 1) % cyc.size()];
      if (from < 1 || from > m) throw std::domain_error("cycle value out of range");
      if (w[from - 1] != 0)
        throw std::domain_error("value " + std::to_string(from) +
                                " appears in two cycles");
      w[from - 1] = to;
    }
  }
  for (int v = 1; v <= m; ++v) {
    if (w[v - 1] == 0)
      throw std::domain_error("value " + std::to_string(v) +
                              " missing from cycle notation");
  }
  return Permutation(std::move(w));
}

std::vector<std::vector<int>> Permutation::cycles() const {
  const int m = size();
  std::vector<bool> seen(m, false);
  std::vector<std::vector<int>> out;
  for (int start = 1; start <= m; ++start) {
    if (seen[start - 1]) continue;
    // Collect the cycle through `start`, then rotate it max-first.
    std::vector<int> cyc;
    int v = start;
    while (!seen[v - 1]) {
      seen[v - 1] = true;
      cyc.push_back(v);
      v = at(v);
    }
    auto mx = std::max_element(cyc.begin(), cyc.end());
    std::rotate(cyc.begin(), mx, cyc.end());
    out.push_back(std::move(cyc));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return x[0] < y[0]; });
  return out;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < size(); ++i) {
    if (i) os << " ";
    os << w_[i];
  }
  return os.str();
}

Permutation foata(const Permutation& sigma) {
  std::vector<int> word;
  word.reserve(sigma.size());
  for (const auto& cyc : sigma.cycles())
    word.insert(word.end(), cyc.begin(), cyc.end());
  return Permutation(std::move(word));
}

}  // namespace genocchi
