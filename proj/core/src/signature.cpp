#include "genocchi/signature.hpp"

#include <stdexcept>

#include "genocchi/families.hpp"

namespace genocchi {

bool WeakSignature::is_valid() const {
  int odd = 0, even = 0;
  for (int i = 1; i <= 2 * n; ++i) {
    if (S.count(i)) {
      if (i % 2 == 1)
        ++odd;
      else
        ++even;
    }
    if (odd < even) return false;
  }
  return odd == even;
}

SignatureFunction signature_function(const WeakSignature& ws) {
  SignatureFunction sf;
  sf.values.assign(2 * ws.n + 1, 0);
  int odd_below = 0, even_below = 0;
  for (int x = 1; x <= 2 * ws.n; ++x) {
    bool in_S = ws.S.count(x) > 0;
    int v = odd_below - even_below;
    if ((in_S && x % 2 == 1) || !in_S) v += 1;
    sf.values[x] = v;
    if (in_S) {
      if (x % 2 == 1)
        ++odd_below;
      else
        ++even_below;
    }
  }
  return sf;
}

std::pair<WeakSignature, SignatureFunction> signature_of(
    const Permutation& sigma) {
  if (sigma.size() % 2 != 0)
    throw std::domain_error("signature_of requires even length");
  if (!is_member(Family::X, sigma))
    throw std::domain_error(
        "signature_of requires an even-odd descent permutation, got " +
        sigma.to_string());

  WeakSignature ws;
  ws.n = sigma.size() / 2;
  for (int v : descent_tops(sigma)) ws.S.insert(v);
  for (int v : descent_bottoms(sigma)) ws.S.insert(v);

  SignatureFunction sf = signature_function(ws);

  StatVector st = compute_stats(sigma);
  for (int i = 1; i <= sigma.size(); ++i) {
    if (sf.values[i] != st.l_desc[i] + st.r_desc[i] + 1)
      throw std::logic_error("signature identity s = l + r + 1 failed at i=" +
                             std::to_string(i) + " for " + sigma.to_string());
  }
  return {std::move(ws), std::move(sf)};
}

}  // namespace genocchi
