#pragma once

#include "genocchi/multipoly.hpp"

namespace genocchi {

/// Generalized (p,q)-analogue of n with boundary weights x and y:
///   [x,n,y] = x*p^(n-1) + sum_{i=1..n-2} p^(n-1-i) q^i + y*q^(n-1),
/// with [x,1,y] = x*y. The variable pair defaults to (p,q); passing (q,p)
/// yields the swapped-order bracket [.,.,.]_{q,p}.
MultiPoly pq_bracket(const MultiPoly& x, int n, const MultiPoly& y,
                     Var pv = Var::p, Var qv = Var::q);

/// Two-argument bracket [x,n] == [x,n,1].
MultiPoly pq_bracket(const MultiPoly& x, int n, Var pv = Var::p,
                     Var qv = Var::q);

/// [n]_{p,q} = p^(n-1) + p^(n-2) q + ... + q^(n-1).
MultiPoly pq_int(int n, Var pv = Var::p, Var qv = Var::q);

/// (p,q)-binomial coefficient, computed by exact polynomial division.
MultiPoly pq_binomial(int n, int k);

}  // namespace genocchi
