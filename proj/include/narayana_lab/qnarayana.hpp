#pragma once

#include "narayana_lab/ring.hpp"

namespace nlab {

// Sum of t^level q^area over S_k by explicit enumeration.
LaurentPoly narayana_enum(int k);

// N_k = t N_(k-1) + sum_j q^(2j+1) N_j N_(k-j-1), N_0 = 1. Memoized; safe to
// call from several threads.
LaurentPoly narayana_rec(int k);

// N_m := t^(2m+1) N_(-m-1)(t, 1/q) for m <= -1, the value making N_m the
// moment f_(m+1) of the q-Narayana system with kappa = 1.
LaurentPoly narayana_neg(int m);

// N_k for any integer index: narayana_rec for k >= 0, narayana_neg below.
LaurentPoly narayana(int k);

// L_k(t) = sum_(j=1..k) (1/k) C(k,j) C(k,j-1) (1+t)^j, with L_0 = 1.
LaurentPoly classic_narayana(int k);

// A_k(q): sum of q^area over S_k, enumerated independently of narayana_enum.
LaurentPoly area_poly(int k);

}  // namespace nlab
