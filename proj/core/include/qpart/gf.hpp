#pragma once

#include <utility>

#include "qpart/series.hpp"

namespace qpart {

// Generating functions for the restricted families and the classical
// identities they refine. Each builder returns a series truncated at
// q-order N whose coefficient of x^k y^l q^n (etc.) is the corresponding
// family count; the *_sides builders return both sides of an identity for
// coefficient comparison.

// sum_m prod_{i=1..m}(x + y q^i) * q^{m(m+1)/2} / (q)_m.
// Coefficient of x^k y^l q^n is |L_1(n,k,l)|.
TruncatedSeries gf_L1_rhs(int order);

// sum_{k,l} x^k y^l q^{C(k+l+1,2)+C(l+1,2)} / ((q)_k (q)_l).
// Coefficient of x^k y^l q^n is |A(n,k,l)|.
TruncatedSeries gf_A_rhs(int order);

// Refinement carrying the z marker for j:
// sum_{k,l} (-zq;q)_l x^k y^l q^{C(k+l+1,2)+C(l+1,2)} / ((q)_k (q^2;q^2)_l).
// Coefficient of x^k y^l z^j q^n is |A(n,k,l,j)|.
TruncatedSeries gf_A_refined_rhs(int order);

// sum_m prod_{i=1..m}(x + y q^i) * q^{m^2} / (q)_m.
// Coefficient of x^k y^l q^n is |L_2(n,k,l)| = |B(n,k,l)|.
TruncatedSeries gf_L2_rhs(int order);

// Lebesgue: sum_n (-zq;q)_n q^{n(n+1)/2} / (q)_n  vs  (-q)_inf (-zq^2;q^2)_inf.
std::pair<TruncatedSeries, TruncatedSeries> lebesgue_sides(int order);

// Sylvester: (-aq)_inf  vs
// 1 + sum_{k>=1} a^k q^{(3k^2-k)/2} (-aq)_{k-1} (1 + a q^{2k}) / (q)_k.
std::pair<TruncatedSeries, TruncatedSeries> sylvester_sides(int order);

// q-binomial theorem at t-degree cap T:
// sum_n (a)_n t^n / (q)_n  vs  (at)_inf / (t)_inf.
std::pair<TruncatedSeries, TruncatedSeries> qbinomial_sides(int order, int t_order);

} // namespace qpart
