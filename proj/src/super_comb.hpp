#pragma once

#include <vector>

#include "char_ring.hpp"
#include "root_data.hpp"
#include "types.hpp"

namespace superbbw {

// Weight multiset of the exterior algebra on the span of the negative odd
// roots, graded by exterior degree. A weight appears once per subset of the
// negative odd roots summing to it.
struct ExteriorWeights {
  int n_odd = 0;
  std::vector<Character> by_degree;  // index = exterior degree, size n_odd+1
  Character total;
};

// Fails with Unsupported when the odd root count exceeds the 2^20 subset cap.
ExteriorWeights exterior_weights(const RootDatum& d);

// True when mu is a sum of pairwise distinct negative odd roots (the empty
// sum counts, so mu = 0 qualifies).
bool is_distinct_negative_sum(const ExteriorWeights& ext, const Weight& mu);

// Simple module over the detecting subalgebra with highest weight lam.
//
// Type Q: a Clifford module over n copies of q(1); its character is a single
// weight with multiplicity 2^ceil(l/2), l the number of nonzero entries.
// Type GL(n|n): a tensor of n modules over gl(1|1), the i-th in the
// coordinate pair (e_i, d_i) with highest weight (a, b) = (lam_i, lam_{n+i});
// a typical pair (a + b != 0) contributes weights (a, b) and (a-1, b+1),
// an atypical pair only (a, b).
struct FModule {
  Weight highest;
  Character ch;
  Int dim = 0;
};
FModule f_module(const RootDatum& d, const Weight& lam);

// Generating function of the cohomology degrees of the generic region:
// the Gaussian factorial [n]_s! with s = t for type Q and s = t^2 for
// type GL(n|n).
LaurentPoly poincare_polynomial(const RootDatum& d);

}  // namespace superbbw
