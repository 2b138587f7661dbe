#include "super_comb.hpp"

namespace superbbw {

ExteriorWeights exterior_weights(const RootDatum& d) {
  const int n_odd = static_cast<int>(d.odd_positive.size());
  if (n_odd > 20)
    fail(ErrorCode::Unsupported, "odd root count exceeds the supported subset cap");

  ExteriorWeights ext;
  ext.n_odd = n_odd;
  ext.by_degree.assign(n_odd + 1, Character{});
  ext.by_degree[0] = Character::monomial(Weight(d.dim, 0));
  // Multiply out prod_i (1 + e^{-beta_i}) keeping the degree grading. This
  // produces exactly the subset sums of the negative odd roots.
  for (int i = 0; i < n_odd; ++i) {
    Character step = Character::monomial(neg(d.odd_positive[i]));
    for (int k = i; k >= 0; --k) ext.by_degree[k + 1] += ext.by_degree[k] * step;
  }
  for (const auto& c : ext.by_degree) ext.total += c;
  return ext;
}

bool is_distinct_negative_sum(const ExteriorWeights& ext, const Weight& mu) {
  return ext.total.mult(mu) > 0;
}

FModule f_module(const RootDatum& d, const Weight& lam) {
  if (static_cast<int>(lam.size()) != d.dim)
    fail(ErrorCode::InvalidArgument, "weight has wrong length");
  FModule fm;
  fm.highest = lam;
  if (d.type.kind == Kind::Q) {
    int l = 0;
    for (Int v : lam)
      if (v != 0) ++l;
    fm.dim = Int{1} << ((l + 1) / 2);
    fm.ch = Character::monomial(lam, fm.dim);
    return fm;
  }
  const int n = d.rank();
  fm.ch = Character::monomial(Weight(d.dim, 0));
  int typical = 0;
  for (int i = 0; i < n; ++i) {
    Weight hi(d.dim, 0), lo(d.dim, 0);
    hi[i] = lam[i];
    hi[n + i] = lam[n + i];
    Character factor = Character::monomial(hi);
    if (lam[i] + lam[n + i] != 0) {
      ++typical;
      lo[i] = lam[i] - 1;
      lo[n + i] = lam[n + i] + 1;
      factor += Character::monomial(lo);
    }
    fm.ch = fm.ch * factor;
  }
  fm.dim = Int{1} << typical;
  return fm;
}

LaurentPoly poincare_polynomial(const RootDatum& d) {
  const int step = d.type.kind == Kind::Q ? 1 : 2;
  LaurentPoly p = LaurentPoly::term(0, 1);
  for (int k = 2; k <= d.rank(); ++k) {
    LaurentPoly factor;
    for (int j = 0; j < k; ++j) factor.add_term(j * step, 1);
    p = p * factor;
  }
  return p;
}

}  // namespace superbbw
