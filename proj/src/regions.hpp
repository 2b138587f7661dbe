#pragma once

#include <optional>
#include <vector>

#include "root_data.hpp"
#include "super_comb.hpp"
#include "types.hpp"

namespace superbbw {

// Half-space description of a region: one lower bound per simple root,
// applied to <lam, alpha_i^vee> in the region's own coordinates. For
// omega(w) those are pullback coordinates, i.e. the generic weight is
// mu = w . lam and the bounds constrain lam.
struct RegionBounds {
  std::vector<Int> min_pairing;
};

// Very dominant weights: every weight of L_f(lam) tensor the exterior
// algebra is dominant. In type Q the f module contributes the single
// weight lam, so the test decouples into per-root bounds; for gl(n|n)
// it depends on the f module of each weight and very_dominant_bounds
// reports a Domain error.
RegionBounds very_dominant_bounds(const RootDatum& d, const ExteriorWeights& ext);
bool is_very_dominant(const RootDatum& d, const RegionBounds& b, const Weight& lam);
// Definitional form, valid for both types.
bool is_very_dominant_def(const RootDatum& d, const ExteriorWeights& ext, const Weight& lam);

// Generic region omega(w) in pullback coordinates: lam qualifies when
// mu + w^{-1}(sigma) + rho pairs nonnegatively with every simple coroot,
// for every weight mu of L_f(lam) and every exterior weight sigma.
// Closed-form bounds again exist for type Q only.
RegionBounds omega_w_bounds(const RootDatum& d, const ExteriorWeights& ext,
                            const WeylElement& w);
bool in_omega_w_bounds(const RootDatum& d, const RegionBounds& b, const Weight& lam);
bool in_omega_w(const RootDatum& d, const ExteriorWeights& ext, const WeylElement& w,
                const Weight& lam);

// Search the Weyl group in length order for a w whose region contains the
// pullback lam = w^{-1} . mu. In type Q the translated regions w . omega(w)
// are the Weyl translates of omega(1), a subset of the open dominant cone,
// so at most one w qualifies and the order only breaks ties that cannot
// occur there.
struct GenericWitness {
  WeylElement w;
  Weight lambda;
};
std::optional<GenericWitness> is_generic(const RootDatum& d, const ExteriorWeights& ext,
                                         const Weight& mu);

// Membership summary for one weight.
struct WeightClassification {
  bool integral = true;       // every integral vector qualifies
  bool dominant = false;
  bool very_dominant = false;
  std::optional<GenericWitness> witness;
};
WeightClassification classify_weight(const RootDatum& d, const ExteriorWeights& ext,
                                     const Weight& lam);

}  // namespace superbbw
