#include "regions.hpp"

#include <algorithm>

namespace superbbw {

RegionBounds very_dominant_bounds(const RootDatum& d, const ExteriorWeights& ext) {
  if (d.type.kind != Kind::Q)
    fail(ErrorCode::Domain,
         "no decoupled bounds for gl; the very dominant test depends on the f module "
         "of each weight");
  RegionBounds b;
  b.min_pairing.assign(d.n_simple(), 0);
  for (int i = 0; i < d.n_simple(); ++i) {
    Int best = 0;
    for (const auto& [sig, m] : ext.total.terms())
      best = std::max(best, -pairing(sig, d.simple_roots[i]));
    b.min_pairing[i] = best;
  }
  return b;
}

bool is_very_dominant(const RootDatum& d, const RegionBounds& b, const Weight& lam) {
  for (int i = 0; i < d.n_simple(); ++i)
    if (pairing(lam, d.simple_roots[i]) < b.min_pairing[i]) return false;
  return true;
}

bool is_very_dominant_def(const RootDatum& d, const ExteriorWeights& ext, const Weight& lam) {
  FModule fm = f_module(d, lam);
  for (const auto& [mu, m1] : fm.ch.terms())
    for (const auto& [sig, m2] : ext.total.terms())
      if (!is_dominant(d, add(mu, sig))) return false;
  return true;
}

RegionBounds omega_w_bounds(const RootDatum& d, const ExteriorWeights& ext,
                            const WeylElement& w) {
  if (d.type.kind != Kind::Q)
    fail(ErrorCode::Domain,
         "generic chamber bounds need a weight-independent multiset; type Q only");
  WeylElement wi = inverse(w);
  RegionBounds b;
  b.min_pairing.assign(d.n_simple(), 0);
  for (int i = 0; i < d.n_simple(); ++i) {
    Int best = 0;
    for (const auto& [sig, m] : ext.total.terms())
      best = std::max(best, -pairing(act(wi, sig), d.simple_roots[i]));
    b.min_pairing[i] = best - 1;
  }
  return b;
}

bool in_omega_w_bounds(const RootDatum& d, const RegionBounds& b, const Weight& lam) {
  for (int i = 0; i < d.n_simple(); ++i)
    if (pairing(lam, d.simple_roots[i]) < b.min_pairing[i]) return false;
  return true;
}

bool in_omega_w(const RootDatum& d, const ExteriorWeights& ext, const WeylElement& w,
                const Weight& lam) {
  WeylElement wi = inverse(w);
  FModule fm = f_module(d, lam);
  for (const auto& [mu, m1] : fm.ch.terms())
    for (const auto& [sig, m2] : ext.total.terms()) {
      Weight y = add(add(mu, act(wi, sig)), d.rho);
      for (int i = 0; i < d.n_simple(); ++i)
        if (pairing(y, d.simple_roots[i]) < 0) return false;
    }
  return true;
}

std::optional<GenericWitness> is_generic(const RootDatum& d, const ExteriorWeights& ext,
                                         const Weight& mu) {
  std::vector<WeylElement> elts = weyl_elements(d);
  std::stable_sort(elts.begin(), elts.end(),
                   [](const WeylElement& a, const WeylElement& b) {
                     return length(a) < length(b);
                   });
  for (const auto& w : elts) {
    Weight lam = dot_act(d, inverse(w), mu);
    if (in_omega_w(d, ext, w, lam)) return GenericWitness{w, lam};
  }
  return std::nullopt;
}

WeightClassification classify_weight(const RootDatum& d, const ExteriorWeights& ext,
                                     const Weight& lam) {
  WeightClassification c;
  c.dominant = is_dominant(d, lam);
  c.very_dominant = is_very_dominant_def(d, ext, lam);
  c.witness = is_generic(d, ext, lam);
  return c;
}

}  // namespace superbbw
