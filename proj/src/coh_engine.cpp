#include "coh_engine.hpp"

#include <algorithm>

namespace superbbw {

namespace {

bool is_zero_weight(const Weight& lam) {
  return std::all_of(lam.begin(), lam.end(), [](Int v) { return v == 0; });
}

Int q2_pairing(const Weight& sigma) { return sigma[0] - sigma[1]; }

void require_q2(const RootDatum& d) {
  if (d.type.kind != Kind::Q || d.rank() != 2)
    fail(ErrorCode::Unsupported, "exact analysis is implemented for type q rank 2 only");
}

}  // namespace

std::map<Weight, Int> gamma_multiset(const RootDatum& d, const ExteriorWeights& ext,
                                     const Weight& lam, const WeylElement& w) {
  FModule fm = f_module(d, lam);
  WeylElement wi = inverse(w);
  std::map<Weight, Int> out;
  for (const auto& [mu, m1] : fm.ch.terms())
    for (const auto& [sig, m2] : ext.total.terms()) out[add(mu, act(wi, sig))] += m1 * m2;
  return out;
}

Character kempf_character(const RootDatum& d, const ExteriorWeights& ext, const Weight& lam) {
  if (!is_very_dominant_def(d, ext, lam))
    fail(ErrorCode::Domain, "degree-zero formula needs a very dominant weight");
  Character ch;
  for (const auto& [gam, m] : gamma_multiset(d, ext, lam, identity_element(d))) {
    if (!is_dominant(d, gam))
      fail(ErrorCode::Internal, "very dominant weight produced a non-dominant term");
    ch += weyl_character(d, gam).scaled(m);
  }
  return ch;
}

std::optional<GenericResult> generic_cohomology(const RootDatum& d, const ExteriorWeights& ext,
                                                const Weight& mu) {
  std::optional<GenericWitness> wit = is_generic(d, ext, mu);
  if (!wit) return std::nullopt;
  GenericResult r;
  r.witness = *wit;
  r.degree = length(wit->w);
  // Induce from the f module of mu itself and pull every term back into the
  // closed dominant cone, where euler_chi contributes the plain Weyl
  // character, or nothing when the term is singular. The multiplicities come
  // from L_f(mu), not L_f(lambda): the two modules can differ in dimension
  // when the dot action changes the number of zero entries, and only the
  // former matches the Euler character identity.
  WeylElement wi = inverse(wit->w);
  Character prod = f_module(d, mu).ch * ext.total;
  for (const auto& [nu, m] : prod.terms()) r.ch += euler_chi(d, dot_act(d, wi, nu)).scaled(m);
  return r;
}

Character euler_character(const RootDatum& d, const ExteriorWeights& ext, const Weight& lam) {
  Character ch;
  Character prod = f_module(d, lam).ch * ext.total;
  for (const auto& [nu, m] : prod.terms()) ch += euler_chi(d, nu).scaled(m);
  return ch;
}

CohomologyProfile cohomology_profile(const RootDatum& d, const ExteriorWeights& ext,
                                     const Weight& lam) {
  if (static_cast<int>(lam.size()) != d.dim)
    fail(ErrorCode::InvalidArgument, "weight has wrong length");
  CohomologyProfile p;
  p.lambda = lam;
  p.euler = euler_character(d, ext, lam);
  if (is_zero_weight(lam)) {
    // The cohomology of the zero weight is the exterior coinvariant picture:
    // a trivial module in each degree, counted by the Poincare polynomial.
    LaurentPoly pp = poincare_polynomial(d);
    for (const auto& [deg, c] : pp.coeffs())
      p.degrees.push_back({deg, Character::monomial(Weight(d.dim, 0), c)});
    p.provenance = "zero-weight";
  } else if (is_very_dominant_def(d, ext, lam)) {
    p.degrees.push_back({0, kempf_character(d, ext, lam)});
    p.provenance = "kempf";
  } else if (std::optional<GenericResult> g = generic_cohomology(d, ext, lam)) {
    p.degrees.push_back({g->degree, g->ch});
    p.provenance = "generic-bbw(w=" + word_str(d, g->witness.w) + ")";
  } else {
    p.provenance = "euler-only";
  }
  return p;
}

Character q2_simple_character(const RootDatum& d, const Weight& sigma) {
  require_q2(d);
  if (static_cast<int>(sigma.size()) != 2)
    fail(ErrorCode::InvalidArgument, "weight has wrong length");
  if (!is_dominant(d, sigma)) fail(ErrorCode::Domain, "simple characters are indexed by dominant weights");
  if (is_zero_weight(sigma)) return Character::monomial(sigma);
  Character ch = weyl_character(d, sigma).scaled(2);
  if (sigma[0] + sigma[1] == 0) return ch;  // atypical: the lower term drops
  // The lower term sits at sigma - alpha; it only exists when that weight
  // is still dominant, which excludes the wall and the adjacent line.
  Weight low = sub(sigma, Weight{1, -1});
  if (is_dominant(d, low)) ch += weyl_character(d, low).scaled(2);
  return ch;
}

Q2Analysis q2_h0_analysis(const RootDatum& d, const ExteriorWeights& ext, const Weight& sigma) {
  require_q2(d);
  if (static_cast<int>(sigma.size()) != 2)
    fail(ErrorCode::InvalidArgument, "weight has wrong length");
  if (!is_dominant(d, sigma))
    fail(ErrorCode::Domain, "degree-zero analysis needs a dominant weight");

  Q2Analysis a;
  a.sigma = sigma;
  a.edge = q2_pairing(sigma) <= 2;
  if (is_zero_weight(sigma)) {
    a.h0 = Character::monomial(sigma);
    a.composition = {{sigma, 1}};
    a.socle = sigma;
    a.notes.push_back("zero weight: degree zero is the trivial module");
    return a;
  }
  if (q2_pairing(sigma) == 0)
    fail(ErrorCode::Domain,
         "weight on the reflection wall: the exact degree-zero character is not determined here");

  std::optional<GenericResult> g = generic_cohomology(d, ext, sigma);
  if (!g || g->degree != 0)
    fail(ErrorCode::Internal, "dominant regular weight failed to concentrate in degree zero");
  a.h0 = g->ch;

  // Peel simple characters greedily from the top. The leading coefficient of
  // a simple character is 1 at the zero weight and 2 otherwise.
  Character rem = a.h0;
  int guard = 0;
  while (!rem.is_zero()) {
    if (++guard > 1000) fail(ErrorCode::Internal, "composition peeling did not terminate");
    Weight top;
    bool have = false;
    for (const auto& [mu, m] : rem.terms()) {
      if (!have || q2_pairing(mu) > q2_pairing(top) ||
          (q2_pairing(mu) == q2_pairing(top) && mu > top)) {
        top = mu;
        have = true;
      }
    }
    if (!is_dominant(d, top))
      fail(ErrorCode::Internal, "composition peeling left a non-dominant leading term");
    Int lead = is_zero_weight(top) ? 1 : 2;
    Int k = rem.mult(top);
    if (k % lead != 0 || k <= 0)
      fail(ErrorCode::Internal, "composition peeling hit a non-divisible leading coefficient");
    k /= lead;
    rem -= q2_simple_character(d, top).scaled(k);
    a.composition.push_back({top, k});
  }

  a.socle = sigma;
  if (a.composition.empty() || !(a.composition.front().first == sigma) ||
      a.composition.front().second != 1)
    fail(ErrorCode::Internal, "peeling did not start at the highest weight");
  if (a.composition.size() == 1) {
    a.notes.push_back("irreducible: degree zero is the simple module of this highest weight");
  } else {
    a.notes.push_back("socle is the simple module of the highest weight itself");
  }
  Int len = 0;
  for (const auto& [mu, k] : a.composition) len += k;
  if (len > static_cast<Int>(a.composition.size()))
    a.notes.push_back("a factor repeats, so the layer order above the socle is not determined here");
  if (a.edge) a.notes.push_back("within distance 2 of the reflection wall: the delicate range");
  return a;
}

Character q2_h1_character(const RootDatum& d, const ExteriorWeights& ext, const Weight& sigma) {
  require_q2(d);
  if (static_cast<int>(sigma.size()) != 2)
    fail(ErrorCode::InvalidArgument, "weight has wrong length");
  Weight ns = neg(sigma);
  if (!is_dominant(d, ns)) return {};
  if (is_zero_weight(ns)) return Character::monomial(ns);
  if (q2_pairing(ns) == 0)
    fail(ErrorCode::Domain,
         "weight on the reflection wall: the exact degree-one character is not determined here");
  return q2_h0_analysis(d, ext, ns).h0.dual();
}

SocleReport h1_socle_report(const RootDatum& d, const ExteriorWeights& ext, const Weight& lam) {
  if (d.type.kind != Kind::Q)
    fail(ErrorCode::Unsupported, "socle analysis is implemented for type q only");
  if (static_cast<int>(lam.size()) != d.dim)
    fail(ErrorCode::InvalidArgument, "weight has wrong length");

  SocleReport r;
  if (is_very_dominant_def(d, ext, lam)) {
    r.kind = SocleKind::Zero;
    r.note = "very dominant weight: cohomology is concentrated in degree zero";
    return r;
  }
  if (std::optional<GenericWitness> wit = is_generic(d, ext, lam)) {
    int deg = length(wit->w);
    if (deg != 1) {
      r.kind = SocleKind::Zero;
      r.note = "generic weight concentrated in degree " + std::to_string(deg);
      return r;
    }
    r.kind = SocleKind::Simple;
    if (d.rank() == 2) {
      // Degree one is the dual of degree zero at the negative weight, so its
      // socle is the dual of that module's head.
      Q2Analysis a = q2_h0_analysis(d, ext, neg(lam));
      if (a.composition.size() == 1 && a.composition[0].second == 1) {
        r.highest = Weight{lam[1], lam[0]};
        r.note = "degree one is itself simple";
      } else if (a.composition.size() == 2 && a.composition[0].second == 1 &&
                 a.composition[1].second == 1) {
        r.highest = Weight{lam[1] - 1, lam[0] + 1};
        r.note = "socle read off from a length-two dual";
      } else {
        r.note = "socle is simple, but a repeated factor hides its highest weight";
      }
    } else {
      r.note = "socle is simple; its highest weight is not computed beyond rank 2";
    }
    return r;
  }
  if (is_zero_weight(lam)) {
    Int k = poincare_polynomial(d).coeff(1);
    if (k == 1) {
      r.kind = SocleKind::Simple;
      r.highest = Weight(d.dim, 0);
      r.note = "degree one of the zero weight is the trivial module";
    } else {
      r.kind = SocleKind::NotDetermined;
      r.note = "degree one of the zero weight is a sum of " + std::to_string(k) +
               " trivial modules, so the socle is not simple";
    }
    return r;
  }
  for (const auto& alpha : d.simple_roots)
    if (pairing(lam, alpha) < 0) {
      r.kind = SocleKind::Simple;
      r.note = "a negative simple pairing forces a simple socle in degree one";
      return r;
    }
  r.kind = SocleKind::NotDetermined;
  r.note = "weight outside the regimes settled here";
  return r;
}

}  // namespace superbbw
