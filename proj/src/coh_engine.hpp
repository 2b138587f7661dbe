#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "regions.hpp"

namespace superbbw {

// The multiset Gamma(lam, w): weights w^{-1} . (mu + sigma) with mu running
// over the weights of L_f(w . lam) and sigma over the exterior weights,
// multiplicities multiplied. These index the even-group factors feeding the
// cohomology of the weight w . lam in degree l(w).
std::map<Weight, Int> gamma_multiset(const RootDatum& d, const ExteriorWeights& ext,
                                     const Weight& lam, const WeylElement& w);

// Degree-zero cohomology of a very dominant weight: every term of
// Gamma(lam, 1) is already dominant and contributes its irreducible
// character. Domain error when lam is not very dominant.
Character kempf_character(const RootDatum& d, const ExteriorWeights& ext, const Weight& lam);

// Exact cohomology of a generic weight: everything sits in degree l(w) for
// the witness w, and the character is the sum of the surviving even-group
// terms. Empty when mu is not generic.
struct GenericResult {
  GenericWitness witness;
  int degree = 0;
  Character ch;
};
std::optional<GenericResult> generic_cohomology(const RootDatum& d, const ExteriorWeights& ext,
                                                const Weight& mu);

// Alternating sum over all degrees, valid for every weight.
Character euler_character(const RootDatum& d, const ExteriorWeights& ext, const Weight& lam);

// Everything this library can say about the cohomology of one weight.
// degrees lists the exact nonvanishing degrees when a regime applies
// (provenance "zero-weight", "kempf" or "generic-bbw(w=...)"); otherwise it
// is empty and only the Euler characteristic is reported ("euler-only").
struct DegreeChar {
  int n = 0;
  Character ch;
};
struct CohomologyProfile {
  Weight lambda;
  std::string provenance;
  std::vector<DegreeChar> degrees;
  Character euler;
};
CohomologyProfile cohomology_profile(const RootDatum& d, const ExteriorWeights& ext,
                                     const Weight& lam);

// ---- Exact results special to Q(2) ----

// Character of the simple Q(2) module with dominant highest weight sigma.
Character q2_simple_character(const RootDatum& d, const Weight& sigma);

// Degree-zero cohomology of a dominant Q(2) weight together with its
// composition factors, peeled greedily from the top. Domain error for the
// undetermined wall sigma_1 = sigma_2 != 0.
struct Q2Analysis {
  Weight sigma;
  Character h0;
  std::vector<std::pair<Weight, Int>> composition;  // in peel order, socle first
  Weight socle;
  bool edge = false;  // within distance 2 of the reflection wall
  std::vector<std::string> notes;
};
Q2Analysis q2_h0_analysis(const RootDatum& d, const ExteriorWeights& ext, const Weight& sigma);

// Degree-one cohomology of any Q(2) weight, as the dual of the degree-zero
// cohomology of its negative. Domain error on the undetermined wall.
Character q2_h1_character(const RootDatum& d, const ExteriorWeights& ext, const Weight& sigma);

// ---- Socle of the degree-one cohomology, type Q ----

enum class SocleKind { Zero, Simple, NotDetermined };
struct SocleReport {
  SocleKind kind = SocleKind::NotDetermined;
  std::optional<Weight> highest;  // highest weight of the simple socle when pinned down
  std::string note;
};
SocleReport h1_socle_report(const RootDatum& d, const ExteriorWeights& ext, const Weight& lam);

}  // namespace superbbw
