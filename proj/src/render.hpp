#pragma once

#include <string>

#include "coh_engine.hpp"

namespace superbbw {

// All user-facing output lives here so the C API, the CLI and the tests
// agree on one format. Text renderers end with a newline; JSON renderers
// return a compact single line.

std::string datum_text(const RootDatum& d);
std::string datum_json(const RootDatum& d);

std::string character_str(const Character& c);
std::string poincare_text(const LaurentPoly& p);
std::string poincare_json(const LaurentPoly& p);

std::string region_bounds_text(const RootDatum& d, const std::string& kind,
                               const RegionBounds& b);
std::string region_bounds_json(const RootDatum& d, const std::string& kind,
                               const RegionBounds& b);

std::string classification_text(const RootDatum& d, const Weight& lam,
                                const WeightClassification& c);
std::string classification_json(const RootDatum& d, const Weight& lam,
                                const WeightClassification& c);

std::string profile_text(const RootDatum& d, const CohomologyProfile& p);
std::string profile_json(const RootDatum& d, const CohomologyProfile& p);

std::string euler_text(const RootDatum& d, const Character& c);
std::string euler_json(const RootDatum& d, const Weight& lam, const Character& c);

std::string q2_simple_text(const Weight& sigma, const Character& c);
std::string q2_simple_json(const Weight& sigma, const Character& c);
std::string q2_analysis_text(const Q2Analysis& a);
std::string q2_analysis_json(const Q2Analysis& a);
std::string q2_h1_text(const Weight& sigma, const Character& c);
std::string q2_h1_json(const Weight& sigma, const Character& c);

std::string socle_text(const SocleReport& r);
std::string socle_json(const Weight& lam, const SocleReport& r);

// Map of the generic region of q(3) over the slice lam(x, y) = (x+y, y, 0),
// x and y in [-box, box]: one rect per generic lattice point. Unsupported
// for any other type or rank.
std::string svg_generic(const RootDatum& d, const ExteriorWeights& ext, int box);

}  // namespace superbbw
