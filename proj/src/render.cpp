#include "render.hpp"

#include <sstream>

#include "json.hpp"

namespace superbbw {

namespace {

using json = nlohmann::ordered_json;

const char* kind_name(const RootDatum& d) { return d.type.kind == Kind::Q ? "q" : "gl"; }

json weight_json(const Weight& w) { return json(w); }

std::string join_roots(const RootDatum& d, const std::vector<Weight>& roots) {
  std::string out;
  for (const auto& r : roots) {
    if (!out.empty()) out += ", ";
    out += root_str(d, r);
  }
  return out.empty() ? "(none)" : out;
}

json character_json_obj(const Character& c) {
  json terms = json::array();
  for (const auto& [mu, m] : c.terms()) terms.push_back({{"wt", mu}, {"mult", m}});
  return json{{"terms", terms}, {"dim", c.virtual_dim()}};
}

json poly_json_obj(const LaurentPoly& p) {
  json coeffs = json::array();
  for (const auto& [deg, c] : p.coeffs()) coeffs.push_back({{"deg", deg}, {"coeff", c}});
  return json{{"poly", p.str()}, {"coeffs", coeffs}};
}

std::string simple_str(const Weight& mu, Int k) {
  std::string s = "L" + weight_str(mu);
  return k == 1 ? s : std::to_string(k) + " " + s;
}

std::string socle_kind_str(SocleKind k) {
  switch (k) {
    case SocleKind::Zero: return "zero";
    case SocleKind::Simple: return "simple";
    default: return "not-determined";
  }
}

}  // namespace

std::string character_str(const Character& c) {
  if (c.is_zero()) return "0";
  std::string out;
  for (const auto& [mu, m] : c.terms()) {
    Int a = m;
    if (out.empty()) {
      if (a < 0) {
        out += "-";
        a = -a;
      }
    } else {
      out += a < 0 ? " - " : " + ";
      if (a < 0) a = -a;
    }
    out += std::to_string(a) + " e" + weight_str(mu);
  }
  return out;
}

std::string datum_text(const RootDatum& d) {
  std::ostringstream os;
  os << "type: " << kind_name(d) << "\n";
  os << "rank: " << d.rank() << "\n";
  os << "dim: " << d.dim << "\n";
  os << "rho: " << weight_str(d.rho) << "\n";
  os << "simple roots: " << join_roots(d, d.simple_roots) << "\n";
  os << "even positive: " << join_roots(d, d.even_positive) << "\n";
  os << "odd positive: " << join_roots(d, d.odd_positive) << "\n";
  os << "weyl order: " << weyl_elements(d).size() << "\n";
  return os.str();
}

std::string datum_json(const RootDatum& d) {
  json j;
  j["type"] = kind_name(d);
  j["rank"] = d.rank();
  j["dim"] = d.dim;
  j["rho"] = weight_json(d.rho);
  auto roots = [&](const std::vector<Weight>& rs) {
    json a = json::array();
    for (const auto& r : rs) a.push_back(root_str(d, r));
    return a;
  };
  j["simple_roots"] = roots(d.simple_roots);
  j["even_positive"] = roots(d.even_positive);
  j["odd_positive"] = roots(d.odd_positive);
  j["weyl_order"] = weyl_elements(d).size();
  return j.dump() + "\n";
}

std::string poincare_text(const LaurentPoly& p) { return p.str() + "\n"; }

std::string poincare_json(const LaurentPoly& p) { return poly_json_obj(p).dump() + "\n"; }

std::string region_bounds_text(const RootDatum& d, const std::string& kind,
                               const RegionBounds& b) {
  std::ostringstream os;
  os << kind << "\n";
  for (int i = 0; i < d.n_simple(); ++i) {
    if (i) os << ", ";
    os << "α" << i + 1 << " ≥ " << b.min_pairing[i];
  }
  os << "\n";
  return os.str();
}

std::string region_bounds_json(const RootDatum& d, const std::string& kind,
                               const RegionBounds& b) {
  json j;
  j["kind"] = kind;
  j["type"] = kind_name(d);
  j["rank"] = d.rank();
  json bounds = json::array();
  for (int i = 0; i < d.n_simple(); ++i)
    bounds.push_back({{"alpha", i + 1}, {"min", b.min_pairing[i]}});
  j["bounds"] = bounds;
  return j.dump() + "\n";
}

std::string classification_text(const RootDatum& d, const Weight& lam,
                                const WeightClassification& c) {
  std::ostringstream os;
  os << "lambda: " << weight_str(lam) << "\n";
  os << "integral: yes\n";
  os << "dominant: " << (c.dominant ? "yes" : "no") << "\n";
  os << "very dominant: " << (c.very_dominant ? "yes" : "no") << "\n";
  if (c.witness) {
    os << "generic: yes (w = " << word_str(d, c.witness->w)
       << ", degree " << length(c.witness->w)
       << ", pullback " << weight_str(c.witness->lambda) << ")\n";
  } else {
    os << "generic: no\n";
  }
  return os.str();
}

std::string classification_json(const RootDatum& d, const Weight& lam,
                                const WeightClassification& c) {
  json j;
  j["kind"] = "classify";
  j["lambda"] = weight_json(lam);
  j["integral"] = true;
  j["dominant"] = c.dominant;
  j["very_dominant"] = c.very_dominant;
  j["generic"] = static_cast<bool>(c.witness);
  if (c.witness) {
    j["witness"] = json{{"word", word_str(d, c.witness->w)},
                        {"w", c.witness->w.perm},
                        {"degree", length(c.witness->w)},
                        {"lambda", weight_json(c.witness->lambda)}};
  } else {
    j["witness"] = nullptr;
  }
  return j.dump() + "\n";
}

std::string profile_text(const RootDatum& d, const CohomologyProfile& p) {
  std::ostringstream os;
  os << "lambda: " << weight_str(p.lambda) << "\n";
  os << "provenance: " << p.provenance << "\n";
  for (const auto& dc : p.degrees)
    os << "H^" << dc.n << ": " << character_str(dc.ch) << "  [dim " << dc.ch.virtual_dim()
       << "]\n";
  os << "euler: " << character_str(p.euler) << "\n";
  if (d.type.kind == Kind::GLnn)
    os << "note: convention-dependent (gl f modules fix one highest weight convention)\n";
  return os.str();
}

std::string profile_json(const RootDatum& d, const CohomologyProfile& p) {
  json j;
  j["type"] = kind_name(d);
  j["rank"] = d.rank();
  j["lambda"] = weight_json(p.lambda);
  j["provenance"] = p.provenance;
  json degs = json::array();
  for (const auto& dc : p.degrees) degs.push_back({{"n", dc.n}, {"char", character_json_obj(dc.ch)}});
  j["degrees"] = degs;
  j["euler"] = character_json_obj(p.euler);
  if (d.type.kind == Kind::GLnn) j["convention_dependent"] = true;
  return j.dump() + "\n";
}

std::string euler_text(const RootDatum& d, const Character& c) {
  std::string s = character_str(c) + "\n";
  if (d.type.kind == Kind::GLnn)
    s += "note: convention-dependent (gl f modules fix one highest weight convention)\n";
  return s;
}

std::string euler_json(const RootDatum& d, const Weight& lam, const Character& c) {
  json j;
  j["lambda"] = weight_json(lam);
  j["euler"] = character_json_obj(c);
  if (d.type.kind == Kind::GLnn) j["convention_dependent"] = true;
  return j.dump() + "\n";
}

std::string q2_simple_text(const Weight& sigma, const Character& c) {
  std::ostringstream os;
  os << "highest weight: " << weight_str(sigma) << "\n";
  os << "ch L: " << character_str(c) << "  [dim " << c.virtual_dim() << "]\n";
  return os.str();
}

std::string q2_simple_json(const Weight& sigma, const Character& c) {
  json j;
  j["highest"] = weight_json(sigma);
  j["char"] = character_json_obj(c);
  return j.dump() + "\n";
}

std::string q2_analysis_text(const Q2Analysis& a) {
  std::ostringstream os;
  os << "sigma: " << weight_str(a.sigma) << "\n";
  os << "H^0: " << character_str(a.h0) << "  [dim " << a.h0.virtual_dim() << "]\n";
  os << "composition: ";
  for (std::size_t i = 0; i < a.composition.size(); ++i) {
    if (i) os << " + ";
    os << simple_str(a.composition[i].first, a.composition[i].second);
  }
  os << "\n";
  os << "socle: L" << weight_str(a.socle) << "\n";
  for (const auto& n : a.notes) os << "note: " << n << "\n";
  return os.str();
}

std::string q2_analysis_json(const Q2Analysis& a) {
  json j;
  j["sigma"] = weight_json(a.sigma);
  j["provenance"] = "q2-exact";
  j["h0"] = character_json_obj(a.h0);
  json comp = json::array();
  for (const auto& [mu, k] : a.composition) comp.push_back({{"wt", mu}, {"mult", k}});
  j["composition"] = comp;
  j["socle"] = weight_json(a.socle);
  j["edge"] = a.edge;
  j["notes"] = a.notes;
  return j.dump() + "\n";
}

std::string q2_h1_text(const Weight& sigma, const Character& c) {
  std::ostringstream os;
  os << "sigma: " << weight_str(sigma) << "\n";
  os << "H^1: " << character_str(c) << "  [dim " << c.virtual_dim() << "]\n";
  return os.str();
}

std::string q2_h1_json(const Weight& sigma, const Character& c) {
  json j;
  j["sigma"] = weight_json(sigma);
  j["provenance"] = "q2-exact";
  j["h1"] = character_json_obj(c);
  return j.dump() + "\n";
}

std::string socle_text(const SocleReport& r) {
  std::ostringstream os;
  os << "H^1 socle: " << socle_kind_str(r.kind);
  if (r.kind == SocleKind::Simple) {
    if (r.highest)
      os << " L" << weight_str(*r.highest);
    else
      os << " (highest weight not determined)";
  }
  os << "\n";
  os << "note: " << r.note << "\n";
  return os.str();
}

std::string socle_json(const Weight& lam, const SocleReport& r) {
  json j;
  j["lambda"] = weight_json(lam);
  j["kind"] = socle_kind_str(r.kind);
  if (r.highest)
    j["highest"] = weight_json(*r.highest);
  else
    j["highest"] = nullptr;
  j["note"] = r.note;
  return j.dump() + "\n";
}

std::string svg_generic(const RootDatum& d, const ExteriorWeights& ext, int box) {
  if (d.type.kind != Kind::Q || d.rank() != 3)
    fail(ErrorCode::Unsupported, "the generic map is drawn for type q rank 3 only");
  if (box < 1 || box > 40) fail(ErrorCode::InvalidArgument, "box must be between 1 and 40");
  const int cell = 20;
  const int side = (2 * box + 1) * cell;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << side << "\" height=\"" << side
     << "\" viewBox=\"0 0 " << side << " " << side << "\">\n";
  os << "<style>rect.generic{fill:#36c;stroke:#fff;stroke-width:1}</style>\n";
  os << "<rect x=\"0\" y=\"0\" width=\"" << side << "\" height=\"" << side
     << "\" fill=\"#f4f4f4\"/>\n";
  // Row-major over the slice lam(x, y) = (x+y, y, 0), top row y = box, so the
  // picture has x increasing to the right and y increasing upward.
  for (int y = box; y >= -box; --y)
    for (int x = -box; x <= box; ++x) {
      Weight lam{x + y, y, 0};
      if (!is_generic(d, ext, lam)) continue;
      os << "<rect class=\"generic\" data-x=\"" << x << "\" data-y=\"" << y << "\" x=\""
         << (x + box) * cell << "\" y=\"" << (box - y) * cell << "\" width=\"" << cell
         << "\" height=\"" << cell << "\"/>\n";
    }
  os << "</svg>\n";
  return os.str();
}

}  // namespace superbbw
