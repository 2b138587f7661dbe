#include "superbbw/superbbw.h"

#include <cstdlib>
#include <cstring>
#include <optional>
#include <string>

#include "render.hpp"

using namespace superbbw;

struct sbw_context {
  RootDatum datum;
  std::optional<ExteriorWeights> ext;
  std::string last_error;

  const ExteriorWeights& exterior() {
    if (!ext) ext = exterior_weights(datum);
    return *ext;
  }
};

namespace {

sbw_status status_of(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidArgument: return SBW_ERR_INVALID_ARGUMENT;
    case ErrorCode::Unsupported: return SBW_ERR_UNSUPPORTED;
    case ErrorCode::Domain: return SBW_ERR_DOMAIN;
    default: return SBW_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

// Run fn, route its string result to *out and any failure to the context.
template <typename Fn>
sbw_status guarded(sbw_context* ctx, char** out, Fn&& fn) {
  if (!ctx || !out) return SBW_ERR_INVALID_ARGUMENT;
  *out = nullptr;
  ctx->last_error.clear();
  try {
    std::string s = fn();
    *out = dup_string(s);
    if (!*out) {
      ctx->last_error = "out of memory";
      return SBW_ERR_INTERNAL;
    }
    return SBW_OK;
  } catch (const Error& e) {
    ctx->last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return SBW_ERR_INTERNAL;
  }
}

Weight to_weight(const sbw_context* ctx, const int64_t* lam, size_t len) {
  if (!lam) fail(ErrorCode::InvalidArgument, "weight pointer is null");
  if (len != static_cast<size_t>(ctx->datum.dim))
    fail(ErrorCode::InvalidArgument,
         "weight needs " + std::to_string(ctx->datum.dim) + " entries, got " +
             std::to_string(len));
  return Weight(lam, lam + len);
}

}  // namespace

extern "C" {

sbw_status sbw_context_create(const char* type, int rank, sbw_context** out) {
  if (!out) return SBW_ERR_INVALID_ARGUMENT;
  *out = nullptr;
  if (!type) return SBW_ERR_INVALID_ARGUMENT;
  SuperType t;
  if (std::strcmp(type, "q") == 0) {
    t.kind = Kind::Q;
  } else if (std::strcmp(type, "gl") == 0) {
    t.kind = Kind::GLnn;
  } else {
    return SBW_ERR_INVALID_ARGUMENT;
  }
  t.rank = rank;
  try {
    auto* ctx = new sbw_context{build_root_datum(t), std::nullopt, {}};
    *out = ctx;
    return SBW_OK;
  } catch (const Error& e) {
    return status_of(e.code());
  } catch (const std::exception&) {
    return SBW_ERR_INTERNAL;
  }
}

void sbw_context_destroy(sbw_context* ctx) { delete ctx; }

const char* sbw_last_error(const sbw_context* ctx) {
  return ctx ? ctx->last_error.c_str() : "";
}

const char* sbw_status_message(sbw_status s) {
  switch (s) {
    case SBW_OK: return "ok";
    case SBW_ERR_INVALID_ARGUMENT: return "invalid argument";
    case SBW_ERR_UNSUPPORTED: return "unsupported";
    case SBW_ERR_DOMAIN: return "domain";
    default: return "internal";
  }
}

void sbw_string_free(char* s) { std::free(s); }

sbw_status sbw_datum(sbw_context* ctx, sbw_format fmt, char** out) {
  return guarded(ctx, out, [&] {
    return fmt == SBW_FORMAT_JSON ? datum_json(ctx->datum) : datum_text(ctx->datum);
  });
}

sbw_status sbw_poincare(sbw_context* ctx, sbw_format fmt, char** out) {
  return guarded(ctx, out, [&] {
    LaurentPoly p = poincare_polynomial(ctx->datum);
    return fmt == SBW_FORMAT_JSON ? poincare_json(p) : poincare_text(p);
  });
}

sbw_status sbw_region_omega(sbw_context* ctx, const char* word, sbw_format fmt, char** out) {
  return guarded(ctx, out, [&] {
    if (!word) fail(ErrorCode::InvalidArgument, "word pointer is null");
    WeylElement w = parse_word(ctx->datum, word);
    RegionBounds b = omega_w_bounds(ctx->datum, ctx->exterior(), w);
    std::string kind = "omega-w(" + word_str(ctx->datum, w) + ")";
    return fmt == SBW_FORMAT_JSON ? region_bounds_json(ctx->datum, kind, b)
                                  : region_bounds_text(ctx->datum, kind, b);
  });
}

sbw_status sbw_region_very_dominant(sbw_context* ctx, sbw_format fmt, char** out) {
  return guarded(ctx, out, [&] {
    RegionBounds b = very_dominant_bounds(ctx->datum, ctx->exterior());
    return fmt == SBW_FORMAT_JSON ? region_bounds_json(ctx->datum, "very-dominant", b)
                                  : region_bounds_text(ctx->datum, "very-dominant", b);
  });
}

sbw_status sbw_region_classify(sbw_context* ctx, const int64_t* lam, size_t len,
                               sbw_format fmt, char** out) {
  return guarded(ctx, out, [&] {
    Weight mu = to_weight(ctx, lam, len);
    WeightClassification c = classify_weight(ctx->datum, ctx->exterior(), mu);
    return fmt == SBW_FORMAT_JSON ? classification_json(ctx->datum, mu, c)
                                  : classification_text(ctx->datum, mu, c);
  });
}

sbw_status sbw_character_profile(sbw_context* ctx, const int64_t* lam, size_t len,
                                 sbw_format fmt, char** out) {
  return guarded(ctx, out, [&] {
    Weight mu = to_weight(ctx, lam, len);
    CohomologyProfile p = cohomology_profile(ctx->datum, ctx->exterior(), mu);
    return fmt == SBW_FORMAT_JSON ? profile_json(ctx->datum, p) : profile_text(ctx->datum, p);
  });
}

sbw_status sbw_euler(sbw_context* ctx, const int64_t* lam, size_t len, sbw_format fmt,
                     char** out) {
  return guarded(ctx, out, [&] {
    Weight mu = to_weight(ctx, lam, len);
    Character c = euler_character(ctx->datum, ctx->exterior(), mu);
    return fmt == SBW_FORMAT_JSON ? euler_json(ctx->datum, mu, c) : euler_text(ctx->datum, c);
  });
}

sbw_status sbw_q2_simple(sbw_context* ctx, const int64_t* lam, size_t len, sbw_format fmt,
                         char** out) {
  return guarded(ctx, out, [&] {
    Weight mu = to_weight(ctx, lam, len);
    Character c = q2_simple_character(ctx->datum, mu);
    return fmt == SBW_FORMAT_JSON ? q2_simple_json(mu, c) : q2_simple_text(mu, c);
  });
}

sbw_status sbw_q2_h0(sbw_context* ctx, const int64_t* lam, size_t len, sbw_format fmt,
                     char** out) {
  return guarded(ctx, out, [&] {
    Weight mu = to_weight(ctx, lam, len);
    Q2Analysis a = q2_h0_analysis(ctx->datum, ctx->exterior(), mu);
    return fmt == SBW_FORMAT_JSON ? q2_analysis_json(a) : q2_analysis_text(a);
  });
}

sbw_status sbw_q2_h1(sbw_context* ctx, const int64_t* lam, size_t len, sbw_format fmt,
                     char** out) {
  return guarded(ctx, out, [&] {
    Weight mu = to_weight(ctx, lam, len);
    Character c = q2_h1_character(ctx->datum, ctx->exterior(), mu);
    return fmt == SBW_FORMAT_JSON ? q2_h1_json(mu, c) : q2_h1_text(mu, c);
  });
}

sbw_status sbw_h1_socle(sbw_context* ctx, const int64_t* lam, size_t len, sbw_format fmt,
                        char** out) {
  return guarded(ctx, out, [&] {
    Weight mu = to_weight(ctx, lam, len);
    SocleReport r = h1_socle_report(ctx->datum, ctx->exterior(), mu);
    return fmt == SBW_FORMAT_JSON ? socle_json(mu, r) : socle_text(r);
  });
}

sbw_status sbw_svg_generic(sbw_context* ctx, int box, char** out) {
  return guarded(ctx, out, [&] { return svg_generic(ctx->datum, ctx->exterior(), box); });
}

}  // extern "C"
