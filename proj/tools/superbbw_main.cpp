// Command line front end for the superbbw shared library. All mathematics
// lives behind the C API; this file only parses options and routes output.

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "superbbw/superbbw.h"

namespace {

int exit_code(sbw_status s) {
  switch (s) {
    case SBW_OK: return 0;
    case SBW_ERR_DOMAIN: return 2;
    case SBW_ERR_INVALID_ARGUMENT: return 64;
    case SBW_ERR_UNSUPPORTED: return 65;
    default: return 70;
  }
}

bool parse_weight(const std::string& s, std::vector<int64_t>& out) {
  std::string t = s;
  if (t.size() >= 2 && t.front() == '(' && t.back() == ')') t = t.substr(1, t.size() - 2);
  out.clear();
  std::size_t pos = 0;
  while (pos <= t.size()) {
    std::size_t comma = t.find(',', pos);
    std::string tok =
        t.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (tok.empty()) return false;
    errno = 0;
    char* end = nullptr;
    long long v = std::strtoll(tok.c_str(), &end, 10);
    if (errno != 0 || end == tok.c_str() || *end != '\0') return false;
    out.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return !out.empty();
}

int usage_error(const std::string& msg) {
  std::fprintf(stderr, "superbbw: invalid argument: %s\n", msg.c_str());
  return 64;
}

int emit(sbw_context* ctx, sbw_status st, char** out) {
  if (st == SBW_OK) {
    std::fputs(*out, stdout);
    sbw_string_free(*out);
    *out = nullptr;
    return 0;
  }
  std::fprintf(stderr, "superbbw: %s: %s\n", sbw_status_message(st), sbw_last_error(ctx));
  return exit_code(st);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weight combinatorics and cohomology characters for Q(n) and GL(n|n)"};
  app.require_subcommand(1);

  std::string type = "q";
  int rank = 2;
  bool json = false;
  app.add_option("--type", type, "supergroup family: q or gl")
      ->check(CLI::IsMember({"q", "gl"}));
  app.add_option("--rank", rank, "rank n (q: 1..6, gl: 1..5)");
  app.add_flag("--json", json, "emit JSON instead of text");

  CLI::App* datum = app.add_subcommand("datum", "print the root datum");
  CLI::App* poincare =
      app.add_subcommand("poincare", "generating function of the generic degrees");

  CLI::App* region = app.add_subcommand("region", "chamber bounds and membership");
  std::string region_word, region_weight;
  bool region_vd = false;
  CLI::Option* opt_w = region->add_option("--w", region_word,
                                          "generic chamber of this word, e.g. s1.s2 or e");
  CLI::Option* opt_vd = region->add_flag("--very-dominant", region_vd,
                                         "bounds of the very dominant region");
  CLI::Option* opt_wt =
      region->add_option("--weight", region_weight, "classify one weight, e.g. 3,0");
  opt_w->excludes(opt_vd)->excludes(opt_wt);
  opt_vd->excludes(opt_wt);

  CLI::App* character =
      app.add_subcommand("character", "cohomology of one weight");
  std::string character_weight;
  bool character_socle = false;
  character->add_option("--weight", character_weight, "weight, e.g. 3,0")->required();
  character->add_flag("--h1-socle", character_socle,
                      "report the socle of degree one instead of the profile");

  CLI::App* euler = app.add_subcommand("euler", "Euler characteristic of one weight");
  std::string euler_weight;
  euler->add_option("--weight", euler_weight, "weight, e.g. 3,0")->required();

  CLI::App* q2 = app.add_subcommand("q2", "exact Q(2) results");
  std::string q2_simple, q2_h0, q2_h1;
  CLI::Option* opt_simple =
      q2->add_option("--simple", q2_simple, "character of the simple module");
  CLI::Option* opt_h0 = q2->add_option("--h0", q2_h0, "degree zero with composition factors");
  CLI::Option* opt_h1 = q2->add_option("--h1", q2_h1, "degree one character");
  opt_simple->excludes(opt_h0)->excludes(opt_h1);
  opt_h0->excludes(opt_h1);

  CLI::App* svg = app.add_subcommand("svg", "SVG map of the generic region (q, rank 3)");
  int svg_box = 9;
  svg->add_option("--box", svg_box, "half-width of the plotted square (default 9)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "superbbw: invalid argument: %s\n", e.what());
    return 64;
  }

  sbw_context* ctx = nullptr;
  sbw_status st = sbw_context_create(type.c_str(), rank, &ctx);
  if (st != SBW_OK) {
    std::fprintf(stderr, "superbbw: %s: cannot build type %s rank %d\n",
                 sbw_status_message(st), type.c_str(), rank);
    return exit_code(st);
  }

  const sbw_format fmt = json ? SBW_FORMAT_JSON : SBW_FORMAT_TEXT;
  char* out = nullptr;
  int rc = 0;
  std::vector<int64_t> w;

  if (datum->parsed()) {
    rc = emit(ctx, sbw_datum(ctx, fmt, &out), &out);
  } else if (poincare->parsed()) {
    rc = emit(ctx, sbw_poincare(ctx, fmt, &out), &out);
  } else if (region->parsed()) {
    if (!region_word.empty()) {
      rc = emit(ctx, sbw_region_omega(ctx, region_word.c_str(), fmt, &out), &out);
    } else if (region_vd) {
      rc = emit(ctx, sbw_region_very_dominant(ctx, fmt, &out), &out);
    } else if (!region_weight.empty()) {
      if (!parse_weight(region_weight, w)) {
        rc = usage_error("bad weight '" + region_weight + "'");
      } else {
        rc = emit(ctx, sbw_region_classify(ctx, w.data(), w.size(), fmt, &out), &out);
      }
    } else {
      rc = usage_error("region needs one of --w, --very-dominant, --weight");
    }
  } else if (character->parsed()) {
    if (!parse_weight(character_weight, w)) {
      rc = usage_error("bad weight '" + character_weight + "'");
    } else if (character_socle) {
      rc = emit(ctx, sbw_h1_socle(ctx, w.data(), w.size(), fmt, &out), &out);
    } else {
      rc = emit(ctx, sbw_character_profile(ctx, w.data(), w.size(), fmt, &out), &out);
    }
  } else if (euler->parsed()) {
    if (!parse_weight(euler_weight, w)) {
      rc = usage_error("bad weight '" + euler_weight + "'");
    } else {
      rc = emit(ctx, sbw_euler(ctx, w.data(), w.size(), fmt, &out), &out);
    }
  } else if (q2->parsed()) {
    const std::string& arg = !q2_simple.empty() ? q2_simple : !q2_h0.empty() ? q2_h0 : q2_h1;
    if (arg.empty()) {
      rc = usage_error("q2 needs one of --simple, --h0, --h1");
    } else if (!parse_weight(arg, w)) {
      rc = usage_error("bad weight '" + arg + "'");
    } else if (!q2_simple.empty()) {
      rc = emit(ctx, sbw_q2_simple(ctx, w.data(), w.size(), fmt, &out), &out);
    } else if (!q2_h0.empty()) {
      rc = emit(ctx, sbw_q2_h0(ctx, w.data(), w.size(), fmt, &out), &out);
    } else {
      rc = emit(ctx, sbw_q2_h1(ctx, w.data(), w.size(), fmt, &out), &out);
    }
  } else if (svg->parsed()) {
    rc = emit(ctx, sbw_svg_generic(ctx, svg_box, &out), &out);
  }

  sbw_context_destroy(ctx);
  return rc;
}
