#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace superbbw {

using Int = std::int64_t;

// Integral weight in the epsilon-basis of the character lattice.
// Q(n): n coordinates (e1..en).  GL(n|n): 2n coordinates (e1..en, d1..dn).
using Weight = std::vector<Int>;

enum class Kind { Q, GLnn };

struct SuperType {
  Kind kind = Kind::Q;
  int rank = 1;
};

enum class ErrorCode : int {
  InvalidArgument = 1,  // malformed weights, words, options
  Unsupported = 2,      // type/rank outside the supported range
  Domain = 3,           // well-formed input outside an operation's domain
  Internal = 4,         // internal consistency failure
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

inline Weight add(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) fail(ErrorCode::Internal, "weight size mismatch");
  Weight r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Weight sub(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) fail(ErrorCode::Internal, "weight size mismatch");
  Weight r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Weight neg(const Weight& a) {
  Weight r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

inline std::string weight_str(const Weight& w) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ',';
    os << w[i];
  }
  os << ')';
  return os.str();
}

}  // namespace superbbw
