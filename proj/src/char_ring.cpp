#include "char_ring.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace superbbw {

Character Character::monomial(const Weight& mu, Int m) {
  Character c;
  c.add_term(mu, m);
  return c;
}

void Character::add_term(const Weight& mu, Int m) {
  if (m == 0) return;
  auto it = terms_.find(mu);
  if (it == terms_.end()) {
    terms_.emplace(mu, m);
  } else if ((it->second += m) == 0) {
    terms_.erase(it);
  }
}

Character& Character::operator+=(const Character& o) {
  for (const auto& [mu, m] : o.terms_) add_term(mu, m);
  return *this;
}

Character& Character::operator-=(const Character& o) {
  for (const auto& [mu, m] : o.terms_) add_term(mu, -m);
  return *this;
}

Character Character::operator*(const Character& o) const {
  Character r;
  for (const auto& [a, ma] : terms_)
    for (const auto& [b, mb] : o.terms_) r.add_term(add(a, b), ma * mb);
  return r;
}

Character Character::scaled(Int c) const {
  Character r;
  if (c == 0) return r;
  for (const auto& [mu, m] : terms_) r.terms_.emplace(mu, m * c);
  return r;
}

Character Character::dual() const {
  Character r;
  for (const auto& [mu, m] : terms_) r.terms_.emplace(neg(mu), m);
  return r;
}

Int Character::mult(const Weight& mu) const {
  auto it = terms_.find(mu);
  return it == terms_.end() ? 0 : it->second;
}

Int Character::virtual_dim() const {
  Int s = 0;
  for (const auto& [mu, m] : terms_) s += m;
  return s;
}

namespace {

// Weights of the gl_k irreducible with highest weight `top` (weakly
// decreasing), by Gelfand-Tsetlin patterns: rows of lengths k..1, the top
// row fixed, consecutive rows interlacing. Coordinate m of the weight is
// sum(row_m) - sum(row_{m-1}).
void gt_block_weights(const std::vector<Int>& top, std::map<std::vector<Int>, Int>& out) {
  const int k = static_cast<int>(top.size());
  std::vector<Int> sums(k + 1, 0);
  sums[k] = std::accumulate(top.begin(), top.end(), Int{0});
  std::vector<std::vector<Int>> rows(k + 1);
  rows[k] = top;

  std::function<void(int)> down = [&](int t) {
    if (t == 1) {
      std::vector<Int> x(k);
      for (int m = 1; m <= k; ++m) x[m - 1] = sums[m] - sums[m - 1];
      ++out[x];
      return;
    }
    const std::vector<Int>& r = rows[t];
    std::vector<Int>& q = rows[t - 1];
    q.assign(t - 1, 0);
    std::function<void(int, Int)> pick = [&](int i, Int acc) {
      if (i == t - 1) {
        sums[t - 1] = acc;
        down(t - 1);
        return;
      }
      for (Int v = r[i + 1]; v <= r[i]; ++v) {
        q[i] = v;
        pick(i + 1, acc + v);
      }
    };
    pick(0, 0);
  };
  down(k);
}

std::vector<Int> block_slice(const Weight& lam, int b, int e) {
  return std::vector<Int>(lam.begin() + b, lam.begin() + e);
}

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

Character weyl_character(const RootDatum& d, const Weight& lam) {
  if (static_cast<int>(lam.size()) != d.dim)
    fail(ErrorCode::InvalidArgument, "weight has wrong length");
  if (!is_dominant(d, lam)) fail(ErrorCode::Domain, "highest weight must be dominant");

  std::vector<std::map<std::vector<Int>, Int>> per_block;
  for (auto [b, e] : d.blocks) {
    std::vector<Int> mu = block_slice(lam, b, e);
    Int shift = *std::min_element(mu.begin(), mu.end());
    for (Int& v : mu) v -= shift;
    std::map<std::vector<Int>, Int> wts;
    gt_block_weights(mu, wts);
    if (shift != 0) {
      std::map<std::vector<Int>, Int> shifted;
      for (auto& [x, m] : wts) {
        std::vector<Int> y = x;
        for (Int& v : y) v += shift;
        shifted.emplace(std::move(y), m);
      }
      wts = std::move(shifted);
    }
    per_block.push_back(std::move(wts));
  }

  Character r;
  if (per_block.size() == 1) {
    for (auto& [x, m] : per_block[0]) r.add_term(x, m);
    return r;
  }
  for (auto& [x, mx] : per_block[0])
    for (auto& [y, my] : per_block[1]) {
      Weight full = x;
      full.insert(full.end(), y.begin(), y.end());
      r.add_term(full, mx * my);
    }
  return r;
}

Int weyl_dim(const RootDatum& d, const Weight& lam) {
  if (static_cast<int>(lam.size()) != d.dim)
    fail(ErrorCode::InvalidArgument, "weight has wrong length");
  if (!is_dominant(d, lam)) fail(ErrorCode::Domain, "highest weight must be dominant");
  __int128 num = 1, den = 1;
  for (auto [b, e] : d.blocks) {
    for (int i = b; i < e; ++i)
      for (int j = i + 1; j < e; ++j) {
        num *= lam[i] - lam[j] + (j - i);
        den *= j - i;
        __int128 g = gcd128(num, den);
        if (g > 1) {
          num /= g;
          den /= g;
        }
      }
  }
  if (den != 1) fail(ErrorCode::Internal, "dimension formula did not reduce");
  return static_cast<Int>(num);
}

Character euler_chi(const RootDatum& d, const Weight& nu) {
  DominantRep rep = dominant_rep_dot(d, nu);
  if (rep.singular) return {};
  Character c = weyl_character(d, rep.dominant);
  return length(rep.w) % 2 == 0 ? c : c.scaled(-1);
}

BBWResult bbw_even(const RootDatum& d, const Weight& nu) {
  DominantRep rep = dominant_rep_dot(d, nu);
  BBWResult r;
  if (rep.singular) return r;
  r.vanishes = false;
  r.degree = length(rep.w);
  r.ch = weyl_character(d, rep.dominant);
  return r;
}

LaurentPoly LaurentPoly::term(int deg, Int c) {
  LaurentPoly p;
  p.add_term(deg, c);
  return p;
}

void LaurentPoly::add_term(int deg, Int c) {
  if (c == 0) return;
  auto it = coeffs_.find(deg);
  if (it == coeffs_.end()) {
    coeffs_.emplace(deg, c);
  } else if ((it->second += c) == 0) {
    coeffs_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [deg, c] : o.coeffs_) add_term(deg, c);
  return *this;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (const auto& [da, ca] : coeffs_)
    for (const auto& [db, cb] : o.coeffs_) r.add_term(da + db, ca * cb);
  return r;
}

Int LaurentPoly::coeff(int deg) const {
  auto it = coeffs_.find(deg);
  return it == coeffs_.end() ? 0 : it->second;
}

int LaurentPoly::min_deg() const {
  if (coeffs_.empty()) fail(ErrorCode::Domain, "zero polynomial has no degree");
  return coeffs_.begin()->first;
}

int LaurentPoly::max_deg() const {
  if (coeffs_.empty()) fail(ErrorCode::Domain, "zero polynomial has no degree");
  return coeffs_.rbegin()->first;
}

std::string LaurentPoly::str(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (const auto& [deg, c] : coeffs_) {
    Int a = c;
    if (out.empty()) {
      if (a < 0) {
        out += "-";
        a = -a;
      }
    } else {
      out += a < 0 ? " - " : " + ";
      if (a < 0) a = -a;
    }
    if (deg == 0 || a != 1) out += std::to_string(a);
    if (deg != 0) {
      out += var;
      if (deg != 1) out += "^" + std::to_string(deg);
    }
  }
  return out;
}

}  // namespace superbbw
