#include "root_data.hpp"

#include <algorithm>
#include <numeric>

namespace superbbw {

namespace {

Weight basis_diff(int dim, int i, int j) {
  Weight r(dim, 0);
  r[i] = 1;
  r[j] = -1;
  return r;
}

}  // namespace

RootDatum build_root_datum(SuperType type) {
  const int n = type.rank;
  if (n < 1) fail(ErrorCode::Unsupported, "rank must be at least 1");
  const int max_rank = type.kind == Kind::Q ? 6 : 5;
  if (n > max_rank)
    fail(ErrorCode::Unsupported, "rank exceeds the supported range (odd root cap)");

  RootDatum d;
  d.type = type;
  if (type.kind == Kind::Q) {
    d.dim = n;
    d.blocks = {{0, n}};
  } else {
    d.dim = 2 * n;
    d.blocks = {{0, n}, {n, 2 * n}};
  }

  d.rho.assign(d.dim, 0);
  for (auto [b, e] : d.blocks) {
    for (int i = b; i < e; ++i) d.rho[i] = e - 1 - i;
    for (int i = b; i + 1 < e; ++i) d.simple_roots.push_back(basis_diff(d.dim, i, i + 1));
    for (int i = b; i < e; ++i)
      for (int j = i + 1; j < e; ++j) d.even_positive.push_back(basis_diff(d.dim, i, j));
  }

  if (type.kind == Kind::Q) {
    // Odd part of q(n) is another copy of gl_n; the strictly upper entries of
    // its lower-triangular block have weights e_i - e_j, i < j.
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) d.odd_positive.push_back(basis_diff(d.dim, i, j));
  } else {
    // Strictly upper entries of the two lower-triangular odd blocks:
    // position (i,j) of B has weight e_i - d_j, of C has weight d_i - e_j.
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) d.odd_positive.push_back(basis_diff(d.dim, i, n + j));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) d.odd_positive.push_back(basis_diff(d.dim, n + i, j));
  }
  return d;
}

Int pairing(const Weight& lam, const Weight& alpha) {
  if (lam.size() != alpha.size()) fail(ErrorCode::Internal, "pairing size mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < lam.size(); ++i) s += lam[i] * alpha[i];
  return s;
}

std::vector<Int> simple_pairings(const RootDatum& d, const Weight& lam) {
  std::vector<Int> r;
  r.reserve(d.simple_roots.size());
  for (const auto& a : d.simple_roots) r.push_back(pairing(lam, a));
  return r;
}

bool is_dominant(const RootDatum& d, const Weight& lam) {
  for (const auto& a : d.simple_roots)
    if (pairing(lam, a) < 0) return false;
  return true;
}

WeylElement identity_element(const RootDatum& d) {
  WeylElement w;
  w.perm.resize(d.dim);
  std::iota(w.perm.begin(), w.perm.end(), 0);
  return w;
}

WeylElement simple_reflection(const RootDatum& d, int i) {
  if (i < 1 || i > d.n_simple()) fail(ErrorCode::InvalidArgument, "simple reflection index out of range");
  const Weight& a = d.simple_roots[i - 1];
  int p = -1, q = -1;
  for (int k = 0; k < d.dim; ++k) {
    if (a[k] == 1) p = k;
    if (a[k] == -1) q = k;
  }
  WeylElement w = identity_element(d);
  std::swap(w.perm[p], w.perm[q]);
  return w;
}

WeylElement compose(const WeylElement& a, const WeylElement& b) {
  if (a.perm.size() != b.perm.size()) fail(ErrorCode::Internal, "compose size mismatch");
  WeylElement r;
  r.perm.resize(a.perm.size());
  for (std::size_t i = 0; i < a.perm.size(); ++i) r.perm[i] = a.perm[b.perm[i]];
  return r;
}

WeylElement inverse(const WeylElement& w) {
  WeylElement r;
  r.perm.resize(w.perm.size());
  for (std::size_t i = 0; i < w.perm.size(); ++i) r.perm[w.perm[i]] = static_cast<int>(i);
  return r;
}

int length(const WeylElement& w) {
  // Blocks occupy disjoint, increasing index ranges, so cross-block pairs are
  // never inverted and a global count is the per-block sum.
  int inv = 0;
  for (std::size_t i = 0; i < w.perm.size(); ++i)
    for (std::size_t j = i + 1; j < w.perm.size(); ++j)
      if (w.perm[i] > w.perm[j]) ++inv;
  return inv;
}

std::vector<WeylElement> weyl_elements(const RootDatum& d) {
  std::vector<std::vector<int>> per_block;
  for (auto [b, e] : d.blocks) {
    std::vector<int> base(e - b);
    std::iota(base.begin(), base.end(), b);
    per_block.push_back(base);
  }
  std::vector<WeylElement> out;
  // Lexicographic enumeration block by block, rightmost block fastest.
  std::vector<std::vector<int>> cur = per_block;
  std::vector<bool> done(cur.size(), false);
  while (true) {
    WeylElement w;
    for (const auto& blk : cur) w.perm.insert(w.perm.end(), blk.begin(), blk.end());
    out.push_back(w);
    int k = static_cast<int>(cur.size()) - 1;
    while (k >= 0 && !std::next_permutation(cur[k].begin(), cur[k].end())) --k;
    if (k < 0) break;
  }
  return out;
}

Weight act(const WeylElement& w, const Weight& lam) {
  if (w.perm.size() != lam.size()) fail(ErrorCode::Internal, "act size mismatch");
  Weight r(lam.size());
  for (std::size_t i = 0; i < lam.size(); ++i) r[w.perm[i]] = lam[i];
  return r;
}

Weight dot_act(const RootDatum& d, const WeylElement& w, const Weight& lam) {
  return sub(act(w, add(lam, d.rho)), d.rho);
}

DominantRep dominant_rep_dot(const RootDatum& d, const Weight& lam) {
  if (static_cast<int>(lam.size()) != d.dim) fail(ErrorCode::InvalidArgument, "weight has wrong length");
  Weight v = add(lam, d.rho);
  DominantRep rep;
  rep.w.perm.assign(d.dim, 0);
  for (auto [b, e] : d.blocks) {
    std::vector<int> idx(e - b);
    std::iota(idx.begin(), idx.end(), b);
    std::stable_sort(idx.begin(), idx.end(), [&](int x, int y) { return v[x] > v[y]; });
    for (int k = 0; k + 1 < static_cast<int>(idx.size()); ++k)
      if (v[idx[k]] == v[idx[k + 1]]) {
        rep.singular = true;
        return rep;
      }
    // idx[k] is the position whose value lands in slot b+k after sorting.
    for (int k = 0; k < static_cast<int>(idx.size()); ++k) rep.w.perm[idx[k]] = b + k;
  }
  rep.dominant = dot_act(d, rep.w, lam);
  return rep;
}

WeylElement parse_word(const RootDatum& d, const std::string& word) {
  WeylElement w = identity_element(d);
  if (word.empty() || word == "e" || word == "1") return w;
  std::size_t pos = 0;
  std::vector<int> letters;
  while (pos <= word.size()) {
    std::size_t dot = word.find('.', pos);
    std::string tok = word.substr(pos, dot == std::string::npos ? std::string::npos : dot - pos);
    if (tok.size() < 2 || tok[0] != 's')
      fail(ErrorCode::InvalidArgument, "bad word token '" + tok + "' (expected s<k>)");
    int k = 0;
    for (std::size_t i = 1; i < tok.size(); ++i) {
      if (tok[i] < '0' || tok[i] > '9')
        fail(ErrorCode::InvalidArgument, "bad word token '" + tok + "' (expected s<k>)");
      k = k * 10 + (tok[i] - '0');
    }
    if (k < 1 || k > d.n_simple())
      fail(ErrorCode::InvalidArgument, "reflection index out of range in word");
    letters.push_back(k);
    if (dot == std::string::npos) break;
    pos = dot + 1;
  }
  // s1.s2 denotes s1 o s2: the rightmost letter acts first.
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    w = compose(simple_reflection(d, *it), w);
  return w;
}

std::string word_str(const RootDatum& d, const WeylElement& w) {
  // Strip simple reflections from the right: a descent at i means w = u o s_i
  // with l(u) = l(w) - 1, and the one-line notation of u swaps slots of i.
  std::vector<int> v = w.perm;
  std::vector<int> stripped;
  auto simple_of_pos = [&](int p) {
    int s = 0;
    for (auto [b, e] : d.blocks) {
      if (p >= b && p + 1 < e) return s + (p - b) + 1;
      s += e - b - 1;
    }
    return -1;
  };
  bool moved = true;
  while (moved) {
    moved = false;
    for (int p = 0; p + 1 < static_cast<int>(v.size()); ++p) {
      int si = simple_of_pos(p);
      if (si < 0) continue;
      if (v[p] > v[p + 1]) {
        std::swap(v[p], v[p + 1]);
        stripped.push_back(si);
        moved = true;
        break;
      }
    }
  }
  if (stripped.empty()) return "e";
  std::string out;
  for (auto it = stripped.rbegin(); it != stripped.rend(); ++it) {
    if (!out.empty()) out += '.';
    out += 's' + std::to_string(*it);
  }
  return out;
}

std::string root_str(const RootDatum& d, const Weight& root) {
  const int n = d.rank();
  auto name = [&](int k) {
    if (d.type.kind == Kind::Q || k < n) return "e" + std::to_string(k % n + 1);
    return "d" + std::to_string(k - n + 1);
  };
  int p = -1, q = -1;
  for (int k = 0; k < d.dim; ++k) {
    if (root[k] == 1) p = k;
    if (root[k] == -1) q = k;
  }
  if (p < 0 || q < 0) return weight_str(root);
  return name(p) + "-" + name(q);
}

}  // namespace superbbw
