#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "types.hpp"

namespace superbbw {

// Element of the even Weyl group W0 (S_n for Q(n), S_n x S_n for GL(n|n)),
// stored as a block-preserving permutation of lattice coordinates in one-line
// notation: (w v)[perm[i]] = v[i].
struct WeylElement {
  std::vector<int> perm;

  bool operator==(const WeylElement&) const = default;
  bool operator<(const WeylElement& o) const { return perm < o.perm; }
};

struct RootDatum {
  SuperType type;
  int dim = 0;  // lattice dimension: n for Q(n), 2n for GL(n|n)
  std::vector<std::pair<int, int>> blocks;  // [begin,end) ranges of the even GL_n factors
  std::vector<Weight> simple_roots;         // Delta_0, block by block
  std::vector<Weight> even_positive;
  // Weights of g_1/b_1 for the parabolic with all four matrix blocks lower
  // triangular, i.e. the strictly upper entries of the odd blocks.
  //   Q(n):     {e_i - e_j : i < j}
  //   GL(n|n):  {e_i - d_j : i < j} u {d_i - e_j : i < j}
  std::vector<Weight> odd_positive;
  Weight rho;  // (n-1, n-2, ..., 0) per block

  int rank() const { return type.rank; }
  int n_simple() const { return static_cast<int>(simple_roots.size()); }
};

RootDatum build_root_datum(SuperType type);

// <lambda, alpha^vee> for a type-A root alpha (one +1, one -1 entry).
Int pairing(const Weight& lam, const Weight& alpha);

// Pairings against all simple coroots, in block order.
std::vector<Int> simple_pairings(const RootDatum& d, const Weight& lam);

bool is_dominant(const RootDatum& d, const Weight& lam);

WeylElement identity_element(const RootDatum& d);
// i is 1-based in 1..n_simple(), numbered through the blocks.
WeylElement simple_reflection(const RootDatum& d, int i);
WeylElement compose(const WeylElement& a, const WeylElement& b);  // a after b
WeylElement inverse(const WeylElement& w);
int length(const WeylElement& w);  // inversion count

// All of W0 in a fixed deterministic order (lexicographic one-line notation).
std::vector<WeylElement> weyl_elements(const RootDatum& d);

Weight act(const WeylElement& w, const Weight& lam);
Weight dot_act(const RootDatum& d, const WeylElement& w, const Weight& lam);

struct DominantRep {
  bool singular = false;
  WeylElement w;    // valid when !singular; w . lambda is dominant
  Weight dominant;  // w . lambda
};

// Dot-action dominant representative: singular iff lambda+rho has a repeated
// coordinate within a block; otherwise the unique w with w.(lambda) dominant,
// of length = inversions needed to sort lambda+rho strictly decreasing.
DominantRep dominant_rep_dot(const RootDatum& d, const Weight& lam);

// Dot-separated reduced words: "s1.s2.s1"; "e" denotes the identity.
WeylElement parse_word(const RootDatum& d, const std::string& word);
std::string word_str(const RootDatum& d, const WeylElement& w);

std::string root_str(const RootDatum& d, const Weight& root);

}  // namespace superbbw
