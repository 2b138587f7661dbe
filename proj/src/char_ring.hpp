#pragma once

#include <map>
#include <optional>
#include <string>

#include "root_data.hpp"
#include "types.hpp"

namespace superbbw {

// Formal Z-linear combination of weights: an element of Z[X] with X the
// integral weight lattice, written sum m_mu e^mu. Zero coefficients are
// never stored.
class Character {
 public:
  Character() = default;
  static Character monomial(const Weight& mu, Int m = 1);

  void add_term(const Weight& mu, Int m);
  Character& operator+=(const Character& o);
  Character& operator-=(const Character& o);
  friend Character operator+(Character a, const Character& b) { return a += b; }
  friend Character operator-(Character a, const Character& b) { return a -= b; }
  Character operator*(const Character& o) const;  // tensor product
  Character scaled(Int c) const;
  Character dual() const;  // e^mu -> e^{-mu}

  Int mult(const Weight& mu) const;
  Int virtual_dim() const;  // sum of coefficients
  bool is_zero() const { return terms_.empty(); }
  std::size_t n_terms() const { return terms_.size(); }
  bool operator==(const Character& o) const = default;

  const std::map<Weight, Int>& terms() const { return terms_; }

 private:
  std::map<Weight, Int> terms_;
};

// Irreducible character of the even group (a product of general linear
// blocks) with dominant highest weight lam, computed by Gelfand-Tsetlin
// pattern enumeration per block.
Character weyl_character(const RootDatum& d, const Weight& lam);

// Dimension of the same irreducible, by the product formula. Independent of
// weyl_character on purpose.
Int weyl_dim(const RootDatum& d, const Weight& lam);

// Euler characteristic of the line bundle nu on the even flag variety:
// zero if nu is dot-singular, otherwise (-1)^{l(w)} chi(w . nu) for the w
// moving nu to the dominant chamber.
Character euler_chi(const RootDatum& d, const Weight& nu);

// Bott's theorem for the even group: cohomology of the line bundle nu is
// zero in all degrees (vanishes=true) or the irreducible ch in one degree.
struct BBWResult {
  bool vanishes = true;
  int degree = -1;
  Character ch;
};
BBWResult bbw_even(const RootDatum& d, const Weight& nu);

// Laurent polynomial in one variable t with integer coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly term(int deg, Int c);

  void add_term(int deg, Int c);
  LaurentPoly& operator+=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  LaurentPoly operator*(const LaurentPoly& o) const;

  Int coeff(int deg) const;
  int min_deg() const;
  int max_deg() const;
  bool is_zero() const { return coeffs_.empty(); }
  bool operator==(const LaurentPoly& o) const = default;

  const std::map<int, Int>& coeffs() const { return coeffs_; }
  std::string str(const std::string& var = "t") const;

 private:
  std::map<int, Int> coeffs_;
};

}  // namespace superbbw
