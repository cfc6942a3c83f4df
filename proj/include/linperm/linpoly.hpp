#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "linperm/field.hpp"

namespace linperm {

// L(x) = sum a_i x^(2^i), i = 0..n-1, a GF(2)-linear map on GF(2^n).
// Coefficient vectors always have length exactly n.
class LinPoly {
 public:
  LinPoly(Field f, std::vector<Felt> coeffs);

  static LinPoly zero(const Field& f);
  static LinPoly identity(const Field& f);
  // binary coefficients: bit i of mask -> a_i = 1
  static LinPoly from_mask(const Field& f, std::uint64_t mask);

  const Field& field() const { return field_; }
  int length() const { return static_cast<int>(coeffs_.size()); }
  const Felt& coeff(int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
  const std::vector<Felt>& coeffs() const { return coeffs_; }

  Felt operator()(const Felt& x) const;  // evaluation
  bool is_zero() const;
  bool is_identity() const;

  friend bool operator==(const LinPoly& a, const LinPoly& b);
  friend bool operator!=(const LinPoly& a, const LinPoly& b) { return !(a == b); }

 private:
  Field field_;
  std::vector<Felt> coeffs_;
};

// composition L(M(x)) reduced mod x^(2^n) - x
LinPoly compose(const LinPoly& L, const LinPoly& M);
LinPoly operator+(const LinPoly& L, const LinPoly& M);
// (c x) composed with L: multiplies every coefficient by c
LinPoly scale(const Felt& c, const LinPoly& L);

// An element of GF(2)[x]/(x^n + 1), the image of GF(2)-coefficient
// linearized polynomials under the degree-transport map x^(2^i) -> x^i.
class Bin2Poly {
 public:
  explicit Bin2Poly(int n);
  Bin2Poly(int n, std::initializer_list<int> exponents);
  static Bin2Poly one(int n) { return Bin2Poly(n, {0}); }

  int ring_degree() const { return n_; }
  bool bit(int i) const {
    return (words_[static_cast<std::size_t>(i) / kWordBits] >> (i % kWordBits)) & 1u;
  }
  void set(int i);
  bool is_one() const;
  std::string to_string() const;  // e.g. "1 + x^2 + x^4"

  friend Bin2Poly operator*(const Bin2Poly& a, const Bin2Poly& b);  // cyclic convolution
  friend bool operator==(const Bin2Poly& a, const Bin2Poly& b);
  friend bool operator!=(const Bin2Poly& a, const Bin2Poly& b) { return !(a == b); }

 private:
  int n_;
  Words words_{};
};

// sum a_i x^(2^i) -> sum a_i x^i; requires every a_i in {0,1}
Bin2Poly conventional_associate(const LinPoly& L);
Bin2Poly associate_product(const Bin2Poly& p, const Bin2Poly& q);

}  // namespace linperm
