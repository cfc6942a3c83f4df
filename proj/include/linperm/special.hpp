#pragma once

#include <optional>
#include <vector>

#include "linperm/linpoly.hpp"

namespace linperm {

// A subset of Z/nZ, stored as a bitmask. Drives the conjugate-sum and
// conjugate-product calculus: index lists are sets, so duplicates collapse
// and order never matters.
class IndexSet {
 public:
  explicit IndexSet(int n);
  IndexSet(int n, std::initializer_list<int> members);
  static IndexSet full(int n);
  // arithmetic progression {first, first+2, ..., last}; EMPTY when
  // first > last (the boundary lemmas only type-check this way)
  static IndexSet ap(int n, int first, int last);

  int universe() const { return n_; }
  bool contains(int i) const {
    return (words_[static_cast<std::size_t>(i) / kWordBits] >> (i % kWordBits)) & 1u;
  }
  void insert(int i);
  int count() const;
  bool empty() const { return count() == 0; }
  std::vector<int> members() const;
  IndexSet shifted(int k) const;  // {(i + k) mod n : i in this}

  friend IndexSet operator^(const IndexSet& a, const IndexSet& b);  // symmetric difference
  friend IndexSet operator&(const IndexSet& a, const IndexSet& b);
  friend IndexSet operator|(const IndexSet& a, const IndexSet& b);
  friend bool operator==(const IndexSet& a, const IndexSet& b);
  friend bool operator!=(const IndexSet& a, const IndexSet& b) { return !(a == b); }

 private:
  int n_;
  Words words_{};
};

// sum of c^(2^i) over i in I; empty set -> 0
Felt conj_sum(const Felt& c, const IndexSet& I);
// product of c^(2^i) over i in I; empty set -> 1
Felt conj_prod(const Felt& c, const IndexSet& I);

// P(x) = x + x^2 + tr(x/a) with n odd and tr(1/a) = 1, stored with the
// trace term folded into the coefficient vector.
class SpecialPP {
 public:
  const Field& field() const { return poly_.field(); }
  const Felt& a() const { return a_; }
  const Felt& a_inverse() const { return inv_a_; }
  const LinPoly& poly() const { return poly_; }
  // P~(x) = P(ax) = ax + a^2 x^2 + tr(x), whose Dickson matrix has the
  // simple first row (1+a, 1+a^2, 1, ..., 1)
  LinPoly normalized_transform() const;

 private:
  SpecialPP(Felt a, Felt inv_a, LinPoly poly)
      : a_(std::move(a)), inv_a_(std::move(inv_a)), poly_(std::move(poly)) {}
  Felt a_;
  Felt inv_a_;
  LinPoly poly_;

  friend SpecialPP build_special(const Felt&);
};

SpecialPP build_special(const Felt& a);
// recognize a merged coefficient vector of the special shape; nullopt if the
// polynomial is not P(x) = x + x^2 + tr(x/a) for any valid a
std::optional<SpecialPP> match_special(const LinPoly& L);

// closed-form compositional inverse, merged coefficients (trace terms folded
// in); the two forms name the same polynomial through different index lists
LinPoly closed_inverse_B(const SpecialPP& P);
LinPoly closed_inverse_C(const SpecialPP& P);

// a = 1 specialization P1(x) = x + x^2 + tr(x): inverse has binary
// coefficients at even powers (n = 1 mod 4) or odd powers (n = 3 mod 4)
LinPoly p1_inverse(const Field& f);
// same polynomial via the parity weights (n+1)/2 and (n-1)/2
LinPoly p1_inverse_weighted_form(const Field& f);

// (i,0)-th cofactor of the Dickson matrix of P~, by the closed per-index
// formulas; a * ptilde_cofactor(P, i) is coefficient i of the inverse
Felt ptilde_cofactor(const SpecialPP& P, int i);

// m x m matrix with diag a_1..a_m, superdiagonal b_1..b_{m-1}, and last row
// (1, ..., 1, a_m)
struct BidiagOnesRowMatrix {
  std::vector<Felt> diag;       // a_1..a_m, m >= 2
  std::vector<Felt> superdiag;  // b_1..b_{m-1}
  std::vector<Felt> dense() const;
};

// det = prod(b) + sum_{i=1..m-2} a_1..a_i * b_{i+1}..b_{m-1} + prod(a);
// the char-2 specialization of the alternating-sign ring identity
Felt structured_det(const BidiagOnesRowMatrix& M);

}  // namespace linperm
