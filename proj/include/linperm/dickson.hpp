#pragma once

#include <vector>

#include "linperm/linpoly.hpp"

namespace linperm {

// D_L: the n x n matrix with (i,j) entry a_((j-i) mod n)^(2^i). L is a
// permutation polynomial iff D_L is non-singular.
class DicksonMatrix {
 public:
  int size() const { return n_; }
  const Field& field() const { return field_; }
  const Felt& at(int i, int j) const {
    return entries_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
                    static_cast<std::size_t>(j)];
  }
  // row-major copy, for elimination and debug dumps
  std::vector<Felt> dense() const { return entries_; }

 private:
  DicksonMatrix(Field f, int n, std::vector<Felt> e)
      : field_(std::move(f)), n_(n), entries_(std::move(e)) {}
  Field field_;
  int n_;
  std::vector<Felt> entries_;

  friend DicksonMatrix dickson_of(const LinPoly&);
};

DicksonMatrix dickson_of(const LinPoly& L);

// determinant of a dense row-major dim x dim grid by Gaussian elimination
// (first-nonzero pivot; characteristic 2, so no signs)
Felt det_dense(std::vector<Felt> grid, int dim, const Field& f);

Felt det(const DicksonMatrix& M);
// determinant of M with row i and column 0 deleted (char 2: cofactor = minor)
Felt cofactor_col0(const DicksonMatrix& M, int i);

// Compositional inverse via Dickson cofactors: coefficient i of L^(-1) is
// cofactor_col0(D_L, i) / det. Throws on singular D_L. The default entry
// point computes the n cofactors in parallel when OpenMP is enabled; the
// serial variant is the reference the tests compare against.
LinPoly generic_inverse(const LinPoly& L);
LinPoly generic_inverse_serial(const LinPoly& L);

bool is_permutation(const LinPoly& L);

}  // namespace linperm
