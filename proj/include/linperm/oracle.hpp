#pragma once

#include <cstdint>
#include <vector>

#include "linperm/linpoly.hpp"

namespace linperm {

// exhaustive operations are capped here (about a million evaluations)
inline constexpr int kMaxTableDegree = 20;

// value table of a map on GF(2^n), indexed by the integer encoding of the
// input element
class PermTable {
 public:
  PermTable(int n, std::vector<std::uint32_t> images);

  int degree() const { return n_; }
  std::size_t size() const { return images_.size(); }
  std::uint32_t image(std::uint32_t x) const { return images_[x]; }
  const std::vector<std::uint32_t>& images() const { return images_; }
  bool is_bijective() const;

  friend bool operator==(const PermTable& a, const PermTable& b) {
    return a.n_ == b.n_ && a.images_ == b.images_;
  }
  friend bool operator!=(const PermTable& a, const PermTable& b) { return !(a == b); }

 private:
  int n_;
  std::vector<std::uint32_t> images_;
};

// images[x] = L(x) for every field element; the default entry point
// partitions the input range across OpenMP threads, the serial variant is
// the reference the tests compare against
PermTable table_of(const LinPoly& L);
PermTable table_of_serial(const LinPoly& L);

// inverse permutation; throws if the table is not bijective
PermTable invert_table(const PermTable& T);

// true iff L(M(x)) = x for all 2^n elements
bool verify_pointwise(const LinPoly& L, const LinPoly& M);

// recover the unique linearized polynomial with the given value table by
// solving the Moore system on the polynomial basis
LinPoly linpoly_from_table(const PermTable& T, const Field& f);

}  // namespace linperm
