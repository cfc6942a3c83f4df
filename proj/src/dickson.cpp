#include "linperm/dickson.hpp"

#include <stdexcept>
#include <utility>

namespace linperm {

DicksonMatrix dickson_of(const LinPoly& L) {
  const Field& f = L.field();
  const int n = f.degree();
  std::vector<Felt> e;
  e.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  // row 0 is the coefficient vector; each later entry is the square of the
  // entry one up and one to the left (cyclically)
  for (int j = 0; j < n; ++j) e.push_back(L.coeff(j));
  for (int i = 1; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int pj = (j + n - 1) % n;
      e.push_back(square(e[static_cast<std::size_t>((i - 1) * n + pj)]));
    }
  }
  return DicksonMatrix(f, n, std::move(e));
}

Felt det_dense(std::vector<Felt> g, int dim, const Field& f) {
  auto at = [&](int i, int j) -> Felt& {
    return g[static_cast<std::size_t>(i) * static_cast<std::size_t>(dim) +
             static_cast<std::size_t>(j)];
  };
  Felt result = f.one();
  for (int col = 0; col < dim; ++col) {
    int pivot = -1;
    for (int r = col; r < dim; ++r) {
      if (!at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return f.zero();
    if (pivot != col) {
      for (int j = col; j < dim; ++j) std::swap(at(col, j), at(pivot, j));
    }
    result *= at(col, col);
    const Felt pinv = inv(at(col, col));
    for (int r = col + 1; r < dim; ++r) {
      if (at(r, col).is_zero()) continue;
      const Felt factor = at(r, col) * pinv;
      for (int j = col; j < dim; ++j) at(r, j) += factor * at(col, j);
    }
  }
  return result;
}

Felt det(const DicksonMatrix& M) { return det_dense(M.dense(), M.size(), M.field()); }

Felt cofactor_col0(const DicksonMatrix& M, int i) {
  const int n = M.size();
  if (i < 0 || i >= n) throw std::out_of_range("cofactor row index out of range");
  std::vector<Felt> minor;
  minor.reserve(static_cast<std::size_t>(n - 1) * static_cast<std::size_t>(n - 1));
  for (int r = 0; r < n; ++r) {
    if (r == i) continue;
    for (int c = 1; c < n; ++c) minor.push_back(M.at(r, c));
  }
  return det_dense(std::move(minor), n - 1, M.field());
}

namespace {

LinPoly inverse_from_cofactors(const LinPoly& L, bool parallel) {
  const Field& f = L.field();
  const int n = f.degree();
  const DicksonMatrix D = dickson_of(L);
  const Felt d = det(D);
  if (d.is_zero()) throw std::invalid_argument("not a permutation polynomial");
  const Felt dinv = inv(d);
  std::vector<Felt> out(static_cast<std::size_t>(n), f.zero());
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) {
      out[static_cast<std::size_t>(i)] = dinv * cofactor_col0(D, i);
    }
  } else {
    for (int i = 0; i < n; ++i) {
      out[static_cast<std::size_t>(i)] = dinv * cofactor_col0(D, i);
    }
  }
  return LinPoly(f, std::move(out));
}

}  // namespace

LinPoly generic_inverse(const LinPoly& L) { return inverse_from_cofactors(L, true); }

LinPoly generic_inverse_serial(const LinPoly& L) { return inverse_from_cofactors(L, false); }

bool is_permutation(const LinPoly& L) { return !det(dickson_of(L)).is_zero(); }

}  // namespace linperm
