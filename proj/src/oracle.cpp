#include "linperm/oracle.hpp"

#include <stdexcept>
#include <utility>

namespace linperm {

namespace {

void check_table_degree(int n) {
  if (n > kMaxTableDegree) {
    throw std::invalid_argument("n too large for exhaustive tables (cap " +
                                std::to_string(kMaxTableDegree) + ")");
  }
}

PermTable build_table(const LinPoly& L, bool parallel) {
  const Field& f = L.field();
  const int n = f.degree();
  check_table_degree(n);
  const std::int64_t size = std::int64_t{1} << n;
  std::vector<std::uint32_t> images(static_cast<std::size_t>(size));
  if (parallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t x = 0; x < size; ++x) {
      images[static_cast<std::size_t>(x)] =
          static_cast<std::uint32_t>(L(f.from_uint(static_cast<std::uint64_t>(x))).to_uint());
    }
  } else {
    for (std::int64_t x = 0; x < size; ++x) {
      images[static_cast<std::size_t>(x)] =
          static_cast<std::uint32_t>(L(f.from_uint(static_cast<std::uint64_t>(x))).to_uint());
    }
  }
  return PermTable(n, std::move(images));
}

}  // namespace

PermTable::PermTable(int n, std::vector<std::uint32_t> images)
    : n_(n), images_(std::move(images)) {
  check_table_degree(n);
  if (images_.size() != (std::size_t{1} << n)) {
    throw std::invalid_argument("table size must be 2^n");
  }
}

bool PermTable::is_bijective() const {
  std::vector<bool> seen(images_.size(), false);
  for (std::uint32_t y : images_) {
    if (y >= images_.size() || seen[y]) return false;
    seen[y] = true;
  }
  return true;
}

PermTable table_of(const LinPoly& L) { return build_table(L, true); }

PermTable table_of_serial(const LinPoly& L) { return build_table(L, false); }

PermTable invert_table(const PermTable& T) {
  if (!T.is_bijective()) throw std::invalid_argument("table is not bijective");
  std::vector<std::uint32_t> inv(T.size());
  for (std::size_t x = 0; x < T.size(); ++x) {
    inv[T.image(static_cast<std::uint32_t>(x))] = static_cast<std::uint32_t>(x);
  }
  return PermTable(T.degree(), std::move(inv));
}

bool verify_pointwise(const LinPoly& L, const LinPoly& M) {
  if (L.field() != M.field()) throw std::invalid_argument("field mismatch");
  const Field& f = L.field();
  check_table_degree(f.degree());
  const std::int64_t size = std::int64_t{1} << f.degree();
  bool ok = true;
#pragma omp parallel for schedule(static) reduction(&& : ok)
  for (std::int64_t x = 0; x < size; ++x) {
    const Felt e = f.from_uint(static_cast<std::uint64_t>(x));
    ok = ok && (L(M(e)) == e);
  }
  return ok;
}

LinPoly linpoly_from_table(const PermTable& T, const Field& f) {
  const int n = f.degree();
  if (n != T.degree()) throw std::invalid_argument("degree mismatch");
  // Moore system on the basis 1, t, .., t^(n-1): row j states
  // sum_i c_i * (t^j)^(2^i) = T[t^j]; the basis makes it non-singular
  const std::size_t dim = static_cast<std::size_t>(n);
  std::vector<Felt> m;
  m.reserve(dim * dim);
  std::vector<Felt> rhs;
  rhs.reserve(dim);
  for (int j = 0; j < n; ++j) {
    const Felt bj = f.from_uint(std::uint64_t{1} << j);
    Felt conj = bj;
    for (int i = 0; i < n; ++i) {
      m.push_back(conj);
      conj = square(conj);
    }
    rhs.push_back(f.from_uint(T.image(std::uint32_t{1} << j)));
  }
  // gaussian elimination with the augmented column
  auto at = [&](std::size_t r, std::size_t c) -> Felt& { return m[r * dim + c]; };
  for (std::size_t col = 0; col < dim; ++col) {
    std::size_t pivot = col;
    while (pivot < dim && at(pivot, col).is_zero()) ++pivot;
    if (pivot == dim) throw std::invalid_argument("singular Moore system");
    if (pivot != col) {
      for (std::size_t c = col; c < dim; ++c) std::swap(at(col, c), at(pivot, c));
      std::swap(rhs[col], rhs[pivot]);
    }
    const Felt pinv = inv(at(col, col));
    for (std::size_t c = col; c < dim; ++c) at(col, c) *= pinv;
    rhs[col] *= pinv;
    for (std::size_t r = 0; r < dim; ++r) {
      if (r == col || at(r, col).is_zero()) continue;
      const Felt factor = at(r, col);
      for (std::size_t c = col; c < dim; ++c) at(r, c) += factor * at(col, c);
      rhs[r] += factor * rhs[col];
    }
  }
  return LinPoly(f, std::move(rhs));
}

}  // namespace linperm
