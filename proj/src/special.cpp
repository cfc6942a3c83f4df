#include "linperm/special.hpp"

#include <bit>
#include <stdexcept>
#include <utility>

namespace linperm {

IndexSet::IndexSet(int n) : n_(n) {
  if (n < 1 || n > kMaxDegreeHard) throw std::invalid_argument("bad universe size");
}

IndexSet::IndexSet(int n, std::initializer_list<int> members) : IndexSet(n) {
  for (int i : members) insert(i);
}

IndexSet IndexSet::full(int n) {
  IndexSet s(n);
  for (int i = 0; i < n; ++i) s.insert(i);
  return s;
}

IndexSet IndexSet::ap(int n, int first, int last) {
  IndexSet s(n);
  for (int v = first; v <= last; v += 2) s.insert(v);
  return s;
}

void IndexSet::insert(int i) {
  if (i < 0 || i >= n_) throw std::invalid_argument("index out of range");
  words_[static_cast<std::size_t>(i) / kWordBits] |= std::uint64_t{1} << (i % kWordBits);
}

int IndexSet::count() const {
  int c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

std::vector<int> IndexSet::members() const {
  std::vector<int> m;
  for (int i = 0; i < n_; ++i) {
    if (contains(i)) m.push_back(i);
  }
  return m;
}

IndexSet IndexSet::shifted(int k) const {
  k %= n_;
  if (k < 0) k += n_;
  IndexSet s(n_);
  for (int i = 0; i < n_; ++i) {
    if (contains(i)) s.insert((i + k) % n_);
  }
  return s;
}

IndexSet operator^(const IndexSet& a, const IndexSet& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("universe mismatch");
  IndexSet r(a.n_);
  for (std::size_t w = 0; w < r.words_.size(); ++w) r.words_[w] = a.words_[w] ^ b.words_[w];
  return r;
}

IndexSet operator&(const IndexSet& a, const IndexSet& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("universe mismatch");
  IndexSet r(a.n_);
  for (std::size_t w = 0; w < r.words_.size(); ++w) r.words_[w] = a.words_[w] & b.words_[w];
  return r;
}

IndexSet operator|(const IndexSet& a, const IndexSet& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("universe mismatch");
  IndexSet r(a.n_);
  for (std::size_t w = 0; w < r.words_.size(); ++w) r.words_[w] = a.words_[w] | b.words_[w];
  return r;
}

bool operator==(const IndexSet& a, const IndexSet& b) {
  return a.n_ == b.n_ && a.words_ == b.words_;
}

Felt conj_sum(const Felt& c, const IndexSet& I) {
  if (I.universe() != c.field().degree()) throw std::invalid_argument("universe mismatch");
  Felt acc = c.field().zero();
  Felt conj = c;
  for (int i = 0; i < I.universe(); ++i) {
    if (I.contains(i)) acc += conj;
    conj = square(conj);
  }
  return acc;
}

Felt conj_prod(const Felt& c, const IndexSet& I) {
  if (I.universe() != c.field().degree()) throw std::invalid_argument("universe mismatch");
  Felt acc = c.field().one();
  Felt conj = c;
  for (int i = 0; i < I.universe(); ++i) {
    if (I.contains(i)) acc *= conj;
    conj = square(conj);
  }
  return acc;
}

SpecialPP build_special(const Felt& a) {
  const Field& f = a.field();
  const int n = f.degree();
  if (n % 2 == 0) throw std::invalid_argument("n must be odd");
  if (a.is_zero()) throw std::invalid_argument("a must be nonzero");
  const Felt ia = inv(a);
  if (!trace(ia).is_one()) throw std::invalid_argument("PP condition violated");
  // coefficient i of x + x^2 + tr(x/a) is [i < 2] + (1/a)^(2^i)
  std::vector<Felt> coeffs;
  coeffs.reserve(static_cast<std::size_t>(n));
  Felt conj = ia;
  for (int i = 0; i < n; ++i) {
    coeffs.push_back(i < 2 ? conj + f.one() : conj);
    conj = square(conj);
  }
  return SpecialPP(a, ia, LinPoly(f, std::move(coeffs)));
}

std::optional<SpecialPP> match_special(const LinPoly& L) {
  const Field& f = L.field();
  const int n = f.degree();
  if (n % 2 == 0 || n < 3) return std::nullopt;
  // coefficient 2 is (1/a)^4, so 1/a is its (n-2)-fold Frobenius image
  const Felt ia = frob(L.coeff(2), n - 2);
  if (ia.is_zero() || !trace(ia).is_one()) return std::nullopt;
  SpecialPP P = build_special(inv(ia));
  if (P.poly() != L) return std::nullopt;
  return P;
}

LinPoly SpecialPP::normalized_transform() const {
  const Field& f = field();
  const int n = f.degree();
  std::vector<Felt> coeffs;
  coeffs.reserve(static_cast<std::size_t>(n));
  coeffs.push_back(a_ + f.one());
  coeffs.push_back(square(a_) + f.one());
  for (int i = 2; i < n; ++i) coeffs.push_back(f.one());
  return LinPoly(f, std::move(coeffs));
}

namespace {

// index list of the theorem's coefficient b_i (and of the cofactor lemmas,
// which share it for every i)
IndexSet b_index_list(int n, int i) {
  if (i == 0) return IndexSet::ap(n, 2, n - 1);
  if (i % 2 == 1) return IndexSet::ap(n, 1, i) | IndexSet::ap(n, i + 1, n - 1);
  return IndexSet::ap(n, 1, i - 1) | IndexSet::ap(n, i + 2, n - 1);
}

}  // namespace

LinPoly closed_inverse_B(const SpecialPP& P) {
  const Field& f = P.field();
  const int n = f.degree();
  const Felt one = f.one();
  std::vector<Felt> coeffs;
  coeffs.reserve(static_cast<std::size_t>(n));
  // merged: the +tr(x) term adds 1 to every coefficient
  for (int i = 0; i < n; ++i) {
    coeffs.push_back(conj_sum(P.a_inverse(), b_index_list(n, i)) + one);
  }
  return LinPoly(f, std::move(coeffs));
}

LinPoly closed_inverse_C(const SpecialPP& P) {
  const Field& f = P.field();
  const int n = f.degree();
  const Felt& ia = P.a_inverse();
  const Felt one = f.one();
  std::vector<Felt> coeffs;
  coeffs.reserve(static_cast<std::size_t>(n));
  Felt conj = ia;  // (1/a)^(2^i), the merged tr(x/a) contribution
  for (int i = 0; i < n; ++i) {
    Felt ci = f.zero();
    if (i == 0) {
      ci = conj_sum(ia, IndexSet::ap(n, 1, n - 2));
    } else if (i % 2 == 1) {
      ci = one + conj_sum(ia, IndexSet::ap(n, 1, i - 2) | IndexSet::ap(n, i + 1, n - 1));
    } else {
      ci = conj_sum(ia, IndexSet::ap(n, 0, i - 2) | IndexSet::ap(n, i + 1, n - 2));
    }
    coeffs.push_back(ci + conj);
    conj = square(conj);
  }
  return LinPoly(f, std::move(coeffs));
}

LinPoly p1_inverse(const Field& f) {
  const int n = f.degree();
  if (n % 2 == 0) throw std::invalid_argument("n must be odd");
  std::vector<Felt> coeffs(static_cast<std::size_t>(n), f.zero());
  if (n % 4 == 1) {
    for (int i = 0; i < n; i += 2) coeffs[static_cast<std::size_t>(i)] = f.one();
  } else {
    for (int i = 1; i < n; i += 2) coeffs[static_cast<std::size_t>(i)] = f.one();
  }
  return LinPoly(f, std::move(coeffs));
}

LinPoly p1_inverse_weighted_form(const Field& f) {
  const int n = f.degree();
  if (n % 2 == 0) throw std::invalid_argument("n must be odd");
  const bool even_weight = ((n + 1) / 2) % 2 == 1;
  const bool odd_weight = ((n - 1) / 2) % 2 == 1;
  std::vector<Felt> coeffs(static_cast<std::size_t>(n), f.zero());
  for (int i = 0; i < n; ++i) {
    if (i % 2 == 0 ? even_weight : odd_weight) coeffs[static_cast<std::size_t>(i)] = f.one();
  }
  return LinPoly(f, std::move(coeffs));
}

Felt ptilde_cofactor(const SpecialPP& P, int i) {
  const int n = P.field().degree();
  if (i < 0 || i >= n) throw std::out_of_range("cofactor index out of range");
  const Felt& ia = P.a_inverse();
  IndexSet list(n);
  if (i == 0) {
    list = IndexSet::ap(n, 2, n - 1);
  } else if (i == n - 1) {
    list = IndexSet::ap(n, 1, n - 2);
  } else if (i == n - 2) {
    list = IndexSet::ap(n, 1, n - 2);
    list.insert(n - 1);
  } else if (i == 1) {
    list = IndexSet(n, {1}) | IndexSet::ap(n, 2, n - 1);
  } else if (i % 2 == 0) {
    list = IndexSet::ap(n, 1, i - 1) | IndexSet::ap(n, i + 2, n - 1);
  } else {
    list = IndexSet::ap(n, 1, i) | IndexSet::ap(n, i + 1, n - 1);
  }
  return ia * (P.field().one() + conj_sum(ia, list));
}

std::vector<Felt> BidiagOnesRowMatrix::dense() const {
  const std::size_t m = diag.size();
  if (m < 2) throw std::invalid_argument("m must be at least 2");
  if (superdiag.size() != m - 1) throw std::invalid_argument("superdiagonal length mismatch");
  const Field& f = diag[0].field();
  std::vector<Felt> g(m * m, f.zero());
  for (std::size_t i = 0; i + 1 < m; ++i) {
    g[i * m + i] = diag[i];
    g[i * m + i + 1] = superdiag[i];
  }
  for (std::size_t j = 0; j + 1 < m; ++j) g[(m - 1) * m + j] = f.one();
  g[m * m - 1] = diag[m - 1];
  return g;
}

Felt structured_det(const BidiagOnesRowMatrix& M) {
  const std::size_t m = M.diag.size();
  if (m < 2) throw std::invalid_argument("m must be at least 2");
  if (M.superdiag.size() != m - 1) throw std::invalid_argument("superdiagonal length mismatch");
  const Field& f = M.diag[0].field();
  // suffix products of b, so term i is a_1..a_i * b_{i+1}..b_{m-1}
  std::vector<Felt> bsuf(m, f.one());
  for (std::size_t k = m - 1; k-- > 0;) bsuf[k] = M.superdiag[k] * bsuf[k + 1];
  Felt result = bsuf[0];  // product of all b
  Felt apre = f.one();
  for (std::size_t i = 1; i + 1 < m; ++i) {
    apre *= M.diag[i - 1];
    result += apre * bsuf[i];
  }
  apre *= M.diag[m - 2];
  result += apre * M.diag[m - 1];  // product of all a
  return result;
}

}  // namespace linperm
