#include "linperm/linpoly.hpp"

#include <stdexcept>
#include <utility>

namespace linperm {

LinPoly::LinPoly(Field f, std::vector<Felt> coeffs)
    : field_(std::move(f)), coeffs_(std::move(coeffs)) {
  if (static_cast<int>(coeffs_.size()) != field_.degree()) {
    throw std::invalid_argument("coefficient count must equal the field degree");
  }
  for (const Felt& c : coeffs_) {
    if (c.field() != field_) throw std::invalid_argument("field mismatch");
  }
}

LinPoly LinPoly::zero(const Field& f) {
  return LinPoly(f, std::vector<Felt>(static_cast<std::size_t>(f.degree()), f.zero()));
}

LinPoly LinPoly::identity(const Field& f) {
  std::vector<Felt> c(static_cast<std::size_t>(f.degree()), f.zero());
  c[0] = f.one();
  return LinPoly(f, std::move(c));
}

LinPoly LinPoly::from_mask(const Field& f, std::uint64_t mask) {
  std::vector<Felt> c(static_cast<std::size_t>(f.degree()), f.zero());
  for (int i = 0; i < f.degree() && i < kWordBits; ++i) {
    if ((mask >> i) & 1u) c[static_cast<std::size_t>(i)] = f.one();
  }
  return LinPoly(f, std::move(c));
}

Felt LinPoly::operator()(const Felt& x) const {
  if (x.field() != field_) throw std::invalid_argument("field mismatch");
  Felt acc = coeffs_[0] * x;
  Felt conj = x;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    conj = square(conj);
    acc += coeffs_[i] * conj;
  }
  return acc;
}

bool LinPoly::is_zero() const {
  for (const Felt& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool LinPoly::is_identity() const {
  if (!coeffs_[0].is_one()) return false;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) return false;
  }
  return true;
}

bool operator==(const LinPoly& a, const LinPoly& b) {
  if (a.field_ != b.field_) throw std::invalid_argument("field mismatch");
  return a.coeffs_ == b.coeffs_;
}

LinPoly compose(const LinPoly& L, const LinPoly& M) {
  if (L.field() != M.field()) throw std::invalid_argument("field mismatch");
  const Field& f = L.field();
  const int n = f.degree();
  // conj[i][j] = m_j^(2^i), built by squaring the previous row
  std::vector<std::vector<Felt>> conj(static_cast<std::size_t>(n));
  conj[0] = M.coeffs();
  for (int i = 1; i < n; ++i) {
    conj[static_cast<std::size_t>(i)].reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
      conj[static_cast<std::size_t>(i)].push_back(
          square(conj[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)]));
    }
  }
  std::vector<Felt> out(static_cast<std::size_t>(n), f.zero());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int k = (i + j) % n;
      out[static_cast<std::size_t>(k)] +=
          L.coeff(i) * conj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
  }
  return LinPoly(f, std::move(out));
}

LinPoly operator+(const LinPoly& L, const LinPoly& M) {
  if (L.field() != M.field()) throw std::invalid_argument("field mismatch");
  std::vector<Felt> out;
  out.reserve(L.coeffs().size());
  for (int i = 0; i < L.length(); ++i) out.push_back(L.coeff(i) + M.coeff(i));
  return LinPoly(L.field(), std::move(out));
}

LinPoly scale(const Felt& c, const LinPoly& L) {
  if (c.field() != L.field()) throw std::invalid_argument("field mismatch");
  std::vector<Felt> out;
  out.reserve(L.coeffs().size());
  for (int i = 0; i < L.length(); ++i) out.push_back(c * L.coeff(i));
  return LinPoly(L.field(), std::move(out));
}

Bin2Poly::Bin2Poly(int n) : n_(n) {
  if (n < 1 || n > kMaxDegreeHard) throw std::invalid_argument("bad ring degree");
}

Bin2Poly::Bin2Poly(int n, std::initializer_list<int> exponents) : Bin2Poly(n) {
  for (int e : exponents) set(e);
}

void Bin2Poly::set(int i) {
  if (i < 0 || i >= n_) throw std::invalid_argument("exponent out of range");
  words_[static_cast<std::size_t>(i) / kWordBits] |= std::uint64_t{1} << (i % kWordBits);
}

bool Bin2Poly::is_one() const { return *this == one(n_); }

std::string Bin2Poly::to_string() const {
  std::string s;
  for (int i = 0; i < n_; ++i) {
    if (!bit(i)) continue;
    if (!s.empty()) s += " + ";
    if (i == 0) s += "1";
    else if (i == 1) s += "x";
    else s += "x^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

bool operator==(const Bin2Poly& a, const Bin2Poly& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("ring mismatch");
  return a.words_ == b.words_;
}

Bin2Poly operator*(const Bin2Poly& a, const Bin2Poly& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("ring mismatch");
  Bin2Poly r(a.n_);
  for (int i = 0; i < a.n_; ++i) {
    if (!a.bit(i)) continue;
    for (int j = 0; j < a.n_; ++j) {
      if (!b.bit(j)) continue;
      const int k = (i + j) % a.n_;
      r.words_[static_cast<std::size_t>(k) / kWordBits] ^= std::uint64_t{1}
                                                           << (k % kWordBits);
    }
  }
  return r;
}

Bin2Poly conventional_associate(const LinPoly& L) {
  Bin2Poly r(L.field().degree());
  for (int i = 0; i < L.length(); ++i) {
    const Felt& c = L.coeff(i);
    if (c.is_one()) {
      r.set(i);
    } else if (!c.is_zero()) {
      throw std::invalid_argument("not a GF(2)-polynomial");
    }
  }
  return r;
}

Bin2Poly associate_product(const Bin2Poly& p, const Bin2Poly& q) { return p * q; }

}  // namespace linperm
