#include "linperm/field.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>
#include <utility>
#include <vector>

namespace linperm {

namespace {

// ---- GF(2)[t] helpers on fixed word arrays ----
// Wide enough for every intermediate here: euclid and modular squaring keep
// degrees below 2n, and candidates/moduli stay below kWords bits.
using Wide = std::array<std::uint64_t, 2 * kWords>;

int degree_of(const Wide& p) {
  for (int w = 2 * kWords - 1; w >= 0; --w) {
    if (p[w]) return w * kWordBits + 63 - __builtin_clzll(p[w]);
  }
  return -1;
}

bool get_bit(const Wide& p, int i) {
  return (p[static_cast<std::size_t>(i) / kWordBits] >> (i % kWordBits)) & 1u;
}

void set_bit(Wide& p, int i) {
  p[static_cast<std::size_t>(i) / kWordBits] |= std::uint64_t{1} << (i % kWordBits);
}

void xor_shifted(Wide& a, const Wide& b, int shift) {
  const int ws = shift / kWordBits, bs = shift % kWordBits;
  for (int w = 2 * kWords - 1 - ws; w >= 0; --w) {
    std::uint64_t v = b[w] << bs;
    if (bs && w > 0) v |= b[w - 1] >> (kWordBits - bs);
    a[w + ws] ^= v;
  }
}

void reduce_mod(Wide& a, const Wide& f, int degf) {
  for (int d = degree_of(a); d >= degf; d = degree_of(a)) {
    xor_shifted(a, f, d - degf);
  }
}

Wide gcd_poly(Wide a, Wide b) {
  while (degree_of(b) >= 0) {
    reduce_mod(a, b, degree_of(b));
    std::swap(a, b);
  }
  return a;
}

// square of a GF(2) polynomial: bit i -> bit 2i
Wide square_poly(const Wide& a) {
  Wide r{};
  const int d = degree_of(a);
  for (int i = 0; i <= d; ++i) {
    if (get_bit(a, i)) set_bit(r, 2 * i);
  }
  return r;
}

std::vector<int> prime_divisors(int n) {
  std::vector<int> ps;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

// x^{2^n} == x mod f, and gcd(x^{2^(n/p)} - x, f) = 1 for every prime p | n
bool is_irreducible(const Wide& f, int n) {
  if (degree_of(f) != n || !get_bit(f, 0)) return false;
  Wide x{};
  set_bit(x, 1);
  std::vector<int> checkpoints;
  for (int p : prime_divisors(n)) checkpoints.push_back(n / p);
  Wide u = x;
  for (int k = 1; k <= n; ++k) {
    u = square_poly(u);
    reduce_mod(u, f, n);
    for (int cp : checkpoints) {
      if (k == cp) {
        Wide diff = u;
        diff[0] ^= 2;  // u + x
        if (degree_of(gcd_poly(diff, f)) != 0) return false;
      }
    }
  }
  return u == x;
}

Wide widen(const Words& w) {
  Wide r{};
  for (int i = 0; i < kWords; ++i) r[i] = w[i];
  return r;
}

Words narrow(const Wide& w) {
  Words r{};
  for (int i = 0; i < kWords; ++i) r[i] = w[i];
  return r;
}

int words_for(int n) { return n / kWordBits + 1; }

void check_same(const Field& a, const Field& b) {
  if (a != b) throw std::invalid_argument("field mismatch");
}

Words parse_hex(std::string_view hex, int max_bits, const char* what) {
  if (hex.size() >= 2 && hex[0] == '0' && (hex[1] == 'x' || hex[1] == 'X')) {
    hex.remove_prefix(2);
  }
  if (hex.empty()) throw std::invalid_argument(std::string(what) + ": empty hex string");
  Words w{};
  int bit = 0;
  // low digit last: walk from the end
  for (std::size_t pos = 0; pos < hex.size(); ++pos) {
    const char c = hex[hex.size() - 1 - pos];
    int v;
    if (c >= '0' && c <= '9') v = c - '0';
    else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F') v = c - 'A' + 10;
    else throw std::invalid_argument(std::string(what) + ": bad hex digit");
    bit = static_cast<int>(pos) * 4;
    if (v && bit + 3 >= max_bits) {
      // fine if the high nibble bits beyond the limit are clear
      for (int j = 0; j < 4; ++j) {
        if ((v >> j & 1) && bit + j >= max_bits) {
          throw std::invalid_argument(std::string(what) + ": value out of range");
        }
      }
    }
    if (bit < kWords * kWordBits && v) {
      w[static_cast<std::size_t>(bit) / kWordBits] |=
          static_cast<std::uint64_t>(v) << (bit % kWordBits);
    }
  }
  return w;
}

std::string words_to_hex(const Words& w, int nbits) {
  const int digits = (nbits + 3) / 4;
  std::string s;
  bool started = false;
  for (int d = digits - 1; d >= 0; --d) {
    const int bit = d * 4;
    int v = 0;
    for (int j = 0; j < 4 && bit + j < kWords * kWordBits; ++j) {
      if ((w[static_cast<std::size_t>(bit + j) / kWordBits] >> ((bit + j) % kWordBits)) & 1u) {
        v |= 1 << j;
      }
    }
    if (v || started || d == 0) {
      s += "0123456789abcdef"[v];
      started = true;
    }
  }
  return "0x" + s;
}

std::shared_ptr<const detail::FieldRep> make_rep(int n, const Words& modulus) {
  auto rep = std::make_shared<detail::FieldRep>();
  rep->n = n;
  rep->modulus = modulus;
  return rep;
}

}  // namespace

int max_degree() {
  if (const char* env = std::getenv("LINPERM_MAX_N")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 2 && v <= kMaxDegreeHard) return static_cast<int>(v);
  }
  return kDefaultMaxDegree;
}

Field make_field(int n) {
  if (n < 2) throw std::invalid_argument("degree too small");
  if (n > max_degree()) {
    throw std::invalid_argument("degree too large (cap " + std::to_string(max_degree()) +
                                ", override with LINPERM_MAX_N)");
  }
  // integer-least irreducible: scan odd low parts (even constant term
  // makes t a factor)
  const std::uint64_t limit =
      n < 21 ? (std::uint64_t{1} << n) : (std::uint64_t{1} << 21);
  for (std::uint64_t k = 1; k < limit; k += 2) {
    Wide cand{};
    cand[0] = k;
    set_bit(cand, n);
    if (is_irreducible(cand, n)) {
      return Field(make_rep(n, narrow(cand)));
    }
  }
  throw std::invalid_argument("no irreducible modulus found");  // unreachable for n <= 511
}

Field make_field(int n, std::string_view modulus_hex) {
  if (n < 2) throw std::invalid_argument("degree too small");
  if (n > max_degree()) {
    throw std::invalid_argument("degree too large (cap " + std::to_string(max_degree()) +
                                ", override with LINPERM_MAX_N)");
  }
  const Words m = parse_hex(modulus_hex, n + 1, "modulus");
  const Wide wm = widen(m);
  if (!is_irreducible(wm, n)) throw std::invalid_argument("not irreducible");
  return Field(make_rep(n, m));
}

std::string Field::modulus_hex() const { return words_to_hex(rep_->modulus, rep_->n + 1); }

Felt Field::zero() const { return Felt(*this, Words{}); }

Felt Field::one() const {
  Words w{};
  w[0] = 1;
  return Felt(*this, w);
}

Felt Field::from_uint(std::uint64_t v) const {
  if (rep_->n < kWordBits && (v >> rep_->n) != 0) {
    throw std::invalid_argument("element out of range");
  }
  Words w{};
  w[0] = v;
  return Felt(*this, w);
}

Felt Field::from_hex(std::string_view hex) const {
  return Felt(*this, parse_hex(hex, rep_->n, "element"));
}

bool Felt::is_zero() const {
  for (auto w : words_) {
    if (w) return false;
  }
  return true;
}

bool Felt::is_one() const {
  if (words_[0] != 1) return false;
  for (int i = 1; i < kWords; ++i) {
    if (words_[i]) return false;
  }
  return true;
}

std::string Felt::to_hex() const { return words_to_hex(words_, field_.degree()); }

std::uint64_t Felt::to_uint() const {
  if (field_.degree() > kWordBits) throw std::invalid_argument("degree exceeds 64 bits");
  return words_[0];
}

bool operator==(const Felt& a, const Felt& b) {
  check_same(a.field_, b.field_);
  return a.words_ == b.words_;
}

Felt operator+(const Felt& a, const Felt& b) {
  check_same(a.field_, b.field_);
  Felt r = a;
  for (int i = 0; i < kWords; ++i) r.words_[i] ^= b.words_[i];
  return r;
}

Felt operator*(const Felt& a, const Felt& b) {
  check_same(a.field_, b.field_);
  const detail::FieldRep& rep = *a.field_.rep_;
  const int n = rep.n;
  const int nw = words_for(n);
  const std::size_t topw = static_cast<std::size_t>(n) / kWordBits;
  const std::uint64_t topmask = std::uint64_t{1} << (n % kWordBits);

  Words acc{};
  Words cur = a.words_;
  for (int i = 0; i < n; ++i) {
    if (b.bit(i)) {
      for (int w = 0; w < nw; ++w) acc[w] ^= cur[w];
    }
    // cur = cur * t mod modulus
    std::uint64_t carry = 0;
    for (int w = 0; w < nw; ++w) {
      const std::uint64_t next = cur[w] >> 63;
      cur[w] = (cur[w] << 1) | carry;
      carry = next;
    }
    if (cur[topw] & topmask) {
      for (int w = 0; w < nw; ++w) cur[w] ^= rep.modulus[w];
    }
  }
  return Felt(a.field_, acc);
}

Felt square(const Felt& x) { return x * x; }

Felt inv(const Felt& x) {
  if (x.is_zero()) throw std::domain_error("zero has no inverse");
  const detail::FieldRep& rep = *x.field_.rep_;
  // extended euclid over GF(2)[t]
  Wide u = widen(x.words_);
  Wide v = widen(rep.modulus);
  Wide g1{}, g2{};
  g1[0] = 1;
  while (degree_of(u) > 0) {
    int j = degree_of(u) - degree_of(v);
    if (j < 0) {
      std::swap(u, v);
      std::swap(g1, g2);
      j = -j;
    }
    xor_shifted(u, v, j);
    xor_shifted(g1, g2, j);
  }
  return Felt(x.field_, narrow(g1));
}

Felt frob(const Felt& x, int k) {
  const int n = x.field().degree();
  k %= n;
  if (k < 0) k += n;
  Felt r = x;
  for (int i = 0; i < k; ++i) r = square(r);
  return r;
}

Felt trace(const Felt& x) {
  Felt acc = x;
  Felt cur = x;
  for (int i = 1; i < x.field().degree(); ++i) {
    cur = square(cur);
    acc += cur;
  }
  return acc;
}

Felt norm(const Felt& x) {
  Felt acc = x;
  Felt cur = x;
  for (int i = 1; i < x.field().degree(); ++i) {
    cur = square(cur);
    acc *= cur;
  }
  return acc;
}

}  // namespace linperm
