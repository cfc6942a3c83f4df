#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

namespace linperm {

// Element storage is a fixed array of 64-bit words, enough for degrees up to
// kMaxDegreeHard. The runtime cap is kDefaultMaxDegree unless the
// LINPERM_MAX_N environment variable raises it (never past the hard limit).
inline constexpr int kWordBits = 64;
inline constexpr int kWords = 8;
inline constexpr int kMaxDegreeHard = kWords * kWordBits - 1;  // modulus needs n+1 bits
inline constexpr int kDefaultMaxDegree = 257;

using Words = std::array<std::uint64_t, kWords>;

// Current degree cap (reads LINPERM_MAX_N on every call).
int max_degree();

namespace detail {
struct FieldRep {
  int n;
  Words modulus;  // bit i = coefficient of t^i, bit n set
};
}  // namespace detail

class Felt;

// GF(2^n) in the polynomial basis t^0..t^(n-1). Immutable and cheap to copy;
// two Field values interoperate iff degree and modulus agree.
class Field {
 public:
  Field() = default;

  int degree() const { return rep_->n; }
  std::string modulus_hex() const;

  Felt zero() const;
  Felt one() const;
  // Low bits of `v` as element coefficients; requires v < 2^n.
  Felt from_uint(std::uint64_t v) const;
  // Lowercase hex, LSB = constant coefficient, optional 0x prefix.
  Felt from_hex(std::string_view hex) const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.rep_->n == b.rep_->n && a.rep_->modulus == b.rep_->modulus;
  }
  friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

 private:
  explicit Field(std::shared_ptr<const detail::FieldRep> rep) : rep_(std::move(rep)) {}
  std::shared_ptr<const detail::FieldRep> rep_;

  friend Field make_field(int);
  friend Field make_field(int, std::string_view);
  friend Felt operator*(const Felt&, const Felt&);
  friend Felt inv(const Felt&);
  friend class Felt;
};

// Field with the integer-least irreducible modulus of degree n.
Field make_field(int n);
// Field with the given modulus (hex bit vector); rejects reducible input.
Field make_field(int n, std::string_view modulus_hex);

// An element of GF(2^n), bound to its field. Mixing elements of different
// fields throws.
class Felt {
 public:
  Felt() = default;

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;
  bool bit(int i) const {
    return (words_[static_cast<std::size_t>(i) / kWordBits] >> (i % kWordBits)) & 1u;
  }

  std::string to_hex() const;
  // Integer encoding of the bit vector; requires degree <= 64.
  std::uint64_t to_uint() const;

  friend Felt operator+(const Felt& a, const Felt& b);
  friend Felt operator*(const Felt& a, const Felt& b);
  Felt& operator+=(const Felt& b) { return *this = *this + b; }
  Felt& operator*=(const Felt& b) { return *this = *this * b; }

  friend bool operator==(const Felt& a, const Felt& b);
  friend bool operator!=(const Felt& a, const Felt& b) { return !(a == b); }

 private:
  Felt(Field f, const Words& w) : field_(std::move(f)), words_(w) {}
  Field field_;
  Words words_{};

  friend class Field;
  friend Felt inv(const Felt&);
  friend Felt square(const Felt&);
};

Felt inv(const Felt& x);              // throws on zero
Felt square(const Felt& x);
Felt frob(const Felt& x, int k);      // x^(2^k), k reduced mod n
Felt trace(const Felt& x);            // sum of Frobenius conjugates, 0 or 1
Felt norm(const Felt& x);             // product of Frobenius conjugates

}  // namespace linperm
