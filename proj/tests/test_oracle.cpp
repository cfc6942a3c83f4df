#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "linperm/dickson.hpp"
#include "linperm/oracle.hpp"
#include "linperm/special.hpp"

using namespace linperm;

namespace {

Felt rand_felt(const Field& f, std::mt19937_64& rng) {
  return f.from_uint(rng() & ((std::uint64_t{1} << f.degree()) - 1));
}

LinPoly rand_poly(const Field& f, std::mt19937_64& rng) {
  std::vector<Felt> c;
  for (int i = 0; i < f.degree(); ++i) c.push_back(rand_felt(f, rng));
  return LinPoly(f, std::move(c));
}

}  // namespace

TEST_CASE("value tables") {
  const Field f = make_field(3);
  const PermTable id = table_of(LinPoly::identity(f));
  for (std::uint32_t x = 0; x < 8; ++x) CHECK(id.image(x) == x);
  CHECK(id.is_bijective());

  const PermTable zero = table_of(LinPoly::zero(f));
  for (std::uint32_t x = 0; x < 8; ++x) CHECK(zero.image(x) == 0);
  CHECK_FALSE(zero.is_bijective());

  CHECK(table_of(build_special(f.from_hex("0x6")).poly()).is_bijective());
}

TEST_CASE("tables of linearized maps are additive") {
  const Field f = make_field(7);
  std::mt19937_64 rng(0x44440001);
  const PermTable T = table_of(rand_poly(f, rng));
  for (int it = 0; it < 200; ++it) {
    const std::uint32_t x = static_cast<std::uint32_t>(rng() % 128);
    const std::uint32_t y = static_cast<std::uint32_t>(rng() % 128);
    CHECK(T.image(x ^ y) == (T.image(x) ^ T.image(y)));
  }
}

TEST_CASE("table inversion") {
  const Field f = make_field(3);
  const PermTable id = table_of(LinPoly::identity(f));
  CHECK(invert_table(id) == id);
  CHECK(invert_table(table_of(LinPoly::from_mask(f, 0b010))) ==
        table_of(LinPoly::from_mask(f, 0b100)));
  CHECK_THROWS_WITH(invert_table(table_of(LinPoly::zero(f))), "table is not bijective");

  const SpecialPP P = build_special(f.from_hex("0x6"));
  CHECK(invert_table(table_of(P.poly())) == table_of(closed_inverse_B(P)));
}

TEST_CASE("pointwise verification") {
  const Field f = make_field(3);
  const LinPoly id = LinPoly::identity(f);
  CHECK(verify_pointwise(id, id));
  const SpecialPP P = build_special(f.from_hex("0x6"));
  const LinPoly Pinv = closed_inverse_B(P);
  CHECK(verify_pointwise(P.poly(), Pinv));
  CHECK(verify_pointwise(Pinv, P.poly()));
  CHECK_FALSE(verify_pointwise(P.poly(), P.poly()));  // not an involution

  for (int n : {5, 9}) {
    const Field g = make_field(n);
    std::mt19937_64 rng(0x44440002);
    for (int it = 0; it < 5; ++it) {
      Felt a = rand_felt(g, rng);
      while (a.is_zero() || !trace(inv(a)).is_one()) a = rand_felt(g, rng);
      const SpecialPP Q = build_special(a);
      CHECK(verify_pointwise(Q.poly(), closed_inverse_B(Q)));
    }
  }
}

TEST_CASE("coefficient recovery from tables") {
  const Field f = make_field(7);
  std::mt19937_64 rng(0x44440003);
  for (int it = 0; it < 10; ++it) {
    const LinPoly L = rand_poly(f, rng);
    CHECK(linpoly_from_table(table_of(L), f) == L);
  }
  for (int it = 0; it < 10; ++it) {
    LinPoly L = rand_poly(f, rng);
    while (!is_permutation(L)) L = rand_poly(f, rng);
    const LinPoly M = linpoly_from_table(invert_table(table_of(L)), f);
    CHECK(M == generic_inverse(L));
  }
}

TEST_CASE("exhaustive operations are capped") {
  const Field f = make_field(21);
  CHECK_THROWS(table_of(LinPoly::identity(f)));
  CHECK_THROWS(verify_pointwise(LinPoly::identity(f), LinPoly::identity(f)));
  CHECK_THROWS(PermTable(3, {0, 1, 2}));  // wrong size
}
