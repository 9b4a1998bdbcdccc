#include <doctest.h>

#include <random>

#include "pchord/errors.hpp"
#include "pchord/finite_field.hpp"

using namespace pchord;
using namespace pchord::ff;

namespace
{

std::uint64_t mult_order(Field const &f, FieldElem const &a)
{
  std::uint64_t k = 1;
  for (auto x = a; !(x == f.one()); x = f.mul(x, a))
    ++k;
  return k;
}

// Field axioms on every pair/triple of elements.
void check_axioms(Field const &f)
{
  std::vector<FieldElem> all;
  for (std::uint32_t c = 0; c < f.order(); ++c)
    all.push_back(f.decode(c));
  auto zero = f.zero(), one = f.one();
  for (auto const &a : all) {
    REQUIRE(f.add(a, f.neg(a)) == zero);
    REQUIRE(f.add(a, zero) == a);
    REQUIRE(f.mul(a, one) == a);
    if (!a.is_zero())
      REQUIRE(f.mul(a, f.inv(a)) == one);
    for (auto const &b : all) {
      REQUIRE(f.add(a, b) == f.add(b, a));
      REQUIRE(f.mul(a, b) == f.mul(b, a));
      auto frob = [&](FieldElem const &x) { return f.pow(x, f.characteristic()); };
      REQUIRE(frob(f.add(a, b)) == f.add(frob(a), frob(b)));
      REQUIRE(frob(f.mul(a, b)) == f.mul(frob(a), frob(b)));
    }
  }
  std::mt19937 rng(f.order());
  for (int t = 0; t < 3000; ++t) {
    auto const &a = all[rng() % all.size()];
    auto const &b = all[rng() % all.size()];
    auto const &c = all[rng() % all.size()];
    REQUIRE(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
    REQUIRE(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
    REQUIRE(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
  }
}

} // namespace

TEST_SUITE("finitefield")
{
  TEST_CASE("small fields")
  {
    auto f2 = Field::make(2, 1);
    CHECK(f2.order() == 2);
    auto f4 = Field::make(2, 2);
    CHECK(f4.spec().modulus == std::vector<std::uint32_t>{1, 1, 1}); // x^2 + x + 1
    auto f7 = Field::make(7, 1);
    CHECK(f7.order() == 7);
    CHECK_THROWS_AS(Field::make(4, 1), InvalidArgument);
    CHECK_THROWS_AS(Field::make(2, 21), InvalidArgument);
    CHECK_THROWS_AS(Field::of_order(12), InvalidArgument);
  }

  TEST_CASE("arithmetic examples")
  {
    auto f4 = Field::make(2, 2);
    auto w = f4.generator_x();
    CHECK(f4.mul(w, w) == f4.add(w, f4.one()));
    CHECK(f4.format(f4.mul(w, w)) == "w+1");
    auto f7 = Field::make(7, 1);
    CHECK(f7.inv(f7.from_int(3)) == f7.from_int(5));
    CHECK_THROWS_AS(f7.inv(f7.zero()), InvalidArgument);
    CHECK(f7.pow(f7.from_int(3), -1) == f7.from_int(5));
  }

  TEST_CASE("primitive elements")
  {
    // First generator in code order 2, 3, ...; found by exhaustive order scan.
    CHECK(Field::make(7, 1).primitive_element() == Field::make(7, 1).from_int(3));
    CHECK(Field::make(5, 1).primitive_element() == Field::make(5, 1).from_int(2));
    auto f4 = Field::make(2, 2);
    CHECK(f4.primitive_element() == f4.generator_x());
    for (std::uint64_t q : {3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49, 64, 81, 125, 243, 256, 343, 512, 729, 1024}) {
      auto f = Field::of_order(q);
      auto g = f.primitive_element();
      CHECK(mult_order(f, g) == q - 1);
      CHECK(f.multiplicative_order(g) == q - 1);
      CHECK(f.pow(g, static_cast<std::int64_t>(q - 1)) == f.one());
      // No element of smaller code generates.
      for (std::uint32_t c = 2; c < f.encode(g); ++c)
        CHECK(mult_order(f, f.decode(c)) < q - 1);
    }
  }

  TEST_CASE("modulus table matches least irreducible by code")
  {
    // Least monic irreducible, constant term first, from an exhaustive
    // search with an independent irreducibility test.
    struct Row
    {
      std::uint32_t p;
      unsigned m;
      std::vector<std::uint32_t> modulus;
    };
    std::vector<Row> expected{
        {2, 2, {1, 1, 1}},       {2, 3, {1, 1, 0, 1}},          {2, 4, {1, 1, 0, 0, 1}},
        {2, 5, {1, 0, 1, 0, 0, 1}}, {2, 8, {1, 1, 0, 1, 1, 0, 0, 0, 1}}, {3, 2, {1, 0, 1}},
        {3, 3, {1, 2, 0, 1}},    {3, 4, {2, 1, 0, 0, 1}},       {5, 2, {2, 0, 1}},
        {5, 3, {1, 1, 0, 1}},    {7, 2, {1, 0, 1}},             {13, 2, {2, 0, 1}},
        {17, 2, {3, 0, 1}}};
    for (auto const &r : expected)
      CHECK(Field::make(r.p, r.m).spec().modulus == r.modulus);
    CHECK_FALSE(is_irreducible(2, {1, 0, 1}));
    CHECK(is_irreducible(2, {1, 1, 1}));
    CHECK_THROWS_AS(Field::from_spec(FieldSpec{2, 2, {1, 0, 1}}), InvalidArgument);
  }

  TEST_CASE("field axioms, exhaustive up to 64 elements")
  {
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32, 49, 64})
      check_axioms(Field::of_order(q));
  }

  TEST_CASE("extension degree bound")
  {
    CHECK_NOTHROW(Field::of_order(65536));
    CHECK_THROWS_AS(Field::of_order(1u << 17), InvalidArgument);
  }

  TEST_CASE("field axioms, sampled on larger fields")
  {
    for (std::uint64_t q : {121, 243, 1024, 4096, 59049, 65536}) {
      auto f = Field::of_order(q);
      std::mt19937 rng(static_cast<unsigned>(q));
      for (int t = 0; t < 2000; ++t) {
        auto a = f.decode(rng() % f.order()), b = f.decode(rng() % f.order()),
             c = f.decode(rng() % f.order());
        REQUIRE(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
        REQUIRE(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        if (!a.is_zero())
          REQUIRE(f.mul(a, f.inv(a)) == f.one());
      }
    }
  }

  TEST_CASE("lookup tables agree with polynomial arithmetic")
  {
    for (std::uint64_t q : {4, 9, 16, 27, 125}) {
      FieldTables t(Field::of_order(q));
      auto const &f = t.field();
      for (std::uint32_t a = 0; a < t.order(); ++a) {
        for (std::uint32_t b = 0; b < t.order(); ++b) {
          REQUIRE(t.add(a, b) == f.encode(f.add(f.decode(a), f.decode(b))));
          REQUIRE(t.mul(a, b) == f.encode(f.mul(f.decode(a), f.decode(b))));
        }
        if (a)
          REQUIRE(t.mul(a, t.inv(a)) == 1);
      }
      CHECK_THROWS_AS(t.inv(0), InvalidArgument);
    }
  }
}
