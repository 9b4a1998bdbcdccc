#include <doctest.h>

#include <random>
#include <set>

#include "pchord/errors.hpp"
#include "pchord/group_builders.hpp"
#include "pchord/group_queries.hpp"
#include "pchord/group_spec.hpp"
#include "pchord/report.hpp"
#include "pchord/representations.hpp"

#include "../support/fixtures.hpp"

using namespace pchord;

namespace
{

GroupPtr build(std::string const &spec)
{
  return build_group(spec, default_order_cap, PCHORD_SOURCE_DIR);
}

std::uint64_t factorial(unsigned n)
{
  std::uint64_t f = 1;
  for (unsigned i = 2; i <= n; ++i)
    f *= i;
  return f;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b)
{
  while (b) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

// |SL_k(q)| = q^(k(k-1)/2) prod_{i=2..k} (q^i - 1).
std::uint64_t sl_formula(unsigned k, std::uint64_t q)
{
  std::uint64_t n = 1;
  for (unsigned i = 0; i < k * (k - 1) / 2; ++i)
    n *= q;
  for (unsigned i = 2; i <= k; ++i) {
    std::uint64_t qi = 1;
    for (unsigned j = 0; j < i; ++j)
      qi *= q;
    n *= qi - 1;
  }
  return n;
}

void check_laws(FiniteGroup const &g)
{
  std::uint32_t n = g.size();
  for (ElemId a = 0; a < n; ++a) {
    REQUIRE(g.mul(a, 0) == a);
    REQUIRE(g.mul(0, a) == a);
    REQUIRE(g.mul(a, g.inv(a)) == 0);
    REQUIRE(g.mul(g.inv(a), a) == 0);
    REQUIRE(n % g.order_of(a) == 0); // Lagrange
    REQUIRE(g.pow(a, g.order_of(a)) == 0);
  }
  std::mt19937 rng(n);
  for (int t = 0; t < 100000; ++t) {
    ElemId a = rng() % n, b = rng() % n, c = rng() % n;
    REQUIRE(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
  }
}

} // namespace

TEST_SUITE("groups")
{
  TEST_CASE("build examples")
  {
    CHECK(build("sym:6")->size() == 720);
    CHECK(build("psl:2,7")->size() == 168);
    auto q8 = build("q:8");
    CHECK(q8->size() == 8);
    int involutions = 0;
    for (ElemId x = 0; x < q8->size(); ++x)
      involutions += q8->order_of(x) == 2;
    CHECK(involutions == 1);
  }

  TEST_CASE("family orders")
  {
    for (unsigned n = 1; n <= 7; ++n) {
      CHECK(symmetric(n)->size() == factorial(n));
      CHECK(alternating(n)->size() == (n < 2 ? 1 : factorial(n) / 2));
    }
    for (auto [k, q] : std::vector<std::pair<unsigned, std::uint64_t>>{
             {2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 7}, {2, 8}, {2, 9}, {2, 11}, {3, 2}, {3, 3}}) {
      CHECK(special_linear(k, q)->size() == sl_formula(k, q));
      CHECK(projective_special_linear(k, q)->size() == sl_formula(k, q) / gcd(k, q - 1));
      CHECK(sl_order(k, q) == sl_formula(k, q));
    }
    for (std::uint32_t four_n = 8; four_n <= 64; four_n += 4)
      CHECK(quaternion(four_n)->size() == four_n);
  }

  TEST_CASE("semidirect products")
  {
    auto s3 = semidirect_cyclic(3, 1, 2, 1, 2);
    CHECK(s3.group->size() == 6);
    CHECK_FALSE(is_abelian(*s3.group));
    CHECK(s3.faithful_on_socle);
    auto f21 = semidirect_cyclic(7, 1, 3, 1, 2); // 2^3 = 1 mod 7, 2 != 1
    CHECK(f21.group->size() == 21);
    CHECK(f21.faithful_on_socle);
    auto g20 = semidirect_cyclic(5, 1, 2, 2, 2); // 2^4 = 16 = 1 mod 5
    CHECK(g20.group->size() == 20);
    CHECK(g20.faithful_on_socle);
    auto c9c2 = semidirect_cyclic(3, 2, 2, 2, 8); // C_4 acting through C_2
    CHECK(c9c2.group->size() == 36);
    CHECK_FALSE(c9c2.faithful_on_socle); // 8^2 = 1 mod 3
    auto nf = semidirect_cyclic(7, 1, 2, 2, 6); // 6 = -1: order 2 action of C_4
    CHECK(nf.group->size() == 28);
    CHECK_FALSE(nf.faithful_on_socle);
    CHECK_THROWS_AS(semidirect_cyclic(7, 1, 3, 1, 3), InvalidArgument); // 3^3 = 6 mod 7
    CHECK_THROWS_AS(semidirect_cyclic(6, 1, 2, 1, 5), InvalidArgument);
  }

  TEST_CASE("generalized dihedral groups")
  {
    auto d10 = generalized_dihedral(cyclic(5));
    CHECK(d10->size() == 10);
    CHECK_FALSE(is_abelian(*d10));
    auto e8 = generalized_dihedral(abelian({2, 2}));
    CHECK(e8->size() == 8);
    CHECK(is_abelian(*e8));
    for (ElemId x = 1; x < e8->size(); ++x)
      CHECK(e8->order_of(x) == 2);
    CHECK(generalized_dihedral(cyclic(9))->size() == 18);
    CHECK_THROWS_AS(generalized_dihedral(symmetric(3)), InvalidArgument);
  }

  TEST_CASE("element orders")
  {
    auto s5 = build("sym:5");
    CHECK(s5->order_of(0) == 1);
    CHECK(s5->order_of(*find_by_label(*s5, "(1,2)(3,4,5)")) == 6);
    auto m22 = build("sporadic:M22@data/sporadic/m22.gens");
    CHECK(m22->size() == 443520);
    auto x = find_by_label(*m22, "(1,4,16)(2,15,12)(3,8,18)(5,13,9)(6,11,14)(7,22,17)");
    REQUIRE(x);
    CHECK(m22->order_of(*x) == 3);
  }

  TEST_CASE("cyclic subgroups")
  {
    auto c12 = cyclic(12);
    CHECK(cyclic_subgroup(*c12, 0) == std::vector<ElemId>{0});
    ElemId g = c12->generators()[0];
    CHECK(cyclic_subgroup(*c12, g).size() == 12);
    CHECK(cyclic_subgroup(*c12, c12->pow(g, 2)).size() == 6);
    auto s4 = build("sym:4");
    for (ElemId x = 0; x < s4->size(); ++x)
      CHECK(cyclic_subgroup(*s4, x).size() == s4->order_of(x));
    auto table = cyclic_subgroups(*s4);
    // Sym(4): 1 trivial, 9 of order 2, 4 of order 3, 3 of order 4.
    CHECK(table.subgroups.size() == 17);
  }

  TEST_CASE("centralizers")
  {
    for (auto spec : {"sym:4", "q:12", "psl:2,7", "dih:cyclic:6", "prod(sym:3,cyclic:4)"}) {
      auto g = build(spec);
      std::vector<ElemId> all(g->size());
      for (ElemId x = 0; x < g->size(); ++x)
        all[x] = x;
      std::vector<ElemId> e{0};
      CHECK(centralizer(*g, e) == all);
      for (ElemId x = 0; x < g->size(); ++x) {
        auto c = centralizer(*g, x);
        REQUIRE(is_subgroup(*g, c));
        std::vector<ElemId> raw;
        for (ElemId y = 0; y < g->size(); ++y)
          if (g->mul(x, y) == g->mul(y, x))
            raw.push_back(y);
        REQUIRE(c == raw);
      }
    }
    auto ab = build("ab:2x6");
    for (ElemId x = 0; x < ab->size(); ++x)
      CHECK(centralizer(*ab, x).size() == ab->size());
  }

  TEST_CASE("normality")
  {
    auto s3 = build("sym:3");
    std::vector<ElemId> all(s3->size());
    for (ElemId x = 0; x < s3->size(); ++x)
      all[x] = x;
    std::vector<ElemId> e{0};
    CHECK(is_normal_in(*s3, e, all));
    CHECK(is_normal_in(*s3, all, all));
    auto c3 = cyclic_subgroup(*s3, *find_by_label(*s3, "(1,2,3)"));
    CHECK(is_normal_in(*s3, c3, all));
    auto c2 = cyclic_subgroup(*s3, *find_by_label(*s3, "(1,2)"));
    CHECK_FALSE(is_normal_in(*s3, c2, all));
    CHECK(is_normal_in(*s3, c2, c2));
  }

  TEST_CASE("conjugacy classes")
  {
    auto s5 = build("sym:5");
    auto cc = conjugacy_classes(*s5);
    CHECK(cc.reps.size() == 7); // partitions of 5
    auto a5 = build("alt:5");
    auto ca = conjugacy_classes(*a5);
    std::multiset<std::uint32_t> sizes(ca.sizes.begin(), ca.sizes.end());
    CHECK(sizes == std::multiset<std::uint32_t>{1, 12, 12, 15, 20});
  }

  TEST_CASE("group laws on built groups")
  {
    for (auto spec : {"sym:5", "alt:6", "psl:2,8", "psl:3,2", "sl:2,5", "q:24", "dih:ab:2x6",
                      "sd:7^1,3^1,2", "sd:3^2,2^2,8", "prod(q:8,cyclic:3)", "ab:4x4x3"})
      check_laws(*build(spec));
  }

  TEST_CASE("PSL canonicalization is gcd(k, q-1) to one")
  {
    for (auto [k, q] : std::vector<std::pair<unsigned, std::uint64_t>>{{2, 5}, {2, 7}, {2, 9}, {3, 4}, {2, 3}}) {
      auto sl = special_linear(k, q);
      auto psl = projective_special_linear(k, q);
      std::vector<std::uint32_t> hits(psl->size(), 0);
      for (ElemId x = 0; x < sl->size(); ++x) {
        auto img = psl->find_canonical(sl->element(x));
        REQUIRE(img);
        ++hits[*img];
      }
      for (auto h : hits)
        REQUIRE(h == gcd(k, q - 1));
    }
  }

  TEST_CASE("deterministic indexing")
  {
    auto a = build("psl:2,11"), b = build("psl:2,11");
    REQUIRE(a->size() == b->size());
    for (ElemId x = 0; x < a->size(); ++x)
      REQUIRE(a->label(x) == b->label(x));
  }

  TEST_CASE("sporadic data")
  {
    auto m11 = build("sporadic:M11@data/sporadic/m11.gens");
    CHECK(m11->size() == 7920);
    CHECK(sporadic_order("M11") == 7920);
    CHECK(sporadic_order("M22") == 443520);
    CHECK_THROWS_AS(sporadic_from_text("M11", "eleven\n(1,2)\n"), ParseError);
    CHECK_THROWS_AS(sporadic_from_text("M11", "11\n(1,2,3,4,5,6,7,8,9,10,11)\n"), InvalidArgument);
    CHECK_THROWS_AS(sporadic_from_text("M11", "11\n(1,2,x)\n"), ParseError);
    CHECK_THROWS(load_sporadic("M11", "/nonexistent/m11.gens"));
  }

  TEST_CASE("group spec language")
  {
    for (std::string s : {"cyclic:12", "ab:2x2x3", "sym:4", "alt:5", "dih:cyclic:5", "q:12",
                          "sl:2,4", "psl:3,4", "sd:5^1,2^2,2", "prod(sym:3,prod(cyclic:2,q:8))"})
      CHECK(parse_group_spec(s).to_string() == s);
    CHECK_THROWS_AS(parse_group_spec("foo:3"), ParseError);
    CHECK_THROWS_AS(parse_group_spec("prod(sym:3"), ParseError);
    CHECK_THROWS_AS(build_group("q:10"), InvalidArgument);
    CHECK_THROWS_AS(build_group("sym:10", 1000), CapExceeded);
    CHECK_THROWS(build_group("dih:sym:3"));
  }
}
