#include <doctest.h>

#include "pchord/chordal.hpp"
#include "pchord/criteria.hpp"
#include "pchord/errors.hpp"
#include "pchord/group_builders.hpp"
#include "pchord/group_spec.hpp"
#include "pchord/power_graph.hpp"

#include "../support/fixtures.hpp"

using namespace pchord;

TEST_SUITE("criteria")
{
  TEST_CASE("c4")
  {
    auto g = build_group("prod(q:8,cyclic:3)");
    auto r = check_c4(*g);
    CHECK(r.fires);
    CHECK(r.implied == Implied::non_chordal);
    REQUIRE(r.witness.size() == 3);
    CHECK(c4_pair_holds(*g, r.witness[0], r.witness[1]));
    CHECK(g->order_of(r.witness[2]) == 3);
    CHECK_FALSE(check_c4(*cyclic(12)).fires);
    CHECK_FALSE(check_c4(*build_group("q:8")).fires);
    CHECK_THROWS_AS(check_c4(*cyclic(30)), PreconditionError);
    CHECK_THROWS_AS(check_c4(*cyclic(36)), PreconditionError);
  }

  TEST_CASE("c4 on SL_3(4)")
  {
    auto g = build_group("sl:3,4");
    auto r = check_c4(*g);
    CHECK(r.fires);
    REQUIRE(r.witness.size() == 3);
    CHECK(g->order_of(r.witness[0]) == 4);
    CHECK(g->pow(r.witness[0], 2) == g->pow(r.witness[1], 2));
  }

  TEST_CASE("centralizer-sufficient")
  {
    for (auto spec : {"psl:2,7", "dih:cyclic:9", "alt:5", "sym:5", "cyclic:12"}) {
      CAPTURE(spec);
      auto r = check_centralizer_sufficient(*build_group(spec));
      CHECK(r.fires);
      CHECK(r.implied == Implied::chordal);
    }
    for (auto spec : {"prod(q:8,cyclic:3)", "sym:6", "sl:3,3"})
      CHECK_FALSE(check_centralizer_sufficient(*build_group(spec)).fires);
  }

  TEST_CASE("conjugate-cyclic")
  {
    // Every subgroup of an abelian group is normal.
    for (std::uint32_t n = 1; n <= 60; ++n)
      for (auto const &type : fixtures::abelian_types(n))
        REQUIRE_FALSE(check_conjugate_cyclic(*build_group(fixtures::abelian_spec(type))).fires);
    auto g = build_group("sl:3,3");
    auto r = check_conjugate_cyclic(*g);
    CHECK(r.fires);
    CHECK(r.implied == Implied::non_chordal);
    REQUIRE(r.witness.size() == 2);
    CHECK(conjugate_cyclic_pair_holds(*g, r.witness[0], r.witness[1]));
    CHECK(check_conjugate_cyclic(*build_group("sym:6")).fires);
    CHECK_FALSE(check_conjugate_cyclic(*build_group("sym:5")).fires);
  }

  TEST_CASE("prime graph")
  {
    auto c6 = gk_graph(*cyclic(6));
    CHECK(c6.primes == std::vector<std::uint64_t>{2, 3});
    CHECK(c6.edges.size() == 1);
    CHECK(c6.components().size() == 1);
    auto psl = gk_graph(*build_group("psl:2,7"));
    CHECK(psl.primes == std::vector<std::uint64_t>{2, 3, 7});
    CHECK(psl.edges.empty());
    CHECK(psl.components().size() == 3);
    auto s5 = gk_graph(*build_group("sym:5"));
    CHECK(s5.edges == std::vector<std::pair<std::uint64_t, std::uint64_t>>{{2, 3}});
    CHECK(s5.components().size() == 2);
  }

  TEST_CASE("gk-necessary")
  {
    CHECK_FALSE(check_gk_necessary(*build_group("sym:5")).fires);
    CHECK_FALSE(check_gk_necessary(*build_group("sym:6")).fires);
    auto r = check_gk_necessary(*build_group("prod(q:8,cyclic:3)"));
    CHECK(r.fires);
    CHECK(r.implied == Implied::non_chordal);
  }

  TEST_CASE("criteria agree with brute force on small groups")
  {
    std::vector<std::string> specs{"sym:3", "sym:4", "sym:5", "alt:5", "alt:6", "q:8", "q:12",
                                   "q:24", "psl:2,7", "psl:2,8", "sl:2,3", "sl:2,5",
                                   "dih:cyclic:15", "prod(sym:3,cyclic:5)", "prod(q:8,cyclic:3)"};
    for (auto const &s : fixtures::semidirect_specs(60))
      specs.push_back(s);
    for (auto const &spec : specs) {
      CAPTURE(spec);
      auto g = build_group(spec);
      bool chordal = is_chordal(power_graph(*g)).chordal;
      if (check_centralizer_sufficient(*g).fires)
        CHECK(chordal);
      if (check_conjugate_cyclic(*g).fires)
        CHECK_FALSE(chordal);
      if (check_gk_necessary(*g).fires)
        CHECK_FALSE(chordal);
      if (check_c4(*g).fires)
        CHECK_FALSE(chordal);
    }
  }

  TEST_CASE("SL_3 witnesses")
  {
    for (std::uint64_t q : {3, 5, 7, 8, 9}) {
      auto w = sl3_witness(q);
      CHECK(w.q == q);
      CHECK(w.all_hold());
      CHECK(w.checks.size() >= 6);
    }
    CHECK_THROWS_AS(sl3_witness(4), InvalidArgument);
    CHECK_THROWS_AS(sl3_witness(2), InvalidArgument);
    CHECK_THROWS_AS(sl3_witness(6), InvalidArgument);
  }
}
