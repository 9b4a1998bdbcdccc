#include <doctest.h>

#include <algorithm>
#include <bit>
#include <random>

#include "pchord/chordal.hpp"
#include "pchord/errors.hpp"
#include "pchord/group_builders.hpp"
#include "pchord/group_spec.hpp"
#include "pchord/induced_path.hpp"
#include "pchord/power_graph.hpp"

using namespace pchord;

namespace
{

Graph cycle(std::uint32_t n)
{
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 0; i < n; ++i)
    e.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, e);
}

Graph random_graph(std::uint32_t n, double p, std::mt19937 &rng)
{
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (coin(rng))
        e.emplace_back(i, j);
  return Graph::from_edges(n, e);
}

// Chordal iff simplicial vertices can be deleted one at a time until
// nothing is left.
bool oracle_chordal(Graph const &g)
{
  std::uint32_t n = g.n();
  std::vector<bool> gone(n, false);
  for (std::uint32_t left = n; left > 0; --left) {
    bool found = false;
    for (Vertex v = 0; v < n && !found; ++v) {
      if (gone[v])
        continue;
      std::vector<Vertex> nb;
      for (Vertex u : g.neighbors(v))
        if (!gone[u])
          nb.push_back(u);
      bool clique = true;
      for (std::size_t i = 0; i < nb.size() && clique; ++i)
        for (std::size_t j = i + 1; j < nb.size() && clique; ++j)
          clique = g.adjacent(nb[i], nb[j]);
      if (clique) {
        gone[v] = true;
        found = true;
      }
    }
    if (!found)
      return false;
  }
  return true;
}

// Largest vertex subset inducing a path, by enumerating all subsets.
unsigned oracle_longest_path(Graph const &g)
{
  std::uint32_t n = g.n();
  unsigned best = n ? 1 : 0;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    unsigned k = std::popcount(mask);
    if (k <= best)
      continue;
    unsigned edges = 0, ends = 0;
    bool ok = true;
    for (Vertex v = 0; v < n && ok; ++v) {
      if (!(mask >> v & 1))
        continue;
      unsigned d = 0;
      for (Vertex u : g.neighbors(v))
        d += mask >> u & 1;
      ok = d >= 1 && d <= 2;
      ends += d == 1;
      edges += d;
    }
    // A forest with k-1 edges and two leaves of degree <= 2 is a path.
    if (ok && edges / 2 == k - 1 && ends == 2) {
      // connectivity
      std::vector<Vertex> stack;
      std::uint32_t seen = 0;
      Vertex s = std::countr_zero(mask);
      stack.push_back(s);
      seen |= 1u << s;
      while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex u : g.neighbors(v))
          if ((mask >> u & 1) && !(seen >> u & 1)) {
            seen |= 1u << u;
            stack.push_back(u);
          }
      }
      if (seen == mask)
        best = k;
    }
  }
  return best;
}

} // namespace

TEST_SUITE("chordal")
{
  TEST_CASE("cycles and complete graphs")
  {
    CHECK(is_chordal(cycle(3)).chordal);
    for (std::uint32_t n = 4; n <= 12; ++n) {
      auto r = is_chordal(cycle(n));
      REQUIRE_FALSE(r.chordal);
      REQUIRE(r.hole);
      CHECK(r.hole->vertices.size() == n);
      CHECK(verify_induced_cycle(cycle(n), r.hole->vertices));
    }
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex i = 0; i < 8; ++i)
      for (Vertex j = i + 1; j < 8; ++j)
        e.emplace_back(i, j);
    CHECK(is_chordal(Graph::from_edges(8, e)).chordal);
    CHECK(is_chordal(Graph{}).chordal);
  }

  TEST_CASE("MCS order and PEO check")
  {
    auto c4 = cycle(4);
    auto order = mcs_order(c4);
    CHECK(order.size() == 4);
    CHECK(order[0] == 0); // ties to the least index
    auto v = check_peo(c4, order);
    REQUIRE(v);
    CHECK_FALSE(c4.adjacent(v->u, v->w));
    auto hole = extract_hole(c4, *v);
    CHECK(canonical_cycle(hole.vertices) == std::vector<Vertex>{0, 1, 2, 3});
    // A path graph is chordal.
    auto path = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    CHECK_FALSE(check_peo(path, mcs_order(path)));
  }

  TEST_CASE("agreement with an elimination oracle on random graphs")
  {
    std::mt19937 rng(2024);
    for (int t = 0; t < 600; ++t) {
      std::uint32_t n = 1 + rng() % 40;
      double p = std::uniform_real_distribution<double>(0.05, 0.9)(rng);
      auto g = random_graph(n, p, rng);
      bool expect = oracle_chordal(g);
      auto r = is_chordal(g);
      REQUIRE(r.chordal == expect);
      if (!expect) {
        REQUIRE(r.hole);
        REQUIRE(verify_induced_cycle(g, r.hole->vertices));
      }
      if (n <= 14) {
        auto bf = brute_force_hole(g);
        REQUIRE(bf.has_value() == !expect);
      }
      auto c4 = find_induced_c4(g);
      if (c4) {
        REQUIRE(c4->vertices.size() == 4);
        REQUIRE(verify_induced_cycle(g, c4->vertices));
      }
      if (n <= 12) {
        // Oracle for induced 4-cycles over all quadruples.
        bool any = false;
        std::vector<Vertex> q(4);
        for (q[0] = 0; q[0] < n && !any; ++q[0])
          for (q[1] = 0; q[1] < n && !any; ++q[1])
            for (q[2] = 0; q[2] < n && !any; ++q[2])
              for (q[3] = 0; q[3] < n && !any; ++q[3])
                any = verify_induced_cycle(g, q);
        REQUIRE(c4.has_value() == any);
      }
    }
  }

  TEST_CASE("chordal graphs built by simplicial insertion")
  {
    std::mt19937 rng(7);
    for (int t = 0; t < 200; ++t) {
      std::uint32_t n = 2 + rng() % 60;
      // Each new vertex joins a clique: the neighbourhood of an earlier
      // vertex restricted to a random prefix, plus that vertex.
      std::vector<std::vector<Vertex>> nb(n);
      std::vector<std::pair<Vertex, Vertex>> e;
      for (Vertex v = 1; v < n; ++v) {
        Vertex a = rng() % v;
        std::vector<Vertex> clique{a};
        for (Vertex u : nb[a])
          if (u < a && rng() % 2)
            clique.push_back(u);
        // keep only a clique: drop members not adjacent to all others
        std::vector<Vertex> kept;
        for (Vertex u : clique) {
          bool ok = true;
          for (Vertex w : kept)
            ok = ok && std::find(nb[u].begin(), nb[u].end(), w) != nb[u].end();
          if (ok)
            kept.push_back(u);
        }
        for (Vertex u : kept) {
          e.emplace_back(u, v);
          nb[u].push_back(v);
          nb[v].push_back(u);
        }
      }
      auto g = Graph::from_edges(n, e);
      REQUIRE(oracle_chordal(g));
      REQUIRE(is_chordal(g).chordal);
      REQUIRE_FALSE(find_induced_c4(g));
    }
  }

  TEST_CASE("power graphs of small groups")
  {
    for (auto [spec, chordal] : std::vector<std::pair<char const *, bool>>{
             {"cyclic:12", true}, {"cyclic:30", false}, {"cyclic:36", false}, {"sym:4", true},
             {"q:8", true}, {"prod(q:8,cyclic:3)", false}, {"dih:cyclic:30", false}, {"alt:5", true}}) {
      auto g = build_group(spec);
      auto pow = power_graph(*g);
      CAPTURE(spec);
      CHECK(is_chordal(pow).chordal == chordal);
      CHECK(oracle_chordal(pow) == chordal);
    }
  }

  TEST_CASE("closed twin quotient")
  {
    // Pow(C_p): all vertices are closed twins.
    auto tq = closed_twin_quotient(power_graph(*cyclic(7)));
    CHECK(tq.quotient.n() == 1);
    CHECK(tq.class_size[0] == 7);
    auto c5 = closed_twin_quotient(cycle(5));
    CHECK(c5.quotient.n() == 5);
  }

  TEST_CASE("induced paths against subset enumeration")
  {
    std::mt19937 rng(99);
    for (int t = 0; t < 150; ++t) {
      std::uint32_t n = 1 + rng() % 14;
      auto g = random_graph(n, std::uniform_real_distribution<double>(0.1, 0.7)(rng), rng);
      unsigned expect = oracle_longest_path(g);
      for (bool twins : {true, false}) {
        InducedPathOptions opt;
        opt.merge_twins = twins;
        auto r = bounded_longest_induced_path(g, opt);
        REQUIRE(r.exact);
        REQUIRE(r.length == expect);
        REQUIRE(r.witness.vertices.size() == expect);
        REQUIRE(verify_induced_path(g, r.witness.vertices));
      }
    }
    auto pow = power_graph(*cyclic(12));
    auto r = bounded_longest_induced_path(pow);
    CHECK(r.length == oracle_longest_path(pow));
    CHECK(verify_induced_path(pow, r.witness.vertices));
  }

  TEST_CASE("path limits")
  {
    auto g = cycle(30);
    InducedPathOptions opt;
    opt.limit = 10;
    CHECK(bounded_longest_induced_path(g, opt).length == 10);
    opt.limit = max_path_limit + 1;
    CHECK_THROWS_AS(bounded_longest_induced_path(g, opt), InvalidArgument);
    opt.limit = 25;
    opt.node_budget = 5;
    CHECK_FALSE(bounded_longest_induced_path(g, opt).exact);
  }
}
