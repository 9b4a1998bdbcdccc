#include "pchord/chordal.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <queue>

#include "pchord/errors.hpp"

namespace pchord
{

std::vector<Vertex> mcs_order(Graph const &g)
{
  std::uint32_t n = g.n();
  std::vector<std::uint32_t> weight(n, 0);
  std::vector<bool> visited(n, false);
  // Max-heap on (weight, -index): heaviest first, then least index.
  std::priority_queue<std::pair<std::uint32_t, std::uint32_t>> heap;
  for (Vertex v = 0; v < n; ++v)
    heap.emplace(0, ~v);

  std::vector<Vertex> order;
  order.reserve(n);
  while (!heap.empty()) {
    auto [w, key] = heap.top();
    heap.pop();
    Vertex v = ~key;
    if (visited[v] || w != weight[v])
      continue;
    visited[v] = true;
    order.push_back(v);
    for (Vertex x : g.neighbors(v)) {
      if (!visited[x])
        heap.emplace(++weight[x], ~x);
    }
  }
  return order;
}

std::optional<PeoViolation> check_peo(Graph const &g, std::span<const Vertex> order)
{
  std::uint32_t n = g.n();
  if (order.size() != n)
    throw InvalidArgument("check_peo: order is not a permutation of the vertices");
  std::vector<std::uint32_t> pos(n, UINT32_MAX);
  for (std::uint32_t i = 0; i < n; ++i) {
    if (order[i] >= n || pos[order[i]] != UINT32_MAX)
      throw InvalidArgument("check_peo: order is not a permutation of the vertices");
    pos[order[i]] = i;
  }

  for (Vertex v : order) {
    Vertex parent = v;
    for (Vertex x : g.neighbors(v)) {
      if (pos[x] < pos[v] && (parent == v || pos[x] > pos[parent]))
        parent = x;
    }
    if (parent == v)
      continue;
    for (Vertex x : g.neighbors(v)) {
      if (x != parent && pos[x] < pos[v] && !g.adjacent(parent, x))
        return PeoViolation{v, parent, x};
    }
  }
  return std::nullopt;
}

namespace
{

// Shortest path u -> w avoiding N[v] except u and w.
std::optional<std::vector<Vertex>> avoiding_path(Graph const &g, Vertex v, Vertex u, Vertex w,
                                                 std::vector<std::uint32_t> &stamp,
                                                 std::vector<Vertex> &parent,
                                                 std::uint32_t &epoch)
{
  ++epoch;
  std::uint32_t blocked = epoch;
  stamp[v] = blocked;
  for (Vertex x : g.neighbors(v))
    stamp[x] = blocked;
  ++epoch;
  std::uint32_t seen = epoch;

  std::deque<Vertex> queue = {u};
  stamp[u] = seen;
  parent[u] = u;
  stamp[w] = 0;
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    if (x == w) {
      std::vector<Vertex> path;
      for (Vertex y = w; y != u; y = parent[y])
        path.push_back(y);
      path.push_back(u);
      std::reverse(path.begin(), path.end());
      return path;
    }
    for (Vertex y : g.neighbors(x)) {
      if (stamp[y] == blocked || stamp[y] == seen)
        continue;
      stamp[y] = seen;
      parent[y] = x;
      queue.push_back(y);
    }
  }
  return std::nullopt;
}

std::optional<HoleWitness> hole_through(Graph const &g, Vertex v, Vertex u, Vertex w,
                                        std::vector<std::uint32_t> &stamp,
                                        std::vector<Vertex> &parent, std::uint32_t &epoch)
{
  auto path = avoiding_path(g, v, u, w, stamp, parent, epoch);
  if (!path)
    return std::nullopt;
  HoleWitness h;
  h.vertices.push_back(v);
  h.vertices.insert(h.vertices.end(), path->begin(), path->end());
  return h;
}

} // namespace

HoleWitness extract_hole(Graph const &g, PeoViolation const &violation)
{
  std::vector<std::uint32_t> stamp(g.n(), 0);
  std::vector<Vertex> parent(g.n(), 0);
  std::uint32_t epoch = 0;

  auto h = hole_through(g, violation.v, violation.u, violation.w, stamp, parent, epoch);
  if (!h) {
    // Every hole passes through some vertex a with non-adjacent neighbours
    // b, c joined outside N[a]; scan starting at v.
    for (Vertex i = 0; i < g.n() && !h; ++i) {
      Vertex a = (violation.v + i) % g.n();
      auto nb = g.neighbors(a);
      for (std::size_t x = 0; x < nb.size() && !h; ++x) {
        for (std::size_t y = x + 1; y < nb.size() && !h; ++y) {
          if (!g.adjacent(nb[x], nb[y]))
            h = hole_through(g, a, nb[x], nb[y], stamp, parent, epoch);
        }
      }
    }
  }
  if (!h)
    throw InternalError("extract_hole: no hole found although the ordering check failed");
  if (!verify_induced_cycle(g, h->vertices))
    throw InternalError("extract_hole: produced cycle is not induced");
  return *h;
}

ChordalityResult is_chordal(Graph const &g)
{
  if (g.directed())
    throw InvalidArgument("is_chordal: graph must be undirected");
  auto order = mcs_order(g);
  auto violation = check_peo(g, order);
  ChordalityResult r;
  if (!violation)
    return r;
  r.chordal = false;
  r.hole = extract_hole(g, *violation);
  return r;
}

bool verify_induced_cycle(Graph const &g, std::span<const Vertex> seq)
{
  for (Vertex v : seq) {
    if (v >= g.n())
      return false;
  }
  return verify_induced_cycle_with(seq, [&](Vertex a, Vertex b) { return g.adjacent(a, b); });
}

bool verify_induced_path(Graph const &g, std::span<const Vertex> seq)
{
  for (Vertex v : seq) {
    if (v >= g.n())
      return false;
  }
  return verify_induced_path_with(seq, [&](Vertex a, Vertex b) { return g.adjacent(a, b); });
}

std::vector<Vertex> canonical_cycle(std::span<const Vertex> seq)
{
  std::size_t n = seq.size();
  if (n == 0)
    return {};
  std::size_t m = std::min_element(seq.begin(), seq.end()) - seq.begin();
  std::vector<Vertex> out;
  out.reserve(n);
  bool forward = seq[(m + 1) % n] <= seq[(m + n - 1) % n];
  for (std::size_t i = 0; i < n; ++i)
    out.push_back(forward ? seq[(m + i) % n] : seq[(m + n - i) % n]);
  return out;
}

std::optional<HoleWitness> brute_force_hole(Graph const &g)
{
  std::uint32_t n = g.n();
  std::vector<Vertex> path;
  std::vector<std::uint32_t> cnt(n, 0); // path vertices in N[x]
  std::optional<HoleWitness> found;

  auto add = [&](Vertex x, int d) {
    cnt[x] += d;
    for (Vertex y : g.neighbors(x))
      cnt[y] += d;
  };

  // Paths start at their least vertex s; only vertices > s are used.
  std::function<void()> extend = [&] {
    if (found)
      return;
    Vertex s = path.front();
    Vertex t = path.back();
    for (Vertex x : g.neighbors(t)) {
      if (x <= s)
        continue;
      bool to_s = path.size() >= 2 && g.adjacent(x, s);
      std::uint32_t allowed = to_s ? 2 : 1;
      if (cnt[x] != allowed || (to_s && x == path[1]))
        continue;
      if (to_s) {
        if (path.size() >= 3) {
          HoleWitness h;
          h.vertices = path;
          h.vertices.push_back(x);
          found = h;
          return;
        }
        continue;
      }
      path.push_back(x);
      add(x, 1);
      extend();
      add(x, -1);
      path.pop_back();
      if (found)
        return;
    }
  };

  for (Vertex s = 0; s < n && !found; ++s) {
    path.assign(1, s);
    add(s, 1);
    extend();
    add(s, -1);
  }
  return found;
}

namespace
{

std::optional<HoleWitness> find_c4_core(Graph const &g)
{
  std::uint32_t n = g.n();
  std::vector<Vertex> by_degree(n);
  for (Vertex v = 0; v < n; ++v)
    by_degree[v] = v;
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  std::vector<std::uint32_t> rank(n);
  for (std::uint32_t i = 0; i < n; ++i)
    rank[by_degree[i]] = i;

  std::vector<std::vector<Vertex>> bucket(n);
  std::vector<Vertex> touched;
  for (Vertex v : by_degree) {
    touched.clear();
    for (Vertex u : g.neighbors(v)) {
      if (rank[u] <= rank[v])
        continue;
      for (Vertex w : g.neighbors(u)) {
        if (rank[w] <= rank[v])
          continue;
        if (bucket[w].empty())
          touched.push_back(w);
        bucket[w].push_back(u);
      }
    }
    std::optional<HoleWitness> hit;
    for (Vertex w : touched) {
      auto &b = bucket[w];
      if (!hit && b.size() >= 2 && !g.adjacent(v, w)) {
        for (std::size_t i = 0; i < b.size() && !hit; ++i) {
          for (std::size_t j = i + 1; j < b.size() && !hit; ++j) {
            if (!g.adjacent(b[i], b[j]))
              hit = HoleWitness{{v, b[i], w, b[j]}};
          }
        }
      }
      b.clear();
    }
    if (hit)
      return hit;
  }
  return std::nullopt;
}

} // namespace

// Two closed twins are adjacent with the same other neighbours, so they
// never lie on a common induced 4-cycle; searching the twin quotient is
// exact and shrinks the cliques that make the 2-path buckets quadratic.
std::optional<HoleWitness> find_induced_c4(Graph const &g)
{
  auto tq = closed_twin_quotient(g);
  auto hit = find_c4_core(tq.quotient);
  if (!hit)
    return std::nullopt;
  for (Vertex &v : hit->vertices)
    v = tq.class_rep[v];
  if (!verify_induced_cycle(g, hit->vertices))
    throw InternalError("find_induced_c4: witness failed validation");
  return hit;
}

TwinQuotient closed_twin_quotient(Graph const &g)
{
  std::uint32_t n = g.n();
  auto mix = [](std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
  };
  std::vector<std::uint64_t> key(n);
  for (Vertex v = 0; v < n; ++v) {
    std::uint64_t h = mix(v);
    for (Vertex x : g.neighbors(v))
      h += mix(x);
    key[v] = h;
  }

  auto twins = [&](Vertex a, Vertex b) {
    if (g.degree(a) != g.degree(b) || !g.adjacent(a, b))
      return false;
    auto na = g.neighbors(a);
    auto nb = g.neighbors(b);
    std::size_t i = 0, j = 0;
    while (true) {
      while (i < na.size() && na[i] == b)
        ++i;
      while (j < nb.size() && nb[j] == a)
        ++j;
      if (i == na.size() || j == nb.size())
        return i == na.size() && j == nb.size();
      if (na[i] != nb[j])
        return false;
      ++i;
      ++j;
    }
  };

  std::vector<Vertex> idx(n);
  for (Vertex v = 0; v < n; ++v)
    idx[v] = v;
  std::sort(idx.begin(), idx.end(), [&](Vertex a, Vertex b) {
    return key[a] != key[b] ? key[a] < key[b] : a < b;
  });

  TwinQuotient t;
  t.class_of.assign(n, UINT32_MAX);
  std::vector<Vertex> leader(n, 0);
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && key[idx[j]] == key[idx[i]])
      ++j;
    std::vector<Vertex> leaders;
    for (std::size_t k = i; k < j; ++k) {
      Vertex v = idx[k];
      bool placed = false;
      for (Vertex l : leaders) {
        if (twins(l, v)) {
          leader[v] = l;
          placed = true;
          break;
        }
      }
      if (!placed) {
        leaders.push_back(v);
        leader[v] = v;
      }
    }
    i = j;
  }

  // Number classes by their least vertex.
  for (Vertex v = 0; v < n; ++v) {
    Vertex l = leader[v];
    if (t.class_of[l] == UINT32_MAX) {
      t.class_of[l] = static_cast<std::uint32_t>(t.class_rep.size());
      t.class_rep.push_back(v);
      t.class_size.push_back(0);
    }
    t.class_of[v] = t.class_of[l];
    ++t.class_size[t.class_of[v]];
  }

  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::uint32_t c = 0; c < t.class_rep.size(); ++c) {
    for (Vertex x : g.neighbors(t.class_rep[c])) {
      std::uint32_t d = t.class_of[x];
      if (d > c)
        edges.emplace_back(c, d);
    }
  }
  t.quotient = Graph::from_edges(static_cast<std::uint32_t>(t.class_rep.size()),
                                 std::move(edges), false);
  return t;
}

} // namespace pchord
