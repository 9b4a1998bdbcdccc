#include "pchord/induced_path.hpp"

#include <algorithm>

#include "pchord/errors.hpp"

namespace pchord
{

namespace
{

class PathSearch
{
public:
  PathSearch(Graph const &g, unsigned limit, std::uint64_t budget)
  : g_(g), limit_(limit), budget_(budget), cnt_(g.n(), 0)
  {}

  void run(std::vector<Vertex> const &starts)
  {
    for (Vertex s : starts) {
      if (best_.size() >= limit_ || out_of_budget_)
        break;
      path_.assign(1, s);
      touch(s, 1);
      extend();
      touch(s, -1);
    }
  }

  std::vector<Vertex> const &best() const { return best_; }
  bool exhausted() const { return out_of_budget_; }
  std::uint64_t nodes() const { return nodes_; }

private:
  void touch(Vertex x, int d)
  {
    cnt_[x] += d;
    for (Vertex y : g_.neighbors(x))
      cnt_[y] += d;
  }

  void extend()
  {
    ++nodes_;
    if (budget_ != 0 && nodes_ > budget_) {
      out_of_budget_ = true;
      return;
    }
    if (path_.size() > best_.size())
      best_ = path_;
    if (path_.size() >= limit_)
      return;
    Vertex t = path_.back();
    for (Vertex x : g_.neighbors(t)) {
      // x sees t and nothing else on the path.
      if (cnt_[x] != 1)
        continue;
      path_.push_back(x);
      touch(x, 1);
      extend();
      touch(x, -1);
      path_.pop_back();
      if (best_.size() >= limit_ || out_of_budget_)
        return;
    }
  }

  Graph const &g_;
  unsigned limit_;
  std::uint64_t budget_;
  std::vector<std::uint32_t> cnt_;
  std::vector<Vertex> path_, best_;
  std::uint64_t nodes_ = 0;
  bool out_of_budget_ = false;
};

} // namespace

InducedPathResult bounded_longest_induced_path(Graph const &g, InducedPathOptions const &options)
{
  if (options.limit > max_path_limit) {
    throw InvalidArgument("bounded_longest_induced_path: limit " +
                          std::to_string(options.limit) + " exceeds cap " +
                          std::to_string(max_path_limit));
  }
  if (g.directed())
    throw InvalidArgument("bounded_longest_induced_path: graph must be undirected");

  InducedPathResult r;
  if (g.n() == 0 || options.limit == 0)
    return r;

  std::vector<Vertex> starts = options.start_candidates;
  if (starts.empty()) {
    starts.resize(g.n());
    for (Vertex v = 0; v < g.n(); ++v)
      starts[v] = v;
  }

  if (!options.merge_twins) {
    PathSearch search(g, options.limit, options.node_budget);
    search.run(starts);
    r.witness.vertices = search.best();
    r.exact = !search.exhausted();
    r.nodes = search.nodes();
  } else {
    TwinQuotient tq = closed_twin_quotient(g);
    std::vector<Vertex> qstarts;
    std::vector<bool> seen(tq.class_rep.size(), false);
    for (Vertex v : starts) {
      std::uint32_t c = tq.class_of[v];
      if (!seen[c]) {
        seen[c] = true;
        qstarts.push_back(c);
      }
    }
    PathSearch search(tq.quotient, options.limit, options.node_budget);
    search.run(qstarts);
    for (Vertex c : search.best())
      r.witness.vertices.push_back(tq.class_rep[c]);
    r.exact = !search.exhausted();
    r.nodes = search.nodes();

    // A single twin class of size >= 2 still carries a 2-vertex path.
    if (r.witness.vertices.size() == 1 && options.limit >= 2) {
      for (std::uint32_t c = 0; c < tq.class_rep.size(); ++c) {
        if (tq.class_size[c] < 2)
          continue;
        Vertex a = tq.class_rep[c];
        for (Vertex b : g.neighbors(a)) {
          if (tq.class_of[b] == c) {
            r.witness.vertices = {a, b};
            break;
          }
        }
        break;
      }
    }
  }

  r.length = static_cast<unsigned>(r.witness.vertices.size());
  if (!verify_induced_path(g, r.witness.vertices))
    throw InternalError("bounded_longest_induced_path: witness is not an induced path");
  return r;
}

} // namespace pchord
