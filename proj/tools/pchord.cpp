// Command-line front end. Exit status: 0 chordal (or success), 1
// non-chordal (or corpus mismatch), 2 error. Timing goes to stderr so that
// stdout is identical across runs.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pchord/chordal.hpp"
#include "pchord/classify.hpp"
#include "pchord/corpus.hpp"
#include "pchord/criteria.hpp"
#include "pchord/errors.hpp"
#include "pchord/group_builders.hpp"
#include "pchord/group_queries.hpp"
#include "pchord/group_spec.hpp"
#include "pchord/induced_path.hpp"
#include "pchord/numtheory.hpp"
#include "pchord/power_graph.hpp"
#include "pchord/report.hpp"

#ifndef PCHORD_DATA_DIR
#define PCHORD_DATA_DIR ""
#endif

namespace
{

using namespace pchord;
using Clock = std::chrono::steady_clock;

struct Common
{
  std::uint64_t cap = default_order_cap;
  std::string data_dir = PCHORD_DATA_DIR;
  bool json = false;
  bool quiet_timing = false;
  std::string out;
};

void emit(Common const &c, std::string const &text)
{
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out);
  if (!f)
    throw InvalidArgument("cannot write " + c.out);
  f << text;
}

void timing(Common const &c, char const *what, Clock::time_point t0)
{
  if (c.quiet_timing)
    return;
  double s = std::chrono::duration<double>(Clock::now() - t0).count();
  std::cerr << what << ": " << s << " s\n";
}

std::string labels_line(FiniteGroup const &g, std::vector<ElemId> const &seq)
{
  std::string out;
  for (ElemId x : seq)
    out += (out.empty() ? "" : " ") + g.label(x);
  return out;
}

int cmd_chordal(Common const &c, std::string const &spec)
{
  auto t0 = Clock::now();
  auto g = build_group(spec, c.cap, c.data_dir);
  auto graph = power_graph(*g);
  auto res = is_chordal(graph);
  timing(c, "chordal", t0);
  if (c.json) {
    emit(c, chordal_json(*g, spec, res, graph.edge_count()).dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << spec << ": " << (res.chordal ? "chordal" : "non-chordal") << " (order " << g->size()
       << ", " << graph.edge_count() << " edges)\n";
    if (res.hole)
      os << "hole (" << res.hole->vertices.size() << "): " << labels_line(*g, res.hole->vertices)
         << "\n";
    emit(c, os.str());
  }
  return res.chordal ? 0 : 1;
}

int cmd_criteria(Common const &c, std::string const &spec)
{
  auto t0 = Clock::now();
  auto g = build_group(spec, c.cap, c.data_dir);
  std::vector<CriterionReport> reports;

  auto orders = order_list(*g);
  auto screen = nt::order_screen(orders);
  CriterionReport sr;
  sr.id = "order-screen";
  sr.fires = !screen.clean();
  sr.implied = sr.fires ? Implied::non_chordal : Implied::none;
  sr.detail = sr.fires ? "element order " + std::to_string(screen.offending_order)
                             + " divisible by p^2q^2 or pqr"
                       : "no element order divisible by p^2q^2 or pqr";
  if (sr.fires) {
    for (ElemId x = 0; x < g->size(); ++x)
      if (g->order_of(x) == screen.offending_order) {
        sr.witness = {x};
        break;
      }
  }
  reports.push_back(sr);

  if (screen.clean()) {
    reports.push_back(check_c4(*g));
  } else {
    CriterionReport na;
    na.id = "c4";
    na.applicable = false;
    na.detail = "hypothesis fails: " + sr.detail;
    reports.push_back(na);
  }
  reports.push_back(check_centralizer_sufficient(*g));
  reports.push_back(check_conjugate_cyclic(*g));
  reports.push_back(check_gk_necessary(*g));
  timing(c, "criteria", t0);

  if (c.json) {
    Json j;
    j["schema"] = report_schema;
    j["command"] = "criteria";
    j["group"] = group_json(*g, spec);
    Json arr = Json::array();
    for (auto const &r : reports)
      arr.push_back(criterion_json(*g, r));
    j["criteria"] = arr;
    emit(c, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << spec << " (order " << g->size() << ")\n";
    for (auto const &r : reports) {
      os << "  " << r.id << ": "
         << (!r.applicable ? "not applicable" : r.fires ? "fires" : "does not fire");
      if (r.fires)
        os << " -> " << to_string(r.implied);
      os << "\n    " << r.detail << "\n";
    }
    emit(c, os.str());
  }
  return 0;
}

int cmd_classify(Common const &c, std::string const &text)
{
  auto id = parse_simple_group_id(text);
  auto v = classify_simple(id);
  std::ostringstream os;
  if (c.json)
    os << classify_json(text, id, v).dump(2) << "\n";
  else
    os << text << ": " << (v.chordal ? "yes" : "no") << " (" << to_string(v.basis) << ")\n";
  emit(c, os.str());
  return v.chordal ? 0 : 1;
}

int cmd_product(Common const &c, std::string const &sh, std::string const &sk, bool brute)
{
  auto t0 = Clock::now();
  auto h = build_group(sh, c.cap, c.data_dir);
  auto k = build_group(sk, c.cap, c.data_dir);
  auto d = decide_direct_product(*h, *k);
  std::optional<bool> bf;
  if (brute)
    bf = is_chordal(power_graph(*direct_product(h, k, c.cap))).chordal;
  timing(c, "product", t0);
  if (c.json) {
    emit(c, product_json(*h, sh, *k, sk, d, bf).dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << sh << " x " << sk << ": " << (d.chordal ? "chordal" : "non-chordal");
    if (d.chordal)
      os << " (case " << d.matched_case << ")";
    os << "\n";
    if (bf)
      os << "brute force: " << (*bf ? "chordal" : "non-chordal") << "\n";
    emit(c, os.str());
  }
  return d.chordal ? 0 : 1;
}

int cmd_corpus(Common const &c, std::string const &path, bool deep, unsigned threads)
{
  std::ifstream in(path);
  if (!in)
    throw InvalidArgument("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  auto entries = parse_corpus(buf.str());
  CorpusOptions o;
  o.deep = deep;
  o.threads = threads;
  o.cap = c.cap;
  o.data_dir = c.data_dir;
  auto t0 = Clock::now();
  auto results = run_corpus(entries, o);
  if (!c.quiet_timing) {
    for (std::size_t i = 0; i < entries.size(); ++i)
      std::cerr << "  " << entries[i].spec << ": " << results[i].seconds << " s\n";
  }
  timing(c, "corpus", t0);
  emit(c, c.json ? corpus_json(entries, results).dump(2) + "\n"
                 : format_corpus_table(entries, results));
  return corpus_ok(results) ? 0 : 1;
}

int cmd_export(Common const &c, std::string const &spec, std::string const &format,
               std::string const &target)
{
  auto g = build_group(spec, c.cap, c.data_dir);
  Graph graph;
  if (target == "power")
    graph = power_graph(*g);
  else if (target == "dpower")
    graph = directed_power_graph(*g);
  else
    graph = commuting_graph(*g);
  auto labels = element_labels(*g);
  if (format == "dot") {
    emit(c, to_dot(graph, labels));
  } else {
    Json j;
    j["schema"] = report_schema;
    j["command"] = "export";
    j["group"] = group_json(*g, spec);
    Json gj;
    gj["kind"] = target;
    gj["directed"] = graph.directed();
    gj["vertices"] = graph.n();
    gj["labels"] = labels;
    Json edges = Json::array();
    for (auto [u, v] : graph.edge_list())
      edges.push_back({u, v});
    gj["edges"] = edges;
    j["graph"] = gj;
    emit(c, j.dump(2) + "\n");
  }
  return 0;
}

int cmd_path(Common const &c, std::string const &spec, unsigned limit, std::uint64_t budget)
{
  auto t0 = Clock::now();
  auto g = build_group(spec, c.cap, c.data_dir);
  InducedPathOptions o;
  o.limit = limit;
  o.node_budget = budget;
  auto r = bounded_longest_induced_path(power_graph(*g), o);
  timing(c, "path", t0);
  if (c.json) {
    Json j;
    j["schema"] = report_schema;
    j["command"] = "path";
    j["group"] = group_json(*g, spec);
    j["limit"] = limit;
    j["length"] = r.length;
    j["exact"] = r.exact;
    j["witness"] = witness_json(*g, r.witness.vertices, false);
    emit(c, j.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << spec << ": longest induced path " << r.length << (r.exact ? "" : " (budget exhausted)")
       << " with limit " << limit << "\n"
       << "path: " << labels_line(*g, r.witness.vertices) << "\n";
    emit(c, os.str());
  }
  return 0;
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Power graphs of finite groups: chordality, criteria and classification"};
  app.require_subcommand(1);
  app.fallthrough();
  Common c;
  app.add_option("--cap", c.cap, "Largest group order to enumerate")->capture_default_str();
  app.add_option("--data-dir", c.data_dir, "Base directory for relative sporadic data paths");
  app.add_flag("--json", c.json, "Emit the JSON report");
  app.add_option("--out", c.out, "Write the report to a file instead of stdout");
  app.add_flag("--no-timing", c.quiet_timing, "Do not print timing to stderr");
  bool deep = false;
  app.add_flag("--deep", deep, "Run long brute-force computations (corpus)");
  std::uint64_t seed_limit = 0;
  app.add_option("--seed-limit", seed_limit, "Induced-path search node budget, 0 = unbounded");

  std::string spec, spec_k, format = "dot", target = "power";
  unsigned threads = 0, limit = 20;
  bool brute = false;

  auto *chordal = app.add_subcommand("chordal", "Decide chordality of Pow(G) by brute force");
  chordal->add_option("spec", spec, "Group spec")->required();
  auto *criteria = app.add_subcommand("criteria", "Evaluate the structural criteria");
  criteria->add_option("spec", spec, "Group spec")->required();
  auto *classify = app.add_subcommand("classify", "Classify a finite simple group");
  classify->add_option("id", spec, "Simple group id, e.g. psl:2,61")->required();
  auto *product = app.add_subcommand("product", "Decide H x K from the factors");
  product->add_option("H", spec, "Group spec of H")->required();
  product->add_option("K", spec_k, "Group spec of K")->required();
  product->add_flag("--brute", brute, "Also run brute force on the product");
  auto *corpus = app.add_subcommand("corpus", "Run a corpus file");
  corpus->add_option("path", spec, "Corpus file")->required();
  corpus->add_option("--threads", threads, "Worker threads, 0 = all cores");
  auto *exp = app.add_subcommand("export", "Export a graph as DOT or JSON");
  exp->add_option("spec", spec, "Group spec")->required();
  exp->add_option("--format", format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
  exp->add_option("--target", target, "power, dpower or commuting")
      ->check(CLI::IsMember({"power", "dpower", "commuting"}));
  auto *path = app.add_subcommand("path", "Longest induced path in Pow(G), bounded");
  path->add_option("spec", spec, "Group spec")->required();
  path->add_option("--limit", limit, "Vertex bound")->check(CLI::Range(1u, max_path_limit));

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const &e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*chordal)
      return cmd_chordal(c, spec);
    if (*criteria)
      return cmd_criteria(c, spec);
    if (*classify)
      return cmd_classify(c, spec);
    if (*product)
      return cmd_product(c, spec, spec_k, brute);
    if (*corpus)
      return cmd_corpus(c, spec, deep, threads);
    if (*exp)
      return cmd_export(c, spec, format, target);
    if (*path)
      return cmd_path(c, spec, limit, seed_limit);
  } catch (pchord::Error const &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (std::exception const &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
