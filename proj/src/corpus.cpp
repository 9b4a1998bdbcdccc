#include "pchord/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <iomanip>
#include <sstream>
#include <thread>

#include "pchord/chordal.hpp"
#include "pchord/classify.hpp"
#include "pchord/criteria.hpp"
#include "pchord/errors.hpp"
#include "pchord/group_spec.hpp"
#include "pchord/numtheory.hpp"
#include "pchord/power_graph.hpp"

namespace pchord
{

namespace
{

std::string trim(std::string s)
{
  auto ws = [](unsigned char c) { return std::isspace(c); };
  while (!s.empty() && ws(s.back()))
    s.pop_back();
  std::size_t i = 0;
  while (i < s.size() && ws(s[i]))
    ++i;
  return s.substr(i);
}

std::string verdict_name(bool chordal)
{
  return chordal ? "chordal" : "non-chordal";
}

// Runs a criterion on g; returns the implied verdict if it fires.
std::optional<std::string> run_criterion(std::string const &id, FiniteGroup const &g,
                                         std::string &note)
{
  if (id == "order-screen") {
    auto orders = order_list(g);
    auto s = nt::order_screen(orders);
    if (s.clean())
      return std::nullopt;
    note = "element order " + std::to_string(s.offending_order);
    return verdict_name(false);
  }
  CriterionReport r;
  if (id == "c4")
    r = check_c4(g);
  else if (id == "conjugate-cyclic")
    r = check_conjugate_cyclic(g);
  else if (id == "centralizer-sufficient")
    r = check_centralizer_sufficient(g);
  else if (id == "gk-necessary")
    r = check_gk_necessary(g);
  else
    throw InvalidArgument("unknown criterion '" + id + "'");
  note = r.detail;
  if (!r.fires)
    return std::nullopt;
  return to_string(r.implied);
}

ElemId need_element(FiniteGroup const &g, std::string const &label)
{
  auto x = find_by_label(g, label);
  if (!x)
    throw InvalidArgument("element " + label + " not found in " + g.name());
  return *x;
}

std::string opt(CorpusEntry const &e, std::string const &key)
{
  auto it = e.options.find(key);
  return it == e.options.end() ? std::string() : it->second;
}

void decide_predicate(CorpusEntry const &e, CorpusOptions const &o, CorpusResult &r)
{
  std::string const &s = e.spec;
  if (s.rfind("prod(", 0) == 0) {
    auto spec = parse_group_spec(s);
    auto h = build_group(spec.children[0], o.cap, o.data_dir);
    auto k = build_group(spec.children[1], o.cap, o.data_dir);
    auto d = decide_direct_product(*h, *k);
    r.got = verdict_name(d.chordal);
    r.note = d.chordal ? "case " + d.matched_case : "no case applies";
  } else if (s.rfind("q:", 0) == 0) {
    auto spec = parse_group_spec(s);
    auto v = decide_quaternion(spec.params[0]);
    r.got = verdict_name(v.chordal);
    r.note = v.certificate;
  } else if (s.rfind("dih:", 0) == 0) {
    auto spec = parse_group_spec(s);
    auto a = build_group(spec.children[0], o.cap, o.data_dir);
    auto v = decide_generalized_dihedral(*a);
    r.got = verdict_name(v.chordal);
    r.note = v.certificate;
  } else {
    auto v = classify_simple(parse_simple_group_id(s));
    r.got = verdict_name(v.chordal);
    r.note = v.certificate;
  }
  r.basis_used = "predicate";
}

} // namespace

std::string to_string(CorpusResult::Status s)
{
  switch (s) {
  case CorpusResult::Status::pass:
    return "ok";
  case CorpusResult::Status::mismatch:
    return "MISMATCH";
  case CorpusResult::Status::skipped:
    return "skipped";
  default:
    return "ERROR";
  }
}

std::vector<CorpusEntry> parse_corpus(std::string const &text)
{
  std::vector<CorpusEntry> out;
  std::istringstream in(text);
  std::size_t lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#')
      continue;
    std::vector<std::string> fields;
    std::stringstream ss(t);
    for (std::string f; std::getline(ss, f, '|');)
      fields.push_back(trim(f));
    auto fail = [&](std::string const &why) {
      throw ParseError("corpus line " + std::to_string(lineno) + ": " + why);
    };
    if (fields.size() < 4 || fields.size() > 5)
      fail("expected 'spec | expected | basis | anchor [| options]'");
    CorpusEntry e;
    e.line = lineno;
    e.spec = fields[0];
    e.expected = fields[1];
    e.basis = fields[2];
    e.anchor = fields[3];
    if (e.spec.empty())
      fail("empty spec");
    if (e.expected != "chordal" && e.expected != "non-chordal")
      fail("expected verdict must be chordal or non-chordal");
    if (e.basis != "brute-force" && e.basis != "criterion" && e.basis != "predicate")
      fail("basis must be brute-force, criterion or predicate");
    if (fields.size() == 5) {
      std::istringstream os(fields[4]);
      for (std::string tok; os >> tok;) {
        auto eq = tok.find('=');
        if (eq == std::string::npos)
          e.options[tok] = "";
        else
          e.options[tok.substr(0, eq)] = tok.substr(eq + 1);
      }
    }
    if (e.basis == "criterion" && opt(e, "criterion").empty())
      fail("criterion entries need criterion=<id>");
    out.push_back(std::move(e));
  }
  return out;
}

CorpusResult run_entry(CorpusEntry const &e, CorpusOptions const &o)
{
  CorpusResult r;
  auto t0 = std::chrono::steady_clock::now();
  try {
    if (e.basis == "predicate") {
      decide_predicate(e, o, r);
    } else {
      auto g = build_group(e.spec, o.cap, o.data_dir);
      bool brute = e.basis == "brute-force" && (o.deep || !e.options.count("deep"));
      if (brute) {
        auto res = is_chordal(power_graph(*g));
        r.got = verdict_name(res.chordal);
        r.basis_used = "brute-force";
        if (res.hole)
          r.note = "hole of length " + std::to_string(res.hole->vertices.size());
      } else {
        std::string crit = e.basis == "criterion" ? opt(e, "criterion") : opt(e, "fallback");
        if (crit.empty()) {
          r.status = CorpusResult::Status::skipped;
          r.note = "needs --deep";
        } else if (e.options.count("x") || e.options.count("g")) {
          bool conj = e.options.count("x") > 0;
          ElemId a = need_element(*g, opt(e, conj ? "x" : "g"));
          ElemId b = need_element(*g, opt(e, conj ? "y" : "h"));
          bool holds = conj ? conjugate_cyclic_pair_holds(*g, a, b) : c4_pair_holds(*g, a, b);
          r.basis_used = "criterion:" + crit + " (pair)";
          if (holds)
            r.got = verdict_name(false);
          r.note = holds ? "printed pair satisfies the criterion" : "printed pair fails";
        } else {
          r.basis_used = "criterion:" + crit;
          if (auto v = run_criterion(crit, *g, r.note))
            r.got = *v;
        }
      }
    }
    if (r.status != CorpusResult::Status::skipped)
      r.status = r.got == e.expected ? CorpusResult::Status::pass : CorpusResult::Status::mismatch;
    if (r.status == CorpusResult::Status::mismatch && r.got.empty())
      r.note = "criterion did not fire: " + r.note;
  } catch (std::exception const &ex) {
    r.status = CorpusResult::Status::error;
    r.note = ex.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::vector<CorpusResult> run_corpus(std::vector<CorpusEntry> const &entries,
                                     CorpusOptions const &o)
{
  std::vector<CorpusResult> results(entries.size());
  unsigned threads = o.threads ? o.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, std::max<std::size_t>(entries.size(), 1));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < entries.size();)
      results[i] = run_entry(entries[i], o);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t)
    pool.emplace_back(work);
  work();
  for (auto &t : pool)
    t.join();
  return results;
}

std::string format_corpus_table(std::vector<CorpusEntry> const &entries,
                                std::vector<CorpusResult> const &results)
{
  std::size_t w = 4;
  for (auto const &e : entries)
    w = std::max(w, e.spec.size());
  w = std::min<std::size_t>(w, 48);
  std::ostringstream os;
  os << std::left << std::setw(4) << "#" << std::setw(static_cast<int>(w) + 2) << "spec"
     << std::setw(13) << "expected" << std::setw(13) << "got" << std::setw(10) << "status"
     << std::setw(36) << "basis" << "anchor\n";
  std::size_t counts[4] = {0, 0, 0, 0};
  for (std::size_t i = 0; i < entries.size(); ++i) {
    auto const &e = entries[i];
    auto const &r = results[i];
    ++counts[static_cast<int>(r.status)];
    os << std::setw(4) << i + 1 << std::setw(static_cast<int>(w) + 2) << e.spec << std::setw(13)
       << e.expected << std::setw(13) << (r.got.empty() ? "-" : r.got) << std::setw(10)
       << to_string(r.status) << std::setw(36) << (r.basis_used.empty() ? "-" : r.basis_used)
       << e.anchor << "\n";
    if (r.status == CorpusResult::Status::mismatch || r.status == CorpusResult::Status::error)
      os << "      " << r.note << "\n";
  }
  os << entries.size() << " entries: " << counts[0] << " ok, " << counts[1] << " mismatch, "
     << counts[2] << " skipped, " << counts[3] << " error\n";
  return os.str();
}

Json corpus_json(std::vector<CorpusEntry> const &entries, std::vector<CorpusResult> const &results)
{
  Json j;
  j["schema"] = report_schema;
  j["command"] = "corpus";
  Json rows = Json::array();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    auto const &e = entries[i];
    auto const &r = results[i];
    Json row;
    row["line"] = e.line;
    row["spec"] = e.spec;
    row["expected"] = e.expected;
    row["got"] = r.got.empty() ? Json(nullptr) : Json(r.got);
    row["status"] = to_string(r.status);
    row["basis"] = e.basis;
    row["basis_used"] = r.basis_used;
    row["anchor"] = e.anchor;
    row["note"] = r.note;
    rows.push_back(row);
  }
  j["entries"] = rows;
  j["ok"] = corpus_ok(results);
  return j;
}

bool corpus_ok(std::vector<CorpusResult> const &results)
{
  return std::all_of(results.begin(), results.end(), [](CorpusResult const &r) {
    return r.status == CorpusResult::Status::pass || r.status == CorpusResult::Status::skipped;
  });
}

} // namespace pchord
