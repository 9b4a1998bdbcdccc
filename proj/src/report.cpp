#include "pchord/report.hpp"

#include <algorithm>

#include "pchord/errors.hpp"
#include "pchord/reduction.hpp"
#include "pchord/representations.hpp"

namespace pchord
{

Json group_json(FiniteGroup const &g, std::string const &spec)
{
  Json j;
  j["spec"] = spec;
  j["name"] = g.name();
  j["order"] = g.size();
  return j;
}

Json witness_json(FiniteGroup const &g, std::span<const ElemId> seq, bool cycle)
{
  Json j;
  j["kind"] = cycle ? "hole" : "path";
  j["length"] = seq.size();
  Json labels = Json::array(), indices = Json::array(), orders = Json::array();
  for (ElemId x : seq) {
    labels.push_back(g.label(x));
    indices.push_back(x);
    orders.push_back(g.order_of(x));
  }
  j["elements"] = labels;
  j["indices"] = indices;
  j["orders"] = orders;
  if (cycle ? seq.size() >= 4 : seq.size() >= 3) {
    auto in = classify_in_out(g, seq, cycle);
    Json flags = Json::array();
    for (bool b : in)
      flags.push_back(b);
    j["in_vertex"] = flags;
  } else {
    j["in_vertex"] = nullptr;
  }
  return j;
}

Json chordal_json(FiniteGroup const &g, std::string const &spec, ChordalityResult const &r,
                  std::uint64_t edges)
{
  Json j;
  j["schema"] = report_schema;
  j["command"] = "chordal";
  j["group"] = group_json(g, spec);
  j["graph"] = {{"kind", "power"}, {"vertices", g.size()}, {"edges", edges}};
  j["verdict"] = r.chordal ? "chordal" : "non-chordal";
  j["basis"] = "brute-force";
  if (r.hole)
    j["witness"] = witness_json(g, r.hole->vertices, true);
  else
    j["witness"] = nullptr;
  return j;
}

Json criterion_json(FiniteGroup const &g, CriterionReport const &r)
{
  Json j;
  j["id"] = r.id;
  j["applicable"] = r.applicable;
  j["fires"] = r.fires;
  j["implied"] = to_string(r.implied);
  Json w = Json::array();
  for (ElemId x : r.witness)
    w.push_back(g.label(x));
  j["witness"] = w;
  j["detail"] = r.detail;
  return j;
}

Json classify_json(std::string const &text, SimpleGroupId const &id, Verdict const &v)
{
  Json j;
  j["schema"] = report_schema;
  j["command"] = "classify";
  j["id"] = text;
  j["normalized"] = normalize(id).to_string();
  j["verdict"] = v.chordal ? "chordal" : "non-chordal";
  j["basis"] = to_string(v.basis);
  j["certificate"] = v.certificate;
  return j;
}

Json product_json(FiniteGroup const &h, std::string const &spec_h, FiniteGroup const &k,
                  std::string const &spec_k, ProductDecision const &d,
                  std::optional<bool> brute_force)
{
  Json j;
  j["schema"] = report_schema;
  j["command"] = "product";
  j["h"] = group_json(h, spec_h);
  j["k"] = group_json(k, spec_k);
  j["verdict"] = d.chordal ? "chordal" : "non-chordal";
  j["basis"] = "predicate";
  j["case"] = d.matched_case.empty() ? Json(nullptr) : Json(d.matched_case);
  j["considered"] = d.considered;
  j["matched"] = d.matched;
  if (brute_force)
    j["brute_force"] = *brute_force ? "chordal" : "non-chordal";
  return j;
}

std::optional<ElemId> find_by_label(FiniteGroup const &g, std::string const &label)
{
  if (auto const *perm = dynamic_cast<PermRep const *>(&g.rep())) {
    // Cycle notation: parse rather than compare, so any rotation of a
    // cycle is accepted.
    std::vector<Word> w;
    try {
      w = perm->parse(label);
    } catch (ParseError const &) {
      return std::nullopt;
    }
    return g.find_canonical(w);
  }
  for (ElemId x = 0; x < g.size(); ++x)
    if (g.label(x) == label)
      return x;
  return std::nullopt;
}

} // namespace pchord
