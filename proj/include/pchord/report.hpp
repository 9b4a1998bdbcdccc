#ifndef PCHORD_REPORT_HPP
#define PCHORD_REPORT_HPP

#include <optional>
#include <span>
#include <string>

#include <json.hpp>

#include "chordal.hpp"
#include "classify.hpp"
#include "criteria.hpp"
#include "group.hpp"

namespace pchord
{

/// Version tag carried by every JSON document (docs/json-schema.md).
inline constexpr char const *report_schema = "pchord.report/1";

using Json = nlohmann::ordered_json;

Json group_json(FiniteGroup const &g, std::string const &spec);

/// {"kind", "length", "elements" (labels), "indices", "orders", "in_vertex"}.
/// The in/out labels are filled for induced paths (>= 3) and cycles.
Json witness_json(FiniteGroup const &g, std::span<const ElemId> seq, bool cycle);

Json chordal_json(FiniteGroup const &g, std::string const &spec, ChordalityResult const &r,
                  std::uint64_t edges);

Json criterion_json(FiniteGroup const &g, CriterionReport const &r);

Json classify_json(std::string const &text, SimpleGroupId const &id, Verdict const &v);

Json product_json(FiniteGroup const &h, std::string const &spec_h, FiniteGroup const &k,
                  std::string const &spec_k, ProductDecision const &d,
                  std::optional<bool> brute_force);

/// Finds an element by its printed label (cycle notation or matrix rows).
std::optional<ElemId> find_by_label(FiniteGroup const &g, std::string const &label);

} // namespace pchord

#endif // PCHORD_REPORT_HPP
