#ifndef PCHORD_GROUP_SPEC_HPP
#define PCHORD_GROUP_SPEC_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "group.hpp"

namespace pchord
{

/// Parse tree of the group construction language (docs/group-spec.md):
///
///   cyclic:N | ab:N1xN2x... | sym:N | alt:N | dih:<abelian spec> | q:4N |
///   sl:K,Q | psl:K,Q | sd:P^M,Q^N,K | prod(<spec>,<spec>) | sporadic:NAME@FILE
struct GroupSpec
{
  enum class Kind
  {
    cyclic,
    abelian,
    symmetric,
    alternating,
    dihedral,
    quaternion,
    special_linear,
    projective_special_linear,
    semidirect,
    product,
    sporadic
  };

  Kind kind = Kind::cyclic;
  std::vector<std::uint64_t> params;
  std::vector<GroupSpec> children;
  std::string name; // sporadic name
  std::string file; // sporadic data file

  std::string to_string() const;
};

/// Throws ParseError on malformed input and InvalidArgument on parameters
/// outside the supported ranges.
GroupSpec parse_group_spec(std::string const &text);

/// Builds the group. Relative sporadic data paths resolve against
/// `data_dir` when non-empty.
GroupPtr build_group(GroupSpec const &spec, std::uint64_t cap = default_order_cap,
                     std::string const &data_dir = "");
GroupPtr build_group(std::string const &text, std::uint64_t cap = default_order_cap,
                     std::string const &data_dir = "");

} // namespace pchord

#endif // PCHORD_GROUP_SPEC_HPP
