#include "pchord/group_spec.hpp"

#include <cctype>
#include <filesystem>

#include "pchord/errors.hpp"
#include "pchord/group_builders.hpp"
#include "pchord/group_queries.hpp"

namespace pchord
{

namespace
{

class Parser
{
public:
  explicit Parser(std::string const &text) : s_(text) {}

  GroupSpec parse_all()
  {
    GroupSpec g = parse_spec();
    skip_ws();
    if (pos_ != s_.size())
      fail("trailing characters");
    return g;
  }

private:
  [[noreturn]] void fail(std::string const &what) const
  {
    throw ParseError("group spec \"" + s_ + "\": " + what + " at offset " +
                     std::to_string(pos_));
  }

  void skip_ws()
  {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  bool accept(char c)
  {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c)
  {
    if (!accept(c))
      fail(std::string("expected '") + c + "'");
  }

  std::string ident()
  {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    return s_.substr(start, pos_ - start);
  }

  std::uint64_t number()
  {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    if (start == pos_)
      fail("expected a number");
    if (pos_ - start > 12)
      fail("number too large");
    return std::stoull(s_.substr(start, pos_ - start));
  }

  GroupSpec parse_spec()
  {
    std::size_t at = pos_;
    std::string kw = ident();
    GroupSpec g;
    if (kw == "prod") {
      g.kind = GroupSpec::Kind::product;
      expect('(');
      g.children.push_back(parse_spec());
      expect(',');
      g.children.push_back(parse_spec());
      expect(')');
      return g;
    }
    expect(':');
    if (kw == "cyclic") {
      g.kind = GroupSpec::Kind::cyclic;
      g.params.push_back(number());
    } else if (kw == "ab") {
      g.kind = GroupSpec::Kind::abelian;
      g.params.push_back(number());
      while (accept('x'))
        g.params.push_back(number());
    } else if (kw == "sym") {
      g.kind = GroupSpec::Kind::symmetric;
      g.params.push_back(number());
    } else if (kw == "alt") {
      g.kind = GroupSpec::Kind::alternating;
      g.params.push_back(number());
    } else if (kw == "dih") {
      g.kind = GroupSpec::Kind::dihedral;
      g.children.push_back(parse_spec());
    } else if (kw == "q") {
      g.kind = GroupSpec::Kind::quaternion;
      g.params.push_back(number());
    } else if (kw == "sl" || kw == "psl") {
      g.kind = kw == "sl" ? GroupSpec::Kind::special_linear
                          : GroupSpec::Kind::projective_special_linear;
      g.params.push_back(number());
      expect(',');
      g.params.push_back(number());
    } else if (kw == "sd") {
      g.kind = GroupSpec::Kind::semidirect;
      g.params.push_back(number());
      expect('^');
      g.params.push_back(number());
      expect(',');
      g.params.push_back(number());
      expect('^');
      g.params.push_back(number());
      expect(',');
      g.params.push_back(number());
    } else if (kw == "sporadic") {
      g.kind = GroupSpec::Kind::sporadic;
      g.name = ident_alnum();
      if (g.name.empty())
        fail("expected a sporadic group name");
      expect('@');
      skip_ws();
      std::size_t start = pos_;
      int depth = 0;
      while (pos_ < s_.size()) {
        char c = s_[pos_];
        if (c == '(')
          ++depth;
        if ((c == ')' || c == ',') && depth == 0)
          break;
        if (c == ')')
          --depth;
        ++pos_;
      }
      g.file = s_.substr(start, pos_ - start);
      while (!g.file.empty() && std::isspace(static_cast<unsigned char>(g.file.back())))
        g.file.pop_back();
      if (g.file.empty())
        fail("expected a data file");
    } else {
      pos_ = at;
      fail("unknown group family \"" + kw + "\"");
    }
    return g;
  }

  std::string ident_alnum()
  {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    return s_.substr(start, pos_ - start);
  }

  std::string s_;
  std::size_t pos_ = 0;
};

std::uint32_t as_u32(std::uint64_t v, char const *what)
{
  if (v > UINT32_MAX)
    throw InvalidArgument(std::string("group spec: ") + what + " too large");
  return static_cast<std::uint32_t>(v);
}

} // namespace

std::string GroupSpec::to_string() const
{
  auto num = [](std::uint64_t v) { return std::to_string(v); };
  switch (kind) {
  case Kind::cyclic:
    return "cyclic:" + num(params[0]);
  case Kind::abelian: {
    std::string s = "ab:";
    for (std::size_t i = 0; i < params.size(); ++i)
      s += (i ? "x" : "") + num(params[i]);
    return s;
  }
  case Kind::symmetric:
    return "sym:" + num(params[0]);
  case Kind::alternating:
    return "alt:" + num(params[0]);
  case Kind::dihedral:
    return "dih:" + children[0].to_string();
  case Kind::quaternion:
    return "q:" + num(params[0]);
  case Kind::special_linear:
    return "sl:" + num(params[0]) + "," + num(params[1]);
  case Kind::projective_special_linear:
    return "psl:" + num(params[0]) + "," + num(params[1]);
  case Kind::semidirect:
    return "sd:" + num(params[0]) + "^" + num(params[1]) + "," + num(params[2]) + "^" +
           num(params[3]) + "," + num(params[4]);
  case Kind::product:
    return "prod(" + children[0].to_string() + "," + children[1].to_string() + ")";
  case Kind::sporadic:
    return "sporadic:" + name + "@" + file;
  }
  return {};
}

GroupSpec parse_group_spec(std::string const &text)
{
  return Parser(text).parse_all();
}

GroupPtr build_group(GroupSpec const &spec, std::uint64_t cap, std::string const &data_dir)
{
  using K = GroupSpec::Kind;
  auto const &p = spec.params;
  switch (spec.kind) {
  case K::cyclic:
    return cyclic(as_u32(p[0], "order"), cap);
  case K::abelian: {
    std::vector<std::uint32_t> moduli;
    for (auto v : p)
      moduli.push_back(as_u32(v, "modulus"));
    return abelian(moduli, cap);
  }
  case K::symmetric:
    return symmetric(as_u32(p[0], "degree"), cap);
  case K::alternating:
    return alternating(as_u32(p[0], "degree"), cap);
  case K::dihedral: {
    GroupPtr a = build_group(spec.children[0], cap, data_dir);
    if (!is_abelian(*a))
      throw InvalidArgument("dih: " + a->name() + " is not abelian");
    return generalized_dihedral(a, cap);
  }
  case K::quaternion:
    return quaternion(as_u32(p[0], "order"), cap);
  case K::special_linear:
    return special_linear(as_u32(p[0], "dimension"), p[1], cap);
  case K::projective_special_linear:
    return projective_special_linear(as_u32(p[0], "dimension"), p[1], cap);
  case K::semidirect:
    return semidirect_cyclic(as_u32(p[0], "p"), as_u32(p[1], "m"), as_u32(p[2], "q"),
                             as_u32(p[3], "n"), as_u32(p[4], "k"), cap)
        .group;
  case K::product: {
    GroupPtr h = build_group(spec.children[0], cap, data_dir);
    GroupPtr k = build_group(spec.children[1], cap, data_dir);
    return direct_product(h, k, cap);
  }
  case K::sporadic: {
    std::filesystem::path path(spec.file);
    if (path.is_relative() && !data_dir.empty() &&
        !std::filesystem::exists(path))
      path = std::filesystem::path(data_dir) / path;
    return load_sporadic(spec.name, path.string(), cap);
  }
  }
  throw InternalError("build_group: unhandled kind");
}

GroupPtr build_group(std::string const &text, std::uint64_t cap, std::string const &data_dir)
{
  return build_group(parse_group_spec(text), cap, data_dir);
}

} // namespace pchord
