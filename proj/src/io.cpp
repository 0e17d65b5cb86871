#include "weylkit/io.hpp"

#include <cstdlib>
#include <fstream>
#include <stdexcept>

namespace weylkit::io {

namespace {

BigRational parse_rational(json const &x)
{
  if (x.is_number_integer())
    return BigRational(x.get<std::int64_t>());
  if (x.is_string())
    return BigRational(x.get<std::string>());
  throw std::invalid_argument("matrix entries must be integers or \"a/b\" strings");
}

json rational_to_json(BigRational const &x)
{
  if (denominator(x) == 1 && abs(numerator(x)) < BigInt(1LL << 53))
    return static_cast<std::int64_t>(numerator(x));
  return x.str();
}

} // namespace

json read_json(std::filesystem::path const &path)
{
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (json::parse_error const &e) {
    throw std::invalid_argument(path.string() + ": " + e.what());
  }
}

PermGroup group_from_json(json const &j)
{
  if (!j.contains("degree") || !j.contains("generators"))
    throw std::invalid_argument("group JSON needs \"degree\" and \"generators\"");
  auto const n = j.at("degree").get<std::size_t>();
  std::vector<Perm> gens;
  for (auto const &g : j.at("generators"))
    gens.push_back(Perm::from_cycles(n, g.get<std::string>()));
  PermGroup G(n, std::move(gens));
  if (j.contains("order")) {
    auto const &o = j.at("order");
    BigInt want = o.is_string() ? BigInt(o.get<std::string>()) : BigInt(o.get<std::uint64_t>());
    if (G.order() != want)
      throw std::invalid_argument("group JSON: declared order " + want.str() + " but generators give " +
                                  G.order().str());
  }
  return G;
}

json group_to_json(PermGroup const &G, std::string const &name)
{
  json j;
  if (!name.empty())
    j["name"] = name;
  j["degree"] = G.degree();
  j["order"] = G.order().str();
  json gens = json::array();
  for (auto const &g : G.generators())
    gens.push_back(g.to_cycles());
  j["generators"] = gens;
  return j;
}

PermGroup load_group(std::filesystem::path const &path) { return group_from_json(read_json(path)); }

MatModule module_from_json(json const &j)
{
  MatModule m;
  m.field = j.at("field").get<std::uint64_t>();
  m.dimension = j.at("dimension").get<std::size_t>();
  for (auto const &g : j.at("generators")) {
    RatMatrix a;
    for (auto const &row : g) {
      RatVector r;
      for (auto const &x : row)
        r.push_back(parse_rational(x));
      a.push_back(std::move(r));
    }
    m.generators.push_back(std::move(a));
  }
  m.validate();
  return m;
}

json module_to_json(MatModule const &m)
{
  json j;
  j["field"] = m.field;
  j["dimension"] = m.dimension;
  json gens = json::array();
  for (auto const &g : m.generators) {
    json a = json::array();
    for (auto const &row : g) {
      json r = json::array();
      for (auto const &x : row)
        r.push_back(rational_to_json(x));
      a.push_back(r);
    }
    gens.push_back(a);
  }
  j["generators"] = gens;
  return j;
}

MatModule load_module(std::filesystem::path const &path) { return module_from_json(read_json(path)); }

std::filesystem::path fixture_dir()
{
  if (char const *env = std::getenv("WEYLKIT_FIXTURES"); env && *env)
    return env;
  return WEYLKIT_DEFAULT_FIXTURES;
}

std::filesystem::path fixture_path(std::string const &s)
{
  std::filesystem::path p(s);
  if (s.find('/') != std::string::npos || p.has_extension())
    return p;
  return fixture_dir() / (s + ".json");
}

} // namespace weylkit::io
