#pragma once
// Independent brute-force oracles used by the tests.  None of these touch
// the stabilizer-chain code.

#include <set>
#include <vector>

#include "weylkit/perm.hpp"

namespace oracle {

// All elements of <gens> by breadth-first closure.
inline std::vector<weylkit::Perm> closure(std::size_t degree, std::vector<weylkit::Perm> const &gens)
{
  std::set<weylkit::Perm> seen{weylkit::Perm(degree)};
  std::vector<weylkit::Perm> out{weylkit::Perm(degree)};
  for (std::size_t k = 0; k < out.size(); ++k)
    for (auto const &s : gens) {
      auto y = out[k] * s;
      if (seen.insert(y).second)
        out.push_back(y);
    }
  return out;
}

} // namespace oracle

namespace oracle {

// Every subgroup of <gens>, as sorted element lists, by repeated adjunction
// of single elements starting from the trivial group.
inline std::set<std::set<weylkit::Perm>> all_subgroups(std::size_t degree, std::vector<weylkit::Perm> const &gens)
{
  auto elts = closure(degree, gens);
  std::set<std::set<weylkit::Perm>> found;
  std::vector<std::set<weylkit::Perm>> queue{{weylkit::Perm(degree)}};
  found.insert(queue[0]);
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (auto const &g : elts) {
      if (queue[k].count(g))
        continue;
      std::vector<weylkit::Perm> gg(queue[k].begin(), queue[k].end());
      gg.push_back(g);
      auto c = closure(degree, gg);
      std::set<weylkit::Perm> s(c.begin(), c.end());
      if (found.insert(s).second)
        queue.push_back(s);
    }
  return found;
}

} // namespace oracle
