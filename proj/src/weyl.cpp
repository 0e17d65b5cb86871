#include "weylkit/weyl.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace weylkit {

namespace {

std::vector<Perm> simple_reflection_perms(RootSystem const &sys)
{
  std::vector<Perm> out;
  for (int i = 0; i < sys.rank(); ++i) {
    IntVec const &a = sys.root(sys.simple_index(i));
    std::vector<Point> img(sys.size());
    for (std::size_t k = 0; k < sys.size(); ++k)
      img[k] = static_cast<Point>(sys.index_of(sys.reflect(a, sys.root(k))));
    out.emplace_back(std::move(img));
  }
  return out;
}

} // namespace

WeylGroup::WeylGroup(RootSystem sys)
    : _sys(std::move(sys)), _simple(simple_reflection_perms(_sys)), _group(_sys.size(), _simple)
{
}

Perm WeylGroup::reflection(IntVec const &root) const
{
  std::vector<Point> img(_sys.size());
  for (std::size_t k = 0; k < _sys.size(); ++k)
    img[k] = static_cast<Point>(_sys.index_of(_sys.reflect(root, _sys.root(k))));
  return Perm(std::move(img));
}

Perm WeylGroup::word_to_element(std::string const &word) const
{
  std::vector<int> letters;
  for (char c : word) {
    if (c < '1' || c > '9')
      throw std::invalid_argument(std::string("invalid Weyl word letter '") + c + "'");
    letters.push_back(c - '0');
  }
  return word_to_element(letters);
}

Perm WeylGroup::word_to_element(std::vector<int> const &letters) const
{
  Perm w(degree());
  for (int l : letters) {
    if (l < 1 || l > rank())
      throw std::invalid_argument("Weyl word letter " + std::to_string(l) + " out of range for rank " +
                                  std::to_string(rank()));
    w *= _simple[static_cast<std::size_t>(l - 1)];
  }
  return w;
}

bool WeylGroup::has_descent(Perm const &w, int i) const
{
  return !_sys.is_positive(w[static_cast<Point>(_sys.simple_index(i))]);
}

std::vector<int> WeylGroup::element_to_word(Perm const &w0) const
{
  if (!_group.contains(w0))
    throw std::invalid_argument("element_to_word: permutation is not in W");
  std::vector<int> word;
  Perm w = w0;
  for (;;) {
    int i = 0;
    while (i < rank() && !has_descent(w, i))
      ++i;
    if (i == rank())
      break;
    word.push_back(i + 1);
    w = _simple[static_cast<std::size_t>(i)] * w;
  }
  return word;
}

std::string WeylGroup::word_string(std::vector<int> const &letters)
{
  std::string s;
  for (int l : letters) {
    if (l >= 10)
      throw std::invalid_argument("word_string: letters above 9 have no digit form");
    s += static_cast<char>('0' + l);
  }
  return s;
}

std::size_t WeylGroup::length(Perm const &w) const
{
  std::size_t n = 0;
  for (std::size_t k = 0; k < _sys.positive_count(); ++k)
    n += !_sys.is_positive(w[static_cast<Point>(k)]);
  return n;
}

Perm WeylGroup::longest_element() const
{
  Perm w(degree());
  for (;;) {
    int i = 0;
    while (i < rank() && has_descent(w, i))
      ++i;
    if (i == rank())
      return w;
    w = _simple[static_cast<std::size_t>(i)] * w;
  }
}

IntMatrix WeylGroup::root_matrix(Perm const &w) const
{
  IntMatrix m;
  for (int j = 0; j < rank(); ++j)
    m.push_back(_sys.root(w[static_cast<Point>(_sys.simple_index(j))]));
  return m;
}

IntMatrix WeylGroup::coroot_matrix(Perm const &w) const
{
  IntMatrix r = root_matrix(w);
  IntMatrix c = r;
  for (int j = 0; j < rank(); ++j)
    for (int i = 0; i < rank(); ++i) {
      int num = r[j][i] * _sys.simple_length(i);
      if (num % _sys.simple_length(j) != 0)
        throw std::logic_error("coroot_matrix: non-integral entry");
      c[j][i] = num / _sys.simple_length(j);
    }
  return c;
}

Perm WeylGroup::from_root_matrix(IntMatrix const &m) const
{
  std::vector<Point> img(degree());
  for (std::size_t k = 0; k < degree(); ++k) {
    IntVec const &b = _sys.root(k);
    IntVec v(rank(), 0);
    for (int j = 0; j < rank(); ++j)
      for (int i = 0; i < rank(); ++i)
        v[i] += b[j] * m[j][i];
    img[k] = static_cast<Point>(_sys.index_of(v));
  }
  return Perm(std::move(img));
}

Perm WeylGroup::extend_diagram_automorphism(std::vector<int> const &simple_map) const
{
  int const n = rank();
  if (static_cast<int>(simple_map.size()) != n)
    throw std::invalid_argument("diagram map has wrong length");
  std::vector<bool> hit(n, false);
  for (int x : simple_map) {
    if (x < 0 || x >= n || hit[x])
      throw std::invalid_argument("diagram map is not a permutation of the simple roots");
    hit[x] = true;
  }
  auto const &c = _sys.datum().cartan;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (c[simple_map[i]][simple_map[j]] != c[i][j])
        throw std::invalid_argument("diagram map does not preserve the Cartan matrix");
  std::vector<Point> img(degree());
  for (std::size_t k = 0; k < degree(); ++k) {
    IntVec v(n, 0);
    for (int i = 0; i < n; ++i)
      v[simple_map[i]] = _sys.root(k)[i];
    img[k] = static_cast<Point>(_sys.index_of(v));
  }
  return Perm(std::move(img));
}

IntVec WeylGroup::image(IntVec const &root, Perm const &w) const
{
  return _sys.root(w[static_cast<Point>(_sys.index_of(root))]);
}

PermGroup reflection_subgroup(WeylGroup const &W, Subsystem const &delta)
{
  std::vector<Perm> gens;
  for (auto k : delta.simple_roots)
    gens.push_back(W.reflection(W.system().root(k)));
  return PermGroup(W.degree(), std::move(gens));
}

RelativeWeylGroup relative_weyl_group(WeylGroup const &W, Subsystem const &delta)
{
  std::vector<Point> base;
  for (auto k : delta.simple_roots)
    base.push_back(static_cast<Point>(k));
  RelativeWeylGroup r{delta, set_stabilizer(W.group(), base), {}, {}};
  auto induced_of = [&](Perm const &g) {
    std::vector<std::size_t> im;
    for (auto k : delta.simple_roots) {
      auto it = std::find(delta.simple_roots.begin(), delta.simple_roots.end(), g[static_cast<Point>(k)]);
      if (it == delta.simple_roots.end())
        throw std::logic_error("relative_weyl_group: stabilizer element moves the base");
      im.push_back(static_cast<std::size_t>(it - delta.simple_roots.begin()));
    }
    return im;
  };
  for (auto const &g : r.group.generators())
    r.induced.push_back(induced_of(g));
  std::set<std::vector<std::size_t>> all;
  r.group.for_each_element([&](Perm const &g) { all.insert(induced_of(g)); });
  r.induced_group.assign(all.begin(), all.end());
  return r;
}

} // namespace weylkit
