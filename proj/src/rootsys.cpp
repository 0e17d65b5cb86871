#include "weylkit/rootsys.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace weylkit {

namespace {

struct Shape {
  char letter;
  int n;
};

Shape parse_label(std::string const &label)
{
  if (label.size() < 2)
    throw std::invalid_argument("unsupported root system type: '" + label + "'");
  char c = label[0];
  std::string digits = label.substr(1);
  if (!std::all_of(digits.begin(), digits.end(), [](char d) { return d >= '0' && d <= '9'; }) || digits.size() > 2)
    throw std::invalid_argument("unsupported root system type: '" + label + "'");
  int n = std::stoi(digits);
  bool ok = false;
  switch (c) {
  case 'A':
    ok = n >= 1;
    break;
  case 'B':
    ok = n >= 2;
    break;
  case 'C':
    ok = n >= 2;
    break;
  case 'D':
    ok = n >= 4;
    break;
  case 'E':
    ok = n >= 6 && n <= 8;
    break;
  case 'F':
    ok = n == 4;
    break;
  case 'G':
    ok = n == 2;
    break;
  default:
    break;
  }
  if (!ok)
    throw std::invalid_argument("unsupported root system type: '" + label + "'");
  return {c, n};
}

// Symmetric integer Gram matrix of the simple roots.
IntMatrix gram(Shape s)
{
  int const n = s.n;
  IntMatrix f(n, std::vector<int>(n, 0));
  auto edge = [&](int i, int j, int v) { f[i][j] = f[j][i] = v; };
  switch (s.letter) {
  case 'A':
    for (int i = 0; i < n; ++i)
      f[i][i] = 2;
    for (int i = 0; i + 1 < n; ++i)
      edge(i, i + 1, -1);
    break;
  case 'B':
    for (int i = 0; i < n; ++i)
      f[i][i] = i + 1 < n ? 4 : 2;
    for (int i = 0; i + 1 < n; ++i)
      edge(i, i + 1, -2);
    break;
  case 'C':
    for (int i = 0; i < n; ++i)
      f[i][i] = i + 1 < n ? 2 : 4;
    for (int i = 0; i + 2 < n; ++i)
      edge(i, i + 1, -1);
    edge(n - 2, n - 1, -2);
    break;
  case 'D':
    for (int i = 0; i < n; ++i)
      f[i][i] = 2;
    for (int i = 0; i + 2 < n; ++i)
      edge(i, i + 1, -1);
    edge(n - 3, n - 1, -1);
    break;
  case 'E':
    for (int i = 0; i < n; ++i)
      f[i][i] = 2;
    edge(0, 2, -1);
    edge(1, 3, -1);
    for (int i = 2; i + 1 < n; ++i)
      edge(i, i + 1, -1);
    break;
  case 'F':
    f[0][0] = f[1][1] = 4;
    f[2][2] = f[3][3] = 2;
    edge(0, 1, -2);
    edge(1, 2, -2);
    edge(2, 3, -1);
    break;
  case 'G':
    f[0][0] = 2;
    f[1][1] = 6;
    edge(0, 1, -3);
    break;
  default:
    throw std::logic_error("gram: bad shape");
  }
  return f;
}

IntMatrix cartan_from_form(IntMatrix const &f)
{
  std::size_t n = f.size();
  IntMatrix c(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if ((2 * f[i][j]) % f[i][i] != 0)
        throw std::logic_error("non-integral Cartan entry");
      c[i][j] = 2 * f[i][j] / f[i][i];
    }
  return c;
}

int coeff_sum(IntVec const &v) { return std::accumulate(v.begin(), v.end(), 0); }

} // namespace

bool CartanDatum::supported(std::string const &label)
{
  try {
    parse_label(label);
    return true;
  } catch (std::invalid_argument const &) {
    return false;
  }
}

CartanDatum CartanDatum::of(std::string const &label)
{
  Shape s = parse_label(label);
  CartanDatum d;
  d.type_label = label;
  d.rank = s.n;
  d.form = gram(s);
  d.cartan = cartan_from_form(d.form);
  return d;
}

RootSystem::RootSystem(CartanDatum datum) : _datum(std::move(datum))
{
  int const n = _datum.rank;
  if (n <= 0 || static_cast<int>(_datum.cartan.size()) != n)
    throw std::invalid_argument("malformed Cartan datum");
  for (int i = 0; i < n; ++i) {
    if (_datum.cartan[i][i] != 2)
      throw std::invalid_argument("Cartan matrix diagonal must be 2");
    for (int j = 0; j < n; ++j)
      if (i != j && (_datum.cartan[i][j] > 0 || _datum.cartan[i][j] < -3))
        throw std::invalid_argument("Cartan matrix off-diagonal entries must lie in {0,-1,-2,-3}");
  }

  std::vector<IntVec> positives;
  std::map<IntVec, bool> seen;
  for (int i = 0; i < n; ++i) {
    IntVec e(n, 0);
    e[i] = 1;
    positives.push_back(e);
    seen[e] = true;
  }
  for (std::size_t k = 0; k < positives.size(); ++k) {
    for (int i = 0; i < n; ++i) {
      IntVec b = positives[k];
      int c = 0;
      for (int j = 0; j < n; ++j)
        c += b[j] * _datum.cartan[i][j];
      b[i] -= c;
      bool pos = std::all_of(b.begin(), b.end(), [](int x) { return x >= 0; });
      if (!pos)
        continue; // negatives are added by symmetry
      if (!seen[b]) {
        seen[b] = true;
        positives.push_back(b);
      }
    }
    if (positives.size() > 10000)
      throw std::invalid_argument("Cartan datum does not define a finite root system");
  }
  std::sort(positives.begin(), positives.end(), [](IntVec const &a, IntVec const &b) {
    int ha = coeff_sum(a), hb = coeff_sum(b);
    return ha != hb ? ha < hb : a < b;
  });
  _roots = positives;
  for (auto const &p : positives) {
    IntVec m = p;
    for (auto &x : m)
      x = -x;
    _roots.push_back(std::move(m));
  }
  for (std::size_t k = 0; k < _roots.size(); ++k)
    _index.emplace(_roots[k], k);
}

std::size_t RootSystem::simple_index(int i) const
{
  if (i < 0 || i >= rank())
    throw std::out_of_range("simple root index out of range");
  IntVec e(rank(), 0);
  e[i] = 1;
  return _index.at(e);
}

std::size_t RootSystem::negative_of(std::size_t k) const
{
  std::size_t N = positive_count();
  return k < N ? k + N : k - N;
}

int RootSystem::height(std::size_t k) const { return coeff_sum(_roots.at(k)); }

std::size_t RootSystem::index_of(IntVec const &v) const
{
  auto it = _index.find(v);
  if (it == _index.end())
    throw std::invalid_argument("not a root of " + _datum.type_label + ": " + format(v));
  return it->second;
}

int RootSystem::inner(IntVec const &a, IntVec const &b) const
{
  int s = 0;
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j)
      s += a[i] * _datum.form[i][j] * b[j];
  return s;
}

int RootSystem::pairing(IntVec const &b, IntVec const &a) const
{
  int aa = inner(a, a);
  int ab = inner(a, b);
  if (aa == 0 || (2 * ab) % aa != 0)
    throw std::logic_error("pairing: non-integral value");
  return 2 * ab / aa;
}

IntVec RootSystem::reflect(IntVec const &mirror, IntVec const &target) const
{
  index_of(mirror);
  index_of(target);
  int c = pairing(target, mirror);
  IntVec r = target;
  for (int i = 0; i < rank(); ++i)
    r[i] -= c * mirror[i];
  return r;
}

IntVec RootSystem::highest_root() const
{
  IntVec const &top = _roots[positive_count() - 1];
  for (std::size_t k = 0; k < positive_count(); ++k)
    for (int i = 0; i < rank(); ++i)
      if (_roots[k][i] > top[i])
        throw std::invalid_argument("highest_root: root system is reducible");
  return top;
}

std::string RootSystem::format(IntVec const &v)
{
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i)
      s += ',';
    s += std::to_string(v[i]);
  }
  return s + ")";
}

nlohmann::json RootSystem::to_json() const
{
  nlohmann::json j;
  j["type"] = _datum.type_label;
  j["rank"] = _datum.rank;
  j["cartan_matrix"] = _datum.cartan;
  j["roots"] = _roots;
  return j;
}

bool Subsystem::contains(std::size_t k) const { return std::binary_search(members.begin(), members.end(), k); }

namespace {

using Rational = boost::multiprecision::cpp_rational;

// Coordinates of each target in terms of `basis` (rows), or nullopt-like
// empty result when the basis is dependent or a target is outside its span.
bool coordinates(std::vector<IntVec> const &basis, std::vector<IntVec> const &targets,
                 std::vector<std::vector<Rational>> &out)
{
  std::size_t k = basis.size();
  if (k == 0)
    return targets.empty();
  std::size_t n = basis[0].size();
  // Solve x * B = t for each t by eliminating on the augmented transpose.
  for (auto const &t : targets) {
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(k + 1));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < k; ++j)
        a[i][j] = basis[j][i];
      a[i][k] = t[i];
    }
    std::size_t row = 0;
    std::vector<std::size_t> pivcol;
    for (std::size_t col = 0; col < k && row < n; ++col) {
      std::size_t p = row;
      while (p < n && a[p][col] == 0)
        ++p;
      if (p == n)
        return false; // dependent basis
      std::swap(a[p], a[row]);
      for (std::size_t i = 0; i < n; ++i) {
        if (i == row || a[i][col] == 0)
          continue;
        Rational f = a[i][col] / a[row][col];
        for (std::size_t j = col; j <= k; ++j)
          a[i][j] -= f * a[row][j];
      }
      pivcol.push_back(col);
      ++row;
    }
    if (pivcol.size() < k)
      return false;
    for (std::size_t i = row; i < n; ++i)
      if (a[i][k] != 0)
        return false;
    std::vector<Rational> x(k);
    for (std::size_t r = 0; r < k; ++r)
      x[pivcol[r]] = a[r][k] / a[r][pivcol[r]];
    out.push_back(std::move(x));
  }
  return true;
}

} // namespace

Subsystem closed_subsystem(RootSystem const &sys, std::vector<IntVec> const &seeds)
{
  Subsystem sub;
  sub.parent = &sys;
  std::vector<bool> in(sys.size(), false);
  std::vector<std::size_t> list;
  auto add = [&](std::size_t k) {
    if (!in[k]) {
      in[k] = true;
      list.push_back(k);
    }
  };
  std::vector<std::size_t> seed_idx;
  for (auto const &s : seeds) {
    std::size_t k = sys.index_of(s);
    if (std::find(seed_idx.begin(), seed_idx.end(), k) == seed_idx.end())
      seed_idx.push_back(k);
    add(k);
    add(sys.negative_of(k));
  }
  for (bool grew = true; grew;) {
    grew = false;
    std::size_t before = list.size();
    for (std::size_t a = 0; a < list.size(); ++a)
      for (std::size_t b = 0; b < list.size(); ++b)
        add(sys.index_of(sys.reflect(sys.root(list[a]), sys.root(list[b]))));
    grew = list.size() != before;
  }
  sub.members = list;
  std::sort(sub.members.begin(), sub.members.end());

  // keep the seeds as a base when they are one
  std::vector<IntVec> basis, targets;
  for (auto k : seed_idx)
    basis.push_back(sys.root(k));
  for (auto k : sub.members)
    targets.push_back(sys.root(k));
  std::vector<std::vector<Rational>> coords;
  bool seeds_are_base = coordinates(basis, targets, coords);
  if (seeds_are_base)
    for (auto const &c : coords) {
      bool nonneg = true, nonpos = true;
      for (auto const &x : c) {
        if (denominator(x) != 1)
          seeds_are_base = false;
        nonneg = nonneg && x >= 0;
        nonpos = nonpos && x <= 0;
      }
      seeds_are_base = seeds_are_base && (nonneg || nonpos);
    }
  if (seeds_are_base) {
    sub.simple_roots = seed_idx;
  } else {
    std::vector<std::size_t> pos;
    for (auto k : sub.members)
      if (sys.is_positive(k))
        pos.push_back(k);
    for (auto k : pos) {
      bool decomposable = false;
      for (auto a : pos) {
        IntVec d = sys.root(k);
        for (int i = 0; i < sys.rank(); ++i)
          d[i] -= sys.root(a)[i];
        if (sys.contains(d) && sub.contains(sys.index_of(d)) && sys.is_positive(sys.index_of(d))) {
          decomposable = true;
          break;
        }
      }
      if (!decomposable)
        sub.simple_roots.push_back(k);
    }
  }

  // connected components of the Dynkin diagram of the base
  std::size_t const r = sub.simple_roots.size();
  std::vector<int> comp(r, -1);
  int ncomp = 0;
  for (std::size_t i = 0; i < r; ++i) {
    if (comp[i] >= 0)
      continue;
    std::vector<std::size_t> stack{i};
    comp[i] = ncomp;
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t v = 0; v < r; ++v)
        if (comp[v] < 0 && sys.inner(sys.root(sub.simple_roots[u]), sys.root(sub.simple_roots[v])) != 0) {
          comp[v] = ncomp;
          stack.push_back(v);
        }
    }
    ++ncomp;
  }
  sub.components.assign(static_cast<std::size_t>(ncomp), {});
  for (std::size_t i = 0; i < r; ++i)
    sub.components[static_cast<std::size_t>(comp[i])].push_back(sub.simple_roots[i]);
  for (auto const &c : sub.components) {
    IntMatrix cm(c.size(), std::vector<int>(c.size()));
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = 0; j < c.size(); ++j)
        cm[i][j] = sys.pairing(sys.root(c[j]), sys.root(c[i]));
    sub.component_types.push_back(identify_cartan_type(cm));
  }
  return sub;
}

std::string identify_cartan_type(IntMatrix const &cartan)
{
  int const n = static_cast<int>(cartan.size());
  std::vector<std::string> labels;
  labels.push_back("A" + std::to_string(n));
  if (n >= 2)
    labels.push_back("C" + std::to_string(n));
  if (n >= 3)
    labels.push_back("B" + std::to_string(n));
  if (n >= 4)
    labels.push_back("D" + std::to_string(n));
  if (n == 2)
    labels.push_back("G2");
  if (n == 4)
    labels.push_back("F4");
  if (n >= 6 && n <= 8)
    labels.push_back("E" + std::to_string(n));

  for (auto const &lab : labels) {
    IntMatrix const m = CartanDatum::of(lab).cartan;
    std::vector<int> perm(n, -1);
    std::vector<bool> used(n, false);
    std::function<bool(int)> rec = [&](int i) -> bool {
      if (i == n)
        return true;
      for (int c = 0; c < n; ++c) {
        if (used[c])
          continue;
        bool ok = true;
        for (int j = 0; j < i && ok; ++j)
          ok = m[c][perm[j]] == cartan[i][j] && m[perm[j]][c] == cartan[j][i];
        if (!ok)
          continue;
        perm[i] = c;
        used[c] = true;
        if (rec(i + 1))
          return true;
        used[c] = false;
      }
      return false;
    };
    if (rec(0))
      return lab;
  }
  throw std::invalid_argument("Cartan matrix matches no finite irreducible type");
}

} // namespace weylkit
