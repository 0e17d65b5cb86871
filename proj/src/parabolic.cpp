#include "weylkit/parabolic.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "weylkit/numtheory.hpp"

namespace weylkit {

namespace {

void check_J(WeylGroup const &W, std::vector<int> const &J)
{
  for (int j : J)
    if (j < 1 || j > W.rank())
      throw std::invalid_argument("parabolic index " + std::to_string(j) + " out of range");
}

bool length_less(WeylGroup const &W, Perm const &a, Perm const &b)
{
  auto la = W.length(a), lb = W.length(b);
  return la != lb ? la < lb : a < b;
}

} // namespace

Perm reduce_to_coset_rep(WeylGroup const &W, std::vector<int> const &J, Perm x)
{
  for (;;) {
    bool moved = false;
    for (int j : J)
      if (W.has_descent(x, j - 1)) {
        x = W.simple_reflections()[static_cast<std::size_t>(j - 1)] * x;
        moved = true;
      }
    if (!moved)
      return x;
  }
}

ParabolicDatum parabolic_datum(WeylGroup const &W, std::vector<int> const &J0)
{
  check_J(W, J0);
  std::vector<int> J = J0;
  std::sort(J.begin(), J.end());
  J.erase(std::unique(J.begin(), J.end()), J.end());

  std::vector<Perm> gens;
  for (int j : J)
    gens.push_back(W.simple_reflections()[static_cast<std::size_t>(j - 1)]);
  ParabolicDatum d{&W, J, PermGroup(W.degree(), gens), {}};

  // prefixes of minimal representatives are minimal, so grow by right
  // multiplication with simple reflections
  auto in_X = [&](Perm const &x) {
    for (int j : J)
      if (W.has_descent(x, j - 1))
        return false;
    return true;
  };
  std::set<Perm> seen{W.group().identity()};
  std::vector<Perm> layer{W.group().identity()};
  while (!layer.empty()) {
    std::vector<Perm> next;
    for (auto const &x : layer) {
      d.coset_reps.push_back(x);
      std::size_t lx = W.length(x);
      for (auto const &s : W.simple_reflections()) {
        Perm y = x * s;
        if (W.length(y) == lx + 1 && in_X(y) && seen.insert(y).second)
          next.push_back(std::move(y));
      }
    }
    layer = std::move(next);
  }
  std::sort(d.coset_reps.begin(), d.coset_reps.end(),
            [&](Perm const &a, Perm const &b) { return length_less(W, a, b); });
  if (BigInt(d.coset_reps.size()) * d.W_J.order() != W.group().order())
    throw std::logic_error("parabolic_datum: coset representative count does not match the index");
  return d;
}

std::size_t triple_intersection_count(WeylGroup const &W, Perm const &w)
{
  auto const &sys = W.system();
  Perm wi = w.inverse();
  std::size_t m = 0;
  for (std::size_t k = 0; k < sys.positive_count(); ++k) {
    Point p = static_cast<Point>(k);
    m += sys.is_positive(w[p]) && sys.is_positive(wi[p]);
  }
  return m;
}

std::vector<DoubleCosetReport> double_cosets(ParabolicDatum const &datum)
{
  WeylGroup const &W = *datum.W;
  auto const &reps = datum.coset_reps;
  std::map<Perm, std::size_t> where;
  for (std::size_t k = 0; k < reps.size(); ++k)
    where.emplace(reps[k], k);

  std::vector<std::size_t> parent(reps.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t k = 0; k < reps.size(); ++k)
    for (int j : datum.J) {
      Perm y = reduce_to_coset_rep(W, datum.J, reps[k] * W.simple_reflections()[static_cast<std::size_t>(j - 1)]);
      std::size_t a = find(k), b = find(where.at(y));
      if (a != b)
        parent[std::max(a, b)] = std::min(a, b);
    }

  std::map<std::size_t, std::vector<std::size_t>> classes;
  for (std::size_t k = 0; k < reps.size(); ++k)
    classes[find(k)].push_back(k);

  std::vector<DoubleCosetReport> out;
  std::vector<std::size_t> class_of(reps.size());
  for (auto const &[root, members] : classes)
    for (auto k : members)
      class_of[k] = root;

  for (auto const &[root, members] : classes) {
    DoubleCosetReport r;
    // reps are sorted by length, so members[0] has minimal length
    r.min_rep = reps[members.front()];
    std::size_t lmin = W.length(r.min_rep);
    if (members.size() > 1 && W.length(reps[members[1]]) == lmin)
      throw std::logic_error("double coset has two elements of minimal length");
    r.min_rep_word = W.element_to_word(r.min_rep);
    r.coset_indices = members;
    r.coset_count = members.size();
    Poly f;
    for (auto k : members)
      f = f + Poly::monomial(static_cast<unsigned>(W.length(reps[k])));
    r.length_poly = FactoredPolynomial::factor(f);
    r.self_paired = r.min_rep.order() <= 2;
    Perm inv_rep = reduce_to_coset_rep(W, datum.J, r.min_rep.inverse());
    r.self_paired_exact = class_of[where.at(inv_rep)] == root;
    if (r.self_paired != r.self_paired_exact)
      throw std::logic_error("self-pairedness: order test and membership test disagree");
    r.triple_count = triple_intersection_count(W, r.min_rep);
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end(), [&](DoubleCosetReport const &a, DoubleCosetReport const &b) {
    return length_less(W, a.min_rep, b.min_rep);
  });
  return out;
}

FactoredPolynomial suborbit_polynomial(ParabolicDatum const &datum, DoubleCosetReport const &report)
{
  Poly f;
  for (auto k : report.coset_indices)
    f = f + Poly::monomial(static_cast<unsigned>(datum.W->length(datum.coset_reps.at(k))));
  return FactoredPolynomial::factor(f);
}

bool is_self_paired(DoubleCosetReport const &report) { return report.self_paired_exact; }

namespace {

void check_exponents(unsigned a, unsigned e, unsigned m)
{
  if (e > a)
    throw std::invalid_argument("rule_out_parabolic: suborbit exponent exceeds stabilizer exponent");
  if (m > a - e)
    throw std::invalid_argument("rule_out_parabolic: triple count exceeds the arc-stabilizer exponent a - e");
}

} // namespace

bool rule_out_parabolic(unsigned a, unsigned e, unsigned m, std::uint64_t p, unsigned f)
{
  check_exponents(a, e, m);
  if (!is_prime_u64(p) || f == 0)
    throw std::invalid_argument("rule_out_parabolic: need a prime p and f >= 1");
  if (!check_pf_bound(p, f))
    throw std::logic_error("p^f >= (f_p)^p failed");
  BigInt q = ipow(BigInt(p), f);
  BigInt fp = largest_ppart(BigInt(f), p);
  BigInt lhs = ipow(q, 2 * (a - e)) * fp * fp;
  BigInt rhs = ipow(q, a + m) * fp;
  return lhs < rhs;
}

bool rule_out_parabolic_all_q(unsigned a, unsigned e, unsigned m)
{
  check_exponents(a, e, m);
  return static_cast<long>(m) + 2 * static_cast<long>(e) - static_cast<long>(a) >= 1;
}

} // namespace weylkit
