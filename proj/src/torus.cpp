#include "weylkit/torus.hpp"

#include <stdexcept>

#include "weylkit/intmat.hpp"

namespace weylkit {

namespace {

// Coefficients of the unique polynomial of degree <= n through (x_k, y_k),
// x_k = 0..n, via Newton divided differences.
Poly interpolate(std::vector<BigInt> const &ys)
{
  std::size_t const n = ys.size();
  std::vector<BigRational> dd(ys.begin(), ys.end());
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i)
      dd[i] = (dd[i] - dd[i - 1]) / BigRational(static_cast<long>(j));
  // expand sum dd[k] * prod_{i<k} (x - i)
  std::vector<BigRational> coeffs(n, BigRational(0));
  std::vector<BigRational> basis{BigRational(1)};
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t t = 0; t < basis.size(); ++t)
      coeffs[t] += dd[k] * basis[t];
    std::vector<BigRational> next(basis.size() + 1, BigRational(0));
    for (std::size_t t = 0; t < basis.size(); ++t) {
      next[t + 1] += basis[t];
      next[t] -= basis[t] * static_cast<long>(k);
    }
    basis = std::move(next);
  }
  std::vector<BigInt> ic;
  for (auto const &c : coeffs) {
    if (denominator(c) != 1)
      throw std::logic_error("torus polynomial has non-integral coefficients");
    ic.push_back(numerator(c));
  }
  return Poly(std::move(ic));
}

BigMatrix shifted(IntMatrix const &N, BigInt const &x)
{
  BigMatrix m = to_big(N);
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (auto &e : m[i])
      e *= x;
    m[i][i] -= 1;
  }
  return m;
}

} // namespace

Poly torus_order_poly_expanded(WeylGroup const &W, Perm const &w, bool twisted)
{
  if (!W.group().contains(w))
    throw std::invalid_argument("torus_order_poly: element is not in W");
  IntMatrix N = W.root_matrix(w.inverse());
  std::vector<BigInt> ys;
  for (int x = 0; x <= W.rank(); ++x)
    ys.push_back(determinant(shifted(N, BigInt(twisted ? -x : x))));
  Poly p = interpolate(ys);
  return p.lead() < 0 ? -p : p;
}

FactoredPolynomial torus_order_poly(WeylGroup const &W, Perm const &w, bool twisted)
{
  return FactoredPolynomial::factor(torus_order_poly_expanded(W, w, twisted));
}

BigInt TorusStructure::order() const
{
  BigInt n = 1;
  for (auto const &d : invariant_factors)
    n *= d;
  return n;
}

TorusStructure torus_structure(WeylGroup const &W, Perm const &w, bool twisted, BigInt const &q)
{
  if (q < 2)
    throw std::invalid_argument("torus_structure: q must be at least 2");
  if (!W.group().contains(w))
    throw std::invalid_argument("torus_structure: element is not in W");
  IntMatrix M = W.coroot_matrix(w);
  TorusStructure t{q, twisted, {}};
  for (auto const &d : smith_diagonal(shifted(M, twisted ? BigInt(-q) : q))) {
    if (d == 0)
      throw std::logic_error("torus_structure: qM - I is singular");
    if (d != 1)
      t.invariant_factors.push_back(d);
  }
  return t;
}

TorusActionModule centralizer_torus_module(WeylGroup const &W, Perm const &w, std::uint64_t r)
{
  if (!is_prime_u64(r))
    throw std::invalid_argument("centralizer_torus_module: r must be prime");
  PermGroup C = centralizer(W.group(), w);
  TorusActionModule mod{r, W.rank(), C.generators(), {}};
  auto const rr = static_cast<std::int64_t>(r);
  for (auto const &g : C.generators()) {
    IntMatrix c = W.coroot_matrix(g);
    std::vector<std::vector<std::int64_t>> m(c.size());
    for (std::size_t i = 0; i < c.size(); ++i)
      for (int x : c[i])
        m[i].push_back(((x % rr) + rr) % rr);
    mod.generator_matrices.push_back(std::move(m));
  }
  return mod;
}

} // namespace weylkit
