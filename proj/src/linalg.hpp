#pragma once
// Field-generic dense linear algebra on row vectors (internal header).

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "weylkit/bigint.hpp"

namespace weylkit::la {

struct PrimeField {
  using E = std::int64_t;
  std::int64_t p;

  E zero() const { return 0; }
  E one() const { return 1; }
  E from(std::int64_t x) const { return ((x % p) + p) % p; }
  E add(E a, E b) const { return (a + b) % p; }
  E sub(E a, E b) const { return (a - b + p) % p; }
  E mul(E a, E b) const { return a * b % p; }
  E neg(E a) const { return a ? p - a : 0; }
  E inv(E a) const
  {
    if (a == 0)
      throw std::domain_error("division by zero in prime field");
    E r = 1, b = a, e = p - 2;
    while (e) {
      if (e & 1)
        r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  }
  bool is_zero(E a) const { return a == 0; }
};

struct RationalField {
  using E = BigRational;
  E zero() const { return E(0); }
  E one() const { return E(1); }
  E from(std::int64_t x) const { return E(x); }
  E add(E const &a, E const &b) const { return a + b; }
  E sub(E const &a, E const &b) const { return a - b; }
  E mul(E const &a, E const &b) const { return a * b; }
  E neg(E const &a) const { return -a; }
  E inv(E const &a) const
  {
    if (a == 0)
      throw std::domain_error("division by zero in Q");
    return E(1) / a;
  }
  bool is_zero(E const &a) const { return a == 0; }
};

template <class F> using Vec = std::vector<typename F::E>;
template <class F> using Mat = std::vector<Vec<F>>;

template <class F> Mat<F> identity(F const &f, std::size_t n)
{
  Mat<F> m(n, Vec<F>(n, f.zero()));
  for (std::size_t i = 0; i < n; ++i)
    m[i][i] = f.one();
  return m;
}

template <class F> Vec<F> vecmat(F const &f, Vec<F> const &v, Mat<F> const &a)
{
  std::size_t const m = a.empty() ? 0 : a[0].size();
  Vec<F> r(m, f.zero());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (f.is_zero(v[i]))
      continue;
    for (std::size_t j = 0; j < m; ++j)
      r[j] = f.add(r[j], f.mul(v[i], a[i][j]));
  }
  return r;
}

template <class F> Mat<F> matmul(F const &f, Mat<F> const &a, Mat<F> const &b)
{
  Mat<F> r;
  r.reserve(a.size());
  for (auto const &row : a)
    r.push_back(vecmat(f, row, b));
  return r;
}

template <class M> M transpose(M const &a)
{
  if (a.empty())
    return {};
  M t(a[0].size(), typename M::value_type(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j)
      t[j][i] = a[i][j];
  return t;
}

template <class F> Mat<F> add_scaled(F const &f, Mat<F> a, Mat<F> const &b, typename F::E const &c)
{
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j)
      a[i][j] = f.add(a[i][j], f.mul(c, b[i][j]));
  return a;
}

/**
 * Echelonized row space: reduced row echelon rows plus pivot columns.
 * Rows can be added incrementally; `reduce` clears pivot positions.
 */
template <class F> struct Echelon {
  F f;
  std::size_t n;
  Mat<F> rows;
  std::vector<std::size_t> pivots;

  Echelon(F field, std::size_t dim) : f(field), n(dim) {}

  Vec<F> reduce(Vec<F> v) const
  {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      auto c = v[pivots[r]];
      if (f.is_zero(c))
        continue;
      for (std::size_t j = 0; j < n; ++j)
        v[j] = f.sub(v[j], f.mul(c, rows[r][j]));
    }
    return v;
  }

  // Returns true when v was independent of the current rows.
  bool add(Vec<F> v)
  {
    v = reduce(std::move(v));
    std::size_t p = 0;
    while (p < n && f.is_zero(v[p]))
      ++p;
    if (p == n)
      return false;
    auto s = f.inv(v[p]);
    for (auto &x : v)
      x = f.mul(x, s);
    for (auto &row : rows) {
      auto c = row[p];
      if (f.is_zero(c))
        continue;
      for (std::size_t j = 0; j < n; ++j)
        row[j] = f.sub(row[j], f.mul(c, v[j]));
    }
    // keep rows sorted by pivot
    std::size_t pos = 0;
    while (pos < pivots.size() && pivots[pos] < p)
      ++pos;
    rows.insert(rows.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
    pivots.insert(pivots.begin() + static_cast<std::ptrdiff_t>(pos), p);
    return true;
  }

  std::size_t dim() const { return rows.size(); }
  bool contains(Vec<F> const &v) const
  {
    auto r = reduce(v);
    for (auto const &x : r)
      if (!f.is_zero(x))
        return false;
    return true;
  }
  // coordinates of a member vector in terms of `rows`
  Vec<F> coords(Vec<F> const &v) const
  {
    Vec<F> c;
    for (auto p : pivots)
      c.push_back(v[p]);
    return c;
  }
};

template <class F> std::size_t rank(F const &f, Mat<F> const &a)
{
  if (a.empty())
    return 0;
  Echelon<F> e(f, a[0].size());
  for (auto const &r : a)
    e.add(r);
  return e.dim();
}

// {v : v a = 0}
template <class F> Mat<F> left_nullspace(F const &f, Mat<F> const &a)
{
  std::size_t const n = a.size();
  std::size_t const m = n ? a[0].size() : 0;
  // Gaussian elimination on [a | I]
  Mat<F> aug(n, Vec<F>(m + n, f.zero()));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j)
      aug[i][j] = a[i][j];
    aug[i][m + i] = f.one();
  }
  std::size_t row = 0;
  for (std::size_t col = 0; col < m && row < n; ++col) {
    std::size_t p = row;
    while (p < n && f.is_zero(aug[p][col]))
      ++p;
    if (p == n)
      continue;
    std::swap(aug[p], aug[row]);
    auto s = f.inv(aug[row][col]);
    for (auto &x : aug[row])
      x = f.mul(x, s);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == row || f.is_zero(aug[i][col]))
        continue;
      auto c = aug[i][col];
      for (std::size_t j = 0; j < m + n; ++j)
        aug[i][j] = f.sub(aug[i][j], f.mul(c, aug[row][j]));
    }
    ++row;
  }
  Echelon<F> e(f, n);
  for (std::size_t i = row; i < n; ++i)
    e.add(Vec<F>(aug[i].begin() + static_cast<std::ptrdiff_t>(m), aug[i].end()));
  return e.rows;
}

template <class F> std::optional<Mat<F>> inverse(F const &f, Mat<F> const &a)
{
  std::size_t const n = a.size();
  Mat<F> aug(n, Vec<F>(2 * n, f.zero()));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      aug[i][j] = a[i][j];
    aug[i][n + i] = f.one();
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && f.is_zero(aug[p][col]))
      ++p;
    if (p == n)
      return std::nullopt;
    std::swap(aug[p], aug[col]);
    auto s = f.inv(aug[col][col]);
    for (auto &x : aug[col])
      x = f.mul(x, s);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || f.is_zero(aug[i][col]))
        continue;
      auto c = aug[i][col];
      for (std::size_t j = 0; j < 2 * n; ++j)
        aug[i][j] = f.sub(aug[i][j], f.mul(c, aug[col][j]));
    }
  }
  Mat<F> r(n);
  for (std::size_t i = 0; i < n; ++i)
    r[i].assign(aug[i].begin() + static_cast<std::ptrdiff_t>(n), aug[i].end());
  return r;
}

// Smallest subspace containing the seeds and invariant under v -> v g.
template <class F> Echelon<F> spin(F const &f, std::size_t n, Mat<F> const &seeds, std::vector<Mat<F>> const &gens)
{
  Echelon<F> e(f, n);
  Mat<F> queue;
  for (auto const &s : seeds)
    if (e.add(s))
      queue.push_back(s);
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (auto const &g : gens) {
      auto w = vecmat(f, queue[k], g);
      if (e.add(w))
        queue.push_back(std::move(w));
      if (e.dim() == n)
        return e;
    }
  return e;
}

// Action of g on the invariant subspace spanned by the echelon rows.
template <class F> Mat<F> sub_action(F const &f, Echelon<F> const &S, Mat<F> const &g)
{
  Mat<F> r;
  for (auto const &row : S.rows) {
    auto img = vecmat(f, row, g);
    if (!S.contains(img))
      throw std::logic_error("sub_action: subspace is not invariant");
    r.push_back(S.coords(img));
  }
  return r;
}

// Action of g on V / S, using the standard vectors off the pivots as basis.
template <class F> Mat<F> quotient_action([[maybe_unused]] F const &f, Echelon<F> const &S, Mat<F> const &g)
{
  std::size_t const n = S.n;
  std::vector<bool> piv(n, false);
  for (auto p : S.pivots)
    piv[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < n; ++j)
    if (!piv[j])
      free.push_back(j);
  Mat<F> r;
  for (auto j : free) {
    auto img = S.reduce(g[j]);
    Vec<F> row;
    for (auto k : free)
      row.push_back(img[k]);
    r.push_back(std::move(row));
  }
  return r;
}

} // namespace weylkit::la
