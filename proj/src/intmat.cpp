#include "weylkit/intmat.hpp"

#include <stdexcept>

namespace weylkit {

BigMatrix to_big(IntMatrix const &m)
{
  BigMatrix r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (int x : m[i])
      r[i].push_back(BigInt(x));
  return r;
}

BigMatrix identity_matrix(std::size_t n)
{
  BigMatrix r(n, std::vector<BigInt>(n, BigInt(0)));
  for (std::size_t i = 0; i < n; ++i)
    r[i][i] = 1;
  return r;
}

BigMatrix matmul(BigMatrix const &a, BigMatrix const &b)
{
  if (a.empty())
    return {};
  if (a[0].size() != b.size())
    throw std::invalid_argument("matmul: shape mismatch");
  std::size_t const n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  BigMatrix r(n, std::vector<BigInt>(m, BigInt(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t)
      if (a[i][t] != 0)
        for (std::size_t j = 0; j < m; ++j)
          r[i][j] += a[i][t] * b[t][j];
  return r;
}

IntMatrix matmul(IntMatrix const &a, IntMatrix const &b)
{
  if (a.empty())
    return {};
  if (a[0].size() != b.size())
    throw std::invalid_argument("matmul: shape mismatch");
  std::size_t const n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  IntMatrix r(n, std::vector<int>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t)
      for (std::size_t j = 0; j < m; ++j)
        r[i][j] += a[i][t] * b[t][j];
  return r;
}

BigInt determinant(BigMatrix m)
{
  std::size_t const n = m.size();
  for (auto const &row : m)
    if (row.size() != n)
      throw std::invalid_argument("determinant: matrix is not square");
  if (n == 0)
    return 1;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0)
        ++p;
      if (p == n)
        return 0;
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

std::vector<BigInt> smith_diagonal(BigMatrix a)
{
  std::size_t const rows = a.size(), cols = rows ? a[0].size() : 0;
  std::size_t const r = std::min(rows, cols);
  for (std::size_t t = 0; t < r; ++t) {
    for (;;) {
      // least nonzero |entry| in the trailing block
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a[i][j] != 0 && (pi == rows || abs(a[i][j]) < abs(a[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == rows)
        break; // remaining block is zero
      std::swap(a[t], a[pi]);
      for (auto &row : a)
        std::swap(row[t], row[pj]);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        BigInt f = a[i][t] / a[t][t];
        if (f != 0)
          for (std::size_t j = t; j < cols; ++j)
            a[i][j] -= f * a[t][j];
        clean = clean && a[i][t] == 0;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        BigInt f = a[t][j] / a[t][t];
        if (f != 0)
          for (std::size_t i = t; i < rows; ++i)
            a[i][j] -= f * a[i][t];
        clean = clean && a[t][j] == 0;
      }
      if (!clean)
        continue;
      // the pivot must divide the whole trailing block
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t c = t; c < cols; ++c)
              a[t][c] += a[i][c];
            divides = false;
            break;
          }
      if (divides)
        break;
    }
  }
  std::vector<BigInt> d;
  for (std::size_t t = 0; t < r; ++t)
    d.push_back(abs(a[t][t]));
  return d;
}

} // namespace weylkit
