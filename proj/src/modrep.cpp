#include "weylkit/modrep.hpp"

#include <algorithm>
#include <functional>
#include <type_traits>
#include <stdexcept>

#include "linalg.hpp"
#include "weylkit/numtheory.hpp"
#include "weylkit/rng.hpp"

namespace weylkit {

namespace {

using la::PrimeField;
using la::RationalField;
using FpMat = la::Mat<PrimeField>;
using QMat = la::Mat<RationalField>;

PrimeField field_of(std::uint64_t p) { return PrimeField{static_cast<std::int64_t>(p)}; }

FpMat to_fp(RatMatrix const &m, PrimeField f)
{
  FpMat r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (auto const &x : m[i]) {
      BigInt num = numerator(x) % f.p, den = denominator(x) % f.p;
      if (den == 0)
        throw std::domain_error("entry has a denominator divisible by " + std::to_string(f.p));
      auto n = f.from(static_cast<std::int64_t>(num));
      r[i].push_back(f.mul(n, f.inv(f.from(static_cast<std::int64_t>(den)))));
    }
  return r;
}

RatMatrix from_fp(FpMat const &m)
{
  RatMatrix r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (auto x : m[i])
      r[i].emplace_back(x);
  return r;
}

std::vector<RatVector> rows_of(FpMat const &m) { return from_fp(m); }

// ---------------------------------------------------------------------------
// polynomials over a field, coefficients low to high

template <class F> using P = la::Vec<F>;

template <class F> void ptrim(F const &f, P<F> &a)
{
  while (!a.empty() && f.is_zero(a.back()))
    a.pop_back();
}

template <class F> int pdeg(P<F> const &a) { return static_cast<int>(a.size()) - 1; }

template <class F> P<F> psub(F const &f, P<F> a, P<F> const &b)
{
  if (a.size() < b.size())
    a.resize(b.size(), f.zero());
  for (std::size_t i = 0; i < b.size(); ++i)
    a[i] = f.sub(a[i], b[i]);
  ptrim(f, a);
  return a;
}

template <class F> P<F> padd(F const &f, P<F> a, P<F> const &b)
{
  if (a.size() < b.size())
    a.resize(b.size(), f.zero());
  for (std::size_t i = 0; i < b.size(); ++i)
    a[i] = f.add(a[i], b[i]);
  ptrim(f, a);
  return a;
}

template <class F> P<F> pmul(F const &f, P<F> const &a, P<F> const &b)
{
  if (a.empty() || b.empty())
    return {};
  P<F> r(a.size() + b.size() - 1, f.zero());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  ptrim(f, r);
  return r;
}

template <class F> std::pair<P<F>, P<F>> pdivmod(F const &f, P<F> a, P<F> const &b)
{
  if (b.empty())
    throw std::domain_error("polynomial division by zero");
  ptrim(f, a);
  if (a.size() < b.size())
    return {{}, a};
  P<F> q(a.size() - b.size() + 1, f.zero());
  auto li = f.inv(b.back());
  for (std::size_t k = a.size(); k-- >= b.size();) {
    auto c = f.mul(a[k], li);
    q[k - (b.size() - 1)] = c;
    if (f.is_zero(c))
      continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      a[k - (b.size() - 1) + j] = f.sub(a[k - (b.size() - 1) + j], f.mul(c, b[j]));
  }
  ptrim(f, a);
  ptrim(f, q);
  return {q, a};
}

template <class F> P<F> pmonic(F const &f, P<F> a)
{
  if (a.empty())
    return a;
  auto li = f.inv(a.back());
  for (auto &x : a)
    x = f.mul(x, li);
  return a;
}

template <class F> P<F> pgcd(F const &f, P<F> a, P<F> b)
{
  ptrim(f, a);
  ptrim(f, b);
  while (!b.empty()) {
    auto r = pdivmod(f, a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return pmonic(f, a);
}

template <class F> P<F> pderiv(F const &f, P<F> const &a)
{
  P<F> r;
  for (std::size_t k = 1; k < a.size(); ++k)
    r.push_back(f.mul(f.from(static_cast<std::int64_t>(k)), a[k]));
  ptrim(f, r);
  return r;
}

template <class F> la::Mat<F> eval_at(F const &f, P<F> const &c, la::Mat<F> const &A)
{
  std::size_t const n = A.size();
  la::Mat<F> r(n, la::Vec<F>(n, f.zero()));
  for (std::size_t k = c.size(); k-- > 0;) {
    r = la::matmul(f, r, A);
    for (std::size_t i = 0; i < n; ++i)
      r[i][i] = f.add(r[i][i], c[k]);
  }
  return r;
}

// Characteristic polynomial through reduction to upper Hessenberg form.
template <class F> P<F> charpoly(F const &f, la::Mat<F> H)
{
  std::size_t const n = H.size();
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t i = j + 1;
    while (i < n && f.is_zero(H[i][j]))
      ++i;
    if (i == n)
      continue;
    if (i != j + 1) {
      std::swap(H[i], H[j + 1]);
      for (auto &row : H)
        std::swap(row[i], row[j + 1]);
    }
    auto piv = f.inv(H[j + 1][j]);
    for (std::size_t k = j + 2; k < n; ++k) {
      auto u = f.mul(H[k][j], piv);
      if (f.is_zero(u))
        continue;
      for (std::size_t c = 0; c < n; ++c)
        H[k][c] = f.sub(H[k][c], f.mul(u, H[j + 1][c]));
      for (std::size_t r = 0; r < n; ++r)
        H[r][j + 1] = f.add(H[r][j + 1], f.mul(u, H[r][k]));
    }
  }
  std::vector<P<F>> p{P<F>{f.one()}};
  for (std::size_t m = 1; m <= n; ++m) {
    P<F> cur = pmul(f, P<F>{f.neg(H[m - 1][m - 1]), f.one()}, p[m - 1]);
    auto prod = f.one();
    for (std::size_t i = m - 1; i >= 1; --i) {
      prod = f.mul(prod, H[i][i - 1]);
      auto c = f.mul(H[i - 1][m - 1], prod);
      if (!f.is_zero(c))
        cur = psub(f, cur, pmul(f, P<F>{c}, p[i - 1]));
    }
    p.push_back(std::move(cur));
  }
  return p[n];
}

// ---------------------------------------------------------------------------
// factoring over F_p

P<PrimeField> powmod(PrimeField const &f, P<PrimeField> base, BigInt e, P<PrimeField> const &mod)
{
  P<PrimeField> r{1};
  base = pdivmod(f, base, mod).second;
  while (e > 0) {
    if (bit_test(e, 0))
      r = pdivmod(f, pmul(f, r, base), mod).second;
    base = pdivmod(f, pmul(f, base, base), mod).second;
    e >>= 1;
  }
  return r;
}

void squarefree_parts(PrimeField const &f, P<PrimeField> a, std::vector<P<PrimeField>> &out)
{
  a = pmonic(f, a);
  if (pdeg<PrimeField>(a) < 1)
    return;
  P<PrimeField> c = pgcd(f, a, pderiv(f, a));
  P<PrimeField> w = pdivmod(f, a, c).first;
  while (pdeg<PrimeField>(w) > 0) {
    P<PrimeField> y = pgcd(f, w, c);
    P<PrimeField> z = pdivmod(f, w, y).first;
    if (pdeg<PrimeField>(z) > 0)
      out.push_back(pmonic(f, z));
    w = y;
    c = pdivmod(f, c, y).first;
  }
  if (pdeg<PrimeField>(c) > 0) {
    // c is a p-th power
    P<PrimeField> root;
    for (std::size_t k = 0; k < c.size(); k += static_cast<std::size_t>(f.p))
      root.push_back(c[k]);
    squarefree_parts(f, root, out);
  }
}

void equal_degree_split(PrimeField const &f, P<PrimeField> const &g, int d, CounterRng &rng,
                        std::vector<P<PrimeField>> &out)
{
  if (pdeg<PrimeField>(g) == d) {
    out.push_back(g);
    return;
  }
  BigInt pd = ipow(BigInt(f.p), static_cast<unsigned>(d));
  for (;;) {
    P<PrimeField> a(static_cast<std::size_t>(pdeg<PrimeField>(g)));
    for (auto &x : a)
      x = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(f.p)));
    ptrim(f, a);
    if (pdeg<PrimeField>(a) < 1)
      continue;
    P<PrimeField> b;
    if (f.p == 2) {
      P<PrimeField> t = a;
      b = a;
      for (int k = 1; k < d; ++k) {
        t = pdivmod(f, pmul(f, t, t), g).second;
        b = padd(f, b, t);
      }
    } else {
      b = psub(f, powmod(f, a, (pd - 1) / 2, g), P<PrimeField>{1});
    }
    P<PrimeField> h = pgcd(f, g, b);
    if (pdeg<PrimeField>(h) > 0 && pdeg<PrimeField>(h) < pdeg<PrimeField>(g)) {
      equal_degree_split(f, h, d, rng, out);
      equal_degree_split(f, pdivmod(f, g, h).first, d, rng, out);
      return;
    }
  }
}

// Distinct monic irreducible factors, by increasing degree.
std::vector<P<PrimeField>> irreducible_factors(PrimeField const &f, P<PrimeField> const &a, CounterRng &rng)
{
  std::vector<P<PrimeField>> sq, out;
  squarefree_parts(f, a, sq);
  for (auto g : sq) {
    P<PrimeField> h{0, 1}; // x
    P<PrimeField> const x{0, 1};
    for (int d = 1; pdeg<PrimeField>(g) >= 2 * d; ++d) {
      h = powmod(f, h, BigInt(f.p), g);
      P<PrimeField> gd = pgcd(f, g, psub(f, h, x));
      if (pdeg<PrimeField>(gd) > 0) {
        equal_degree_split(f, gd, d, rng, out);
        g = pdivmod(f, g, gd).first;
        h = pdivmod(f, h, g).second;
      }
    }
    if (pdeg<PrimeField>(g) > 0)
      out.push_back(pmonic(f, g));
  }
  std::sort(out.begin(), out.end(), [](auto const &a, auto const &b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// meataxe pieces shared by both fields

template <class F> std::vector<la::Mat<F>> transposes(std::vector<la::Mat<F>> const &gens)
{
  std::vector<la::Mat<F>> r;
  for (auto const &g : gens)
    r.push_back(la::transpose(g));
  return r;
}

// Invariant subspace of V whose annihilator is the (transposed) invariant subspace U.
template <class F> la::Mat<F> annihilator(F const &f, la::Echelon<F> const &U)
{
  return la::left_nullspace(f, la::transpose(U.rows));
}

struct Found {
  std::optional<bool> irreducible;
  std::vector<RatVector> witness;
};

template <class F> std::vector<RatVector> as_rat(F const &, la::Mat<F> const &rows)
{
  if constexpr (std::is_same_v<F, PrimeField>)
    return rows_of(rows);
  else
    return rows;
}

/**
 * Spins v under the generators and w under their transposes.  Returns a
 * witness when either spin is proper.
 */
template <class F>
std::optional<std::vector<RatVector>> spin_pair(F const &f, std::size_t n, la::Vec<F> const &v, la::Vec<F> const &w,
                                                std::vector<la::Mat<F>> const &gens,
                                                std::vector<la::Mat<F>> const &tgens)
{
  auto S = la::spin(f, n, {v}, gens);
  if (S.dim() < n)
    return as_rat(f, S.rows);
  auto U = la::spin(f, n, {w}, tgens);
  if (U.dim() < n)
    return as_rat(f, annihilator(f, U));
  return std::nullopt;
}

template <class F> la::Mat<F> random_algebra_element(F const &f, std::vector<la::Mat<F>> &pool, CounterRng &rng,
                                                     std::int64_t coeff_range)
{
  auto const &a = pool[rng.below(pool.size())];
  auto const &b = pool[rng.below(pool.size())];
  la::Mat<F> ab = la::matmul(f, a, b);
  if (pool.size() < 12)
    pool.push_back(ab);
  else
    pool[rng.below(pool.size())] = ab;
  std::size_t const n = ab.size();
  la::Mat<F> A(n, la::Vec<F>(n, f.zero()));
  for (auto const &g : pool) {
    auto c = f.from(static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(2 * coeff_range + 1))) - coeff_range);
    if (!f.is_zero(c))
      A = la::add_scaled(f, A, g, c);
  }
  return A;
}

// Calls fn on every nonzero vector of span(basis) whose first nonzero coordinate is 1.
bool for_each_projective(PrimeField const &f, FpMat const &basis,
                         std::function<bool(la::Vec<PrimeField> const &)> const &fn)
{
  std::size_t const k = basis.size();
  if (k == 0)
    return true;
  std::size_t const n = basis[0].size();
  std::vector<std::int64_t> c(k, 0);
  for (std::size_t lead = 0; lead < k; ++lead) {
    std::fill(c.begin(), c.end(), 0);
    c[lead] = 1;
    for (;;) {
      la::Vec<PrimeField> v(n, 0);
      for (std::size_t i = lead; i < k; ++i)
        if (c[i])
          for (std::size_t j = 0; j < n; ++j)
            v[j] = f.add(v[j], f.mul(c[i], basis[i][j]));
      if (!fn(v))
        return false;
      std::size_t i = lead + 1;
      while (i < k && ++c[i] == f.p)
        c[i++] = 0;
      if (i == k)
        break;
    }
  }
  return true;
}

constexpr std::uint64_t kExhaustiveCap = 1u << 20;

IrreducibilityResult fp_irreducible(MatModule const &m, std::uint64_t seed)
{
  IrreducibilityResult res;
  std::size_t const n = m.dimension;
  if (n == 1) {
    res.verdict = Verdict::irreducible;
    res.method = "dimension 1";
    return res;
  }
  PrimeField const f = field_of(m.field);
  std::vector<FpMat> gens;
  for (auto const &g : m.generators)
    gens.push_back(to_fp(g, f));
  if (gens.empty())
    gens.push_back(la::identity(f, n));
  auto const tgens = transposes<PrimeField>(gens);
  CounterRng rng(seed);
  std::vector<FpMat> pool = gens;

  auto reducible = [&](std::vector<RatVector> w, char const *how) {
    res.verdict = Verdict::reducible;
    res.witness = SubmoduleWitness{std::move(w)};
    res.method = how;
    return res;
  };

  FpMat best_null, best_dual;
  for (int attempt = 0; attempt < 64; ++attempt) {
    FpMat A = random_algebra_element(f, pool, rng, f.p / 2);
    for (auto const &fac : irreducible_factors(f, charpoly(f, A), rng)) {
      FpMat N = eval_at(f, fac, A);
      FpMat null = la::left_nullspace(f, N);
      FpMat dual = la::left_nullspace(f, la::transpose(N));
      if (auto w = spin_pair(f, n, null.front(), dual.front(), gens, tgens))
        return reducible(std::move(*w), "meataxe spin");
      if (static_cast<int>(null.size()) == pdeg<PrimeField>(fac)) {
        res.verdict = Verdict::irreducible;
        res.method = "norton";
        return res;
      }
      if (best_null.empty() || null.size() < best_null.size()) {
        best_null = null;
        best_dual = dual;
      }
    }
  }
  // Any submodule meets the null space of f(A) or its dual nontrivially.
  if (ipow(BigInt(f.p), static_cast<unsigned>(best_null.size())) <= kExhaustiveCap) {
    std::optional<std::vector<RatVector>> w;
    for_each_projective(f, best_null, [&](auto const &v) {
      auto S = la::spin(f, n, {v}, gens);
      if (S.dim() < n)
        w = rows_of(S.rows);
      return !w;
    });
    if (!w)
      for_each_projective(f, best_dual, [&](auto const &v) {
        auto U = la::spin(f, n, {v}, tgens);
        if (U.dim() < n)
          w = rows_of(annihilator(f, U));
        return !w;
      });
    if (w)
      return reducible(std::move(*w), "null space sweep");
    res.verdict = Verdict::irreducible;
    res.method = "null space sweep";
    return res;
  }
  res.method = "meataxe undecided";
  return res;
}

// ---------------------------------------------------------------------------
// rationals

std::vector<BigInt> divisors(BigInt n)
{
  if (n < 0)
    n = -n;
  std::vector<BigInt> d{1};
  for (auto const &[p, e] : factor_integer(n)) {
    std::size_t const sz = d.size();
    BigInt pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < sz; ++i)
        d.push_back(d[i] * pk);
    }
  }
  return d;
}

std::vector<BigRational> rational_roots(P<RationalField> c)
{
  std::vector<BigRational> roots;
  if (c.empty())
    return roots;
  std::size_t z = 0;
  while (z < c.size() && c[z] == 0)
    ++z;
  if (z > 0)
    roots.emplace_back(0);
  c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(z));
  if (c.size() < 2)
    return roots;
  BigInt l = 1;
  for (auto const &x : c)
    l = boost::multiprecision::lcm(l, BigInt(denominator(x)));
  std::vector<BigInt> ic;
  for (auto const &x : c)
    ic.push_back(numerator(BigRational(x * l)));
  auto num = divisors(ic.front()), den = divisors(ic.back());
  if (num.size() * den.size() > 200000)
    return roots;
  std::vector<BigRational> seen;
  for (auto const &a : num)
    for (auto const &b : den)
      for (int s : {1, -1}) {
        BigRational r(a * s, b);
        if (std::find(seen.begin(), seen.end(), r) != seen.end())
          continue;
        seen.push_back(r);
        BigRational v = 0;
        for (std::size_t k = ic.size(); k-- > 0;)
          v = v * r + BigRational(ic[k]);
        if (v == 0)
          roots.push_back(r);
      }
  return roots;
}

template <class F> la::Mat<F> commutant_basis(F const &f, std::vector<la::Mat<F>> const &gens, std::size_t n)
{
  // column (i*n+k) of the system is the unknown X[i][k]
  la::Mat<F> eqT(n * n);
  for (auto const &g : gens)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        // (Xg - gX)[i][j]
        for (std::size_t v = 0; v < n * n; ++v)
          eqT[v].push_back(f.zero());
        for (std::size_t k = 0; k < n; ++k) {
          auto &a = eqT[i * n + k].back();
          a = f.add(a, g[k][j]);
          auto &b = eqT[k * n + j].back();
          b = f.sub(b, g[i][k]);
        }
      }
  if (gens.empty())
    return la::identity(f, n * n);
  return la::left_nullspace(f, eqT);
}

template <class F> la::Mat<F> unflatten(la::Vec<F> const &v, std::size_t n)
{
  la::Mat<F> x(n);
  for (std::size_t i = 0; i < n; ++i)
    x[i].assign(v.begin() + static_cast<std::ptrdiff_t>(i * n), v.begin() + static_cast<std::ptrdiff_t>((i + 1) * n));
  return x;
}

std::vector<std::uint64_t> const kGoodPrimes{3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73};

IrreducibilityResult q_irreducible(MatModule const &m, std::uint64_t seed)
{
  IrreducibilityResult res;
  std::size_t const n = m.dimension;
  if (n == 1) {
    res.verdict = Verdict::irreducible;
    res.method = "dimension 1";
    return res;
  }
  RationalField const f;
  std::vector<QMat> gens = m.generators;
  if (gens.empty())
    gens.push_back(la::identity(f, n));
  auto const tgens = transposes<RationalField>(gens);
  auto reducible = [&](std::vector<RatVector> w, std::string how) {
    res.verdict = Verdict::reducible;
    res.witness = SubmoduleWitness{std::move(w)};
    res.method = std::move(how);
    return res;
  };

  // Norton's test on linear factors of characteristic polynomials
  CounterRng rng(seed);
  std::vector<QMat> pool = gens;
  for (int attempt = 0; attempt < 24; ++attempt) {
    QMat A = random_algebra_element(f, pool, rng, 2);
    for (auto const &lambda : rational_roots(charpoly(f, A))) {
      QMat N = A;
      for (std::size_t i = 0; i < n; ++i)
        N[i][i] -= lambda;
      QMat null = la::left_nullspace(f, N);
      QMat dual = la::left_nullspace(f, la::transpose(N));
      if (auto w = spin_pair(f, n, null.front(), dual.front(), gens, tgens))
        return reducible(std::move(*w), "rational spin");
      if (null.size() == 1) {
        res.verdict = Verdict::irreducible;
        res.method = "norton";
        return res;
      }
    }
  }

  // an invariant lattice reducing to an irreducible module
  for (auto p : kGoodPrimes) {
    MatModule red;
    try {
      red = reduce_mod(m, p);
    } catch (std::domain_error const &) {
      continue;
    }
    if (fp_irreducible(red, seed ^ p).irreducible()) {
      res.verdict = Verdict::irreducible;
      res.method = "reduction mod " + std::to_string(p);
      return res;
    }
  }

  // kernels of singular commutant elements are invariant
  for (auto const &v : commutant_basis(f, gens, n)) {
    QMat X = unflatten<RationalField>(v, n);
    for (auto const &lambda : rational_roots(charpoly(f, X))) {
      for (std::size_t i = 0; i < n; ++i)
        X[i][i] -= lambda;
      QMat k = la::left_nullspace(f, X);
      if (!k.empty() && k.size() < n)
        return reducible(k, "commutant kernel");
      for (std::size_t i = 0; i < n; ++i)
        X[i][i] += lambda;
    }
  }
  res.method = "rational test undecided";
  return res;
}

// sub/quotient through an echelonized invariant subspace, over either field
RatMatrix apply_step(std::uint64_t field, CompositionFactor::Step const &st, RatMatrix const &g)
{
  auto run = [&](auto const &f, auto const &gm, auto const &rows) {
    using Fd = std::decay_t<decltype(f)>;
    la::Echelon<Fd> S(f, gm.size());
    for (auto const &r : rows)
      S.add(r);
    return st.quotient ? la::quotient_action(f, S, gm) : la::sub_action(f, S, gm);
  };
  if (field == 0)
    return run(RationalField{}, g, st.basis);
  PrimeField const f = field_of(field);
  return from_fp(run(f, to_fp(g, f), to_fp(st.basis, f)));
}

void chop(MatModule const &cur, std::vector<CompositionFactor::Step> const &steps, std::uint64_t seed,
          std::vector<CompositionFactor> &out)
{
  auto r = is_irreducible(cur, seed);
  if (r.verdict == Verdict::inconclusive)
    throw std::runtime_error("composition_factors: irreducibility undecided (" + r.method + ")");
  if (r.irreducible()) {
    out.push_back({cur, steps});
    return;
  }
  for (bool quotient : {false, true}) {
    CompositionFactor::Step st{quotient, r.witness->basis};
    MatModule part{cur.field, quotient ? cur.dimension - st.basis.size() : st.basis.size(), {}};
    for (auto const &g : cur.generators)
      part.generators.push_back(apply_step(cur.field, st, g));
    auto next = steps;
    next.push_back(std::move(st));
    chop(part, next, seed, out);
  }
}

} // namespace

// ---------------------------------------------------------------------------

std::string MatModule::field_name() const { return field == 0 ? "Q" : "GF(" + std::to_string(field) + ")"; }

void MatModule::validate() const
{
  if (field != 0 && !is_prime_u64(field))
    throw std::invalid_argument("module field must be 0 (rationals) or a prime, got " + std::to_string(field));
  if (field > (1ULL << 31))
    throw std::invalid_argument("prime field too large");
  if (dimension == 0)
    throw std::invalid_argument("module dimension must be positive");
  for (auto const &g : generators) {
    if (g.size() != dimension)
      throw std::invalid_argument("generator has the wrong number of rows");
    for (auto const &row : g) {
      if (row.size() != dimension)
        throw std::invalid_argument("generator has the wrong number of columns");
      if (field != 0)
        for (auto const &x : row)
          if (denominator(x) != 1 || x < 0 || x >= BigRational(field))
            throw std::invalid_argument("prime field entries must be integers in [0, p)");
    }
    bool invertible = field == 0 ? la::inverse(RationalField{}, g).has_value()
                                 : la::inverse(field_of(field), to_fp(g, field_of(field))).has_value();
    if (!invertible)
      throw std::invalid_argument("module generator is singular");
  }
}

RatMatrix to_rat(IntMatrix const &m)
{
  RatMatrix r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (int x : m[i])
      r[i].emplace_back(x);
  return r;
}

MatModule make_module(std::uint64_t field, std::vector<IntMatrix> const &generators)
{
  if (generators.empty())
    throw std::invalid_argument("make_module needs at least one generator");
  MatModule m{field, generators.front().size(), {}};
  for (auto const &g : generators) {
    RatMatrix r = to_rat(g);
    if (field != 0)
      for (auto &row : r)
        for (auto &x : row) {
          BigInt v = numerator(x) % field;
          if (v < 0)
            v += field;
          x = BigRational(v);
        }
    m.generators.push_back(std::move(r));
  }
  m.validate();
  return m;
}

RatMatrix permutation_matrix(Perm const &g)
{
  std::size_t const n = g.degree();
  RatMatrix r(n, RatVector(n, BigRational(0)));
  for (std::size_t i = 0; i < n; ++i)
    r[i][g[static_cast<Point>(i)]] = 1;
  return r;
}

MatModule permutation_module(PermGroup const &G, std::uint64_t p)
{
  MatModule m{p, G.degree(), {}};
  for (auto const &g : G.generators())
    m.generators.push_back(permutation_matrix(g));
  m.validate();
  return m;
}

MatModule reduce_mod(MatModule const &m, std::uint64_t p)
{
  if (!m.is_rational())
    throw std::invalid_argument("reduce_mod expects a rational module");
  PrimeField const f = field_of(p);
  MatModule r{p, m.dimension, {}};
  for (auto const &g : m.generators) {
    auto gi = la::inverse(RationalField{}, g);
    if (!gi)
      throw std::invalid_argument("module generator is singular");
    to_fp(*gi, f); // throws when the inverse is not p-integral
    FpMat gp = to_fp(g, f);
    if (!la::inverse(f, gp))
      throw std::domain_error("generator is singular mod " + std::to_string(p));
    r.generators.push_back(from_fp(gp));
  }
  return r;
}

MatModule restriction(MatModule const &m, std::vector<std::vector<int>> const &words)
{
  std::size_t const k = m.generators.size();
  auto eval = [&](auto const &f, auto const &gens) {
    using Fd = std::decay_t<decltype(f)>;
    std::vector<la::Mat<Fd>> out;
    std::vector<std::optional<la::Mat<Fd>>> inv(k);
    for (auto const &w : words) {
      la::Mat<Fd> x = la::identity(f, m.dimension);
      for (int letter : w) {
        std::size_t idx = static_cast<std::size_t>(letter < 0 ? -letter : letter);
        if (letter == 0 || idx > k)
          throw std::invalid_argument("word letter " + std::to_string(letter) + " is not a generator index");
        --idx;
        if (letter > 0) {
          x = la::matmul(f, x, gens[idx]);
        } else {
          if (!inv[idx])
            inv[idx] = la::inverse(f, gens[idx]).value();
          x = la::matmul(f, x, *inv[idx]);
        }
      }
      out.push_back(std::move(x));
    }
    return out;
  };
  MatModule r{m.field, m.dimension, {}};
  if (m.is_rational()) {
    r.generators = eval(RationalField{}, m.generators);
  } else {
    PrimeField const f = field_of(m.field);
    std::vector<FpMat> g;
    for (auto const &x : m.generators)
      g.push_back(to_fp(x, f));
    for (auto const &x : eval(f, g))
      r.generators.push_back(from_fp(x));
  }
  return r;
}

MatModule conjugate_module(MatModule const &m, RatMatrix const &x)
{
  MatModule r{m.field, m.dimension, {}};
  if (m.is_rational()) {
    RationalField const f;
    auto xi = la::inverse(f, x);
    if (!xi)
      throw std::invalid_argument("conjugate_module: matrix is singular");
    for (auto const &g : m.generators)
      r.generators.push_back(la::matmul(f, la::matmul(f, *xi, g), x));
  } else {
    PrimeField const f = field_of(m.field);
    FpMat xp = to_fp(x, f);
    auto xi = la::inverse(f, xp);
    if (!xi)
      throw std::invalid_argument("conjugate_module: matrix is singular");
    for (auto const &g : m.generators)
      r.generators.push_back(from_fp(la::matmul(f, la::matmul(f, *xi, to_fp(g, f)), xp)));
  }
  return r;
}

bool is_invariant_subspace(MatModule const &m, std::vector<RatVector> const &basis)
{
  auto check = [&](auto const &f, auto const &rows, auto const &gens) {
    using Fd = std::decay_t<decltype(f)>;
    la::Echelon<Fd> S(f, m.dimension);
    for (auto const &r : rows)
      if (r.size() != m.dimension || !S.add(r))
        return false;
    if (S.dim() == 0 || S.dim() >= m.dimension)
      return false;
    for (auto const &g : gens)
      for (auto const &r : S.rows)
        if (!S.contains(la::vecmat(f, r, g)))
          return false;
    return true;
  };
  if (m.is_rational())
    return check(RationalField{}, basis, m.generators);
  PrimeField const f = field_of(m.field);
  std::vector<FpMat> g;
  for (auto const &x : m.generators)
    g.push_back(to_fp(x, f));
  return check(f, to_fp(basis, f), g);
}

IrreducibilityResult is_irreducible(MatModule const &m, std::uint64_t seed)
{
  m.validate();
  IrreducibilityResult r = m.is_rational() ? q_irreducible(m, seed) : fp_irreducible(m, seed);
  if (r.verdict == Verdict::reducible && (!r.witness || !is_invariant_subspace(m, r.witness->basis)))
    throw std::logic_error("is_irreducible produced an invalid submodule witness");
  return r;
}

bool exhaustive_irreducible(MatModule const &m)
{
  if (m.is_rational())
    throw std::invalid_argument("exhaustive_irreducible needs a prime field");
  if (ipow(BigInt(m.field), static_cast<unsigned>(m.dimension)) > kExhaustiveCap)
    throw CapExceeded("exhaustive_irreducible: field too large for brute force");
  PrimeField const f = field_of(m.field);
  std::vector<FpMat> gens;
  for (auto const &g : m.generators)
    gens.push_back(to_fp(g, f));
  return for_each_projective(f, la::identity(f, m.dimension),
                             [&](auto const &v) { return la::spin(f, m.dimension, {v}, gens).dim() == m.dimension; });
}

MatModule kernel_submodule(MatModule const &m, RatMatrix const &a)
{
  auto run = [&](auto const &f, auto const &am, auto const &gens) {
    using Fd = std::decay_t<decltype(f)>;
    la::Echelon<Fd> S(f, m.dimension);
    for (auto const &r : la::left_nullspace(f, am))
      S.add(r);
    if (S.dim() == 0)
      throw std::invalid_argument("kernel_submodule: kernel is zero");
    std::vector<la::Mat<Fd>> out;
    for (auto const &g : gens)
      out.push_back(la::sub_action(f, S, g));
    return std::make_pair(S.dim(), out);
  };
  if (m.is_rational()) {
    auto [d, gens] = run(RationalField{}, a, m.generators);
    return MatModule{0, d, gens};
  }
  PrimeField const f = field_of(m.field);
  std::vector<FpMat> g;
  for (auto const &x : m.generators)
    g.push_back(to_fp(x, f));
  auto [d, gens] = run(f, to_fp(a, f), g);
  MatModule r{m.field, d, {}};
  for (auto const &x : gens)
    r.generators.push_back(from_fp(x));
  return r;
}

std::size_t fixed_vectors(MatModule const &m)
{
  auto run = [&](auto const &f, auto const &gens) {
    using Fd = std::decay_t<decltype(f)>;
    std::size_t const n = m.dimension;
    if (gens.empty())
      return n;
    la::Mat<Fd> stacked(n);
    for (auto const &g : gens)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          stacked[i].push_back(i == j ? f.sub(g[i][j], f.one()) : g[i][j]);
    return la::left_nullspace(f, stacked).size();
  };
  if (m.is_rational())
    return run(RationalField{}, m.generators);
  PrimeField const f = field_of(m.field);
  std::vector<FpMat> g;
  for (auto const &x : m.generators)
    g.push_back(to_fp(x, f));
  return run(f, g);
}

std::size_t commutant_dimension(MatModule const &m)
{
  if (m.is_rational())
    return commutant_basis(RationalField{}, m.generators, m.dimension).size();
  PrimeField const f = field_of(m.field);
  std::vector<FpMat> g;
  for (auto const &x : m.generators)
    g.push_back(to_fp(x, f));
  return commutant_basis(f, g, m.dimension).size();
}

MatModule CompositionFactor::apply(std::vector<RatMatrix> const &parent_matrices) const
{
  MatModule r{module.field, module.dimension, {}};
  for (auto g : parent_matrices) {
    for (auto const &st : steps)
      g = apply_step(module.field, st, g);
    r.generators.push_back(std::move(g));
  }
  return r;
}

std::vector<CompositionFactor> composition_factors(MatModule const &m, std::uint64_t seed)
{
  m.validate();
  std::vector<CompositionFactor> out;
  chop(m, {}, seed, out);
  return out;
}

std::vector<CompositionFactor> chop_permutation_module(PermGroup const &G, std::uint64_t p)
{
  if (!is_prime_u64(p) || p > kChopPrimeCap)
    throw std::invalid_argument("chop_permutation_module: p must be a prime <= " + std::to_string(kChopPrimeCap));
  if (G.degree() > kChopDegreeCap)
    throw CapExceeded("chop_permutation_module: degree exceeds " + std::to_string(kChopDegreeCap));
  if (G.order() > kChopOrderCap)
    throw CapExceeded("chop_permutation_module: group order exceeds " + std::to_string(kChopOrderCap));
  return composition_factors(permutation_module(G, p));
}

} // namespace weylkit
