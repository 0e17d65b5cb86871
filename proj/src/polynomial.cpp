#include "weylkit/polynomial.hpp"

#include <cctype>
#include <mutex>
#include <stdexcept>

namespace weylkit {

Poly::Poly(std::vector<BigInt> coeffs) : _c(std::move(coeffs)) { trim(); }

void Poly::trim()
{
  while (!_c.empty() && _c.back() == 0)
    _c.pop_back();
}

Poly Poly::monomial(unsigned k, BigInt c)
{
  std::vector<BigInt> v(k + 1, BigInt(0));
  v[k] = std::move(c);
  return Poly(std::move(v));
}

BigInt const &Poly::coeff(std::size_t k) const
{
  static BigInt const zero = 0;
  return k < _c.size() ? _c[k] : zero;
}

Poly Poly::operator+(Poly const &o) const
{
  std::vector<BigInt> r(std::max(_c.size(), o._c.size()), BigInt(0));
  for (std::size_t k = 0; k < r.size(); ++k)
    r[k] = coeff(k) + o.coeff(k);
  return Poly(std::move(r));
}

Poly Poly::operator-() const
{
  std::vector<BigInt> r = _c;
  for (auto &x : r)
    x = -x;
  return Poly(std::move(r));
}

Poly Poly::operator-(Poly const &o) const { return *this + (-o); }

Poly Poly::operator*(Poly const &o) const
{
  if (is_zero() || o.is_zero())
    return Poly();
  std::vector<BigInt> r(_c.size() + o._c.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < _c.size(); ++i)
    for (std::size_t j = 0; j < o._c.size(); ++j)
      r[i + j] += _c[i] * o._c[j];
  return Poly(std::move(r));
}

bool Poly::divide_exact(Poly const &monic, Poly &quotient) const
{
  if (monic.is_zero() || monic.lead() != 1)
    throw std::invalid_argument("divide_exact: divisor must be monic");
  std::vector<BigInt> rem = _c;
  int const dm = monic.degree();
  if (degree() < dm) {
    quotient = Poly();
    return is_zero();
  }
  std::vector<BigInt> q(static_cast<std::size_t>(degree() - dm + 1), BigInt(0));
  for (int k = degree(); k >= dm; --k) {
    BigInt c = rem[static_cast<std::size_t>(k)];
    if (c == 0)
      continue;
    q[static_cast<std::size_t>(k - dm)] = c;
    for (int j = 0; j <= dm; ++j)
      rem[static_cast<std::size_t>(k - dm + j)] -= c * monic._c[static_cast<std::size_t>(j)];
  }
  for (auto const &x : rem)
    if (x != 0)
      return false;
  quotient = Poly(std::move(q));
  return true;
}

BigInt Poly::eval(BigInt const &q) const
{
  BigInt r = 0;
  for (std::size_t k = _c.size(); k-- > 0;)
    r = r * q + _c[k];
  return r;
}

std::string Poly::to_string() const
{
  if (is_zero())
    return "0";
  std::string s;
  for (std::size_t k = _c.size(); k-- > 0;) {
    BigInt c = _c[k];
    if (c == 0)
      continue;
    bool neg = c < 0;
    if (neg)
      c = -c;
    if (!s.empty())
      s += neg ? "-" : "+";
    else if (neg)
      s += "-";
    if (k == 0 || c != 1)
      s += c.str();
    if (k > 0) {
      if (c != 1)
        s += "*";
      s += "q";
      if (k > 1)
        s += "^" + std::to_string(k);
    }
  }
  return s;
}

unsigned totient(unsigned n)
{
  unsigned r = n;
  for (unsigned p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      while (n % p == 0)
        n /= p;
      r -= r / p;
    }
  if (n > 1)
    r -= r / n;
  return r;
}

Poly Poly::cyclotomic(unsigned d)
{
  if (d == 0)
    throw std::invalid_argument("cyclotomic: d must be positive");
  static std::mutex mu;
  static std::map<unsigned, Poly> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(d);
    if (it != cache.end())
      return it->second;
  }
  Poly p = monomial(d) - constant(1);
  for (unsigned e = 1; e < d; ++e)
    if (d % e == 0) {
      Poly quo;
      if (!p.divide_exact(cyclotomic(e), quo))
        throw std::logic_error("cyclotomic: inexact division");
      p = quo;
    }
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(d, p);
  return p;
}

Poly FactoredPolynomial::expand() const
{
  Poly r = Poly::monomial(q_power, sign);
  for (auto const &[d, m] : cyclotomic)
    for (unsigned k = 0; k < m; ++k)
      r = r * Poly::cyclotomic(d);
  return r;
}

std::string FactoredPolynomial::to_string() const
{
  std::string s = sign < 0 ? "-" : "";
  bool first = true;
  auto sep = [&] {
    if (!first)
      s += "*";
    first = false;
  };
  if (q_power > 0) {
    sep();
    s += "q";
    if (q_power > 1)
      s += "^" + std::to_string(q_power);
  }
  for (auto it = cyclotomic.rbegin(); it != cyclotomic.rend(); ++it) {
    sep();
    s += "(" + Poly::cyclotomic(it->first).to_string() + ")";
    if (it->second > 1)
      s += "^" + std::to_string(it->second);
  }
  if (first)
    s += "1";
  return s;
}

FactoredPolynomial FactoredPolynomial::factor(Poly const &p0)
{
  if (p0.is_zero())
    throw std::domain_error("cannot factor the zero polynomial");
  FactoredPolynomial f;
  Poly p = p0;
  while (p.coeff(0) == 0) {
    Poly quo;
    p.divide_exact(Poly::monomial(1), quo);
    p = quo;
    ++f.q_power;
  }
  unsigned const n = static_cast<unsigned>(p.degree());
  // phi(d) >= sqrt(d / 2), so d <= 2 n^2 covers every factor of degree <= n
  unsigned const dmax = std::max(2u, 2 * n * n);
  for (unsigned d = 1; d <= dmax && p.degree() > 0; ++d) {
    if (totient(d) > static_cast<unsigned>(p.degree()))
      continue;
    Poly const phi = Poly::cyclotomic(d);
    Poly quo;
    while (p.degree() >= phi.degree() && p.divide_exact(phi, quo)) {
      p = quo;
      ++f.cyclotomic[d];
    }
  }
  if (p.degree() != 0 || (p.coeff(0) != 1 && p.coeff(0) != -1))
    throw std::domain_error("polynomial is not a product of cyclotomic factors and q: " + p0.to_string());
  f.sign = p.coeff(0) == 1 ? 1 : -1;
  return f;
}

namespace {

struct Parser {
  std::string_view s;
  std::size_t i = 0;

  void ws()
  {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
      ++i;
  }
  [[noreturn]] void fail(char const *what) const
  {
    throw std::invalid_argument(std::string("polynomial parse error: ") + what + " in '" + std::string(s) + "'");
  }
  unsigned number()
  {
    ws();
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
      fail("expected number");
    unsigned v = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
      v = v * 10 + static_cast<unsigned>(s[i++] - '0');
    return v;
  }
  bool eat(char c)
  {
    ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  Poly power(Poly base)
  {
    if (!eat('^'))
      return base;
    unsigned e = number();
    Poly r = Poly::constant(1);
    for (unsigned k = 0; k < e; ++k)
      r = r * base;
    return r;
  }
  // sum of products
  Poly expr()
  {
    Poly acc;
    bool neg = eat('-');
    if (!neg)
      eat('+');
    for (;;) {
      Poly t = product();
      acc = neg ? acc - t : acc + t;
      if (eat('+'))
        neg = false;
      else if (eat('-'))
        neg = true;
      else
        return acc;
    }
  }
  Poly product()
  {
    Poly acc = atom();
    while (eat('*'))
      acc = acc * atom();
    return acc;
  }
  Poly atom()
  {
    ws();
    if (eat('(')) {
      Poly inner = expr();
      if (!eat(')'))
        fail("expected ')'");
      return power(inner);
    }
    if (eat('q'))
      return power(Poly::monomial(1));
    return power(Poly::constant(number()));
  }
};

} // namespace

FactoredPolynomial FactoredPolynomial::parse(std::string const &text)
{
  Parser p{text};
  Poly v = p.expr();
  p.ws();
  if (p.i != text.size())
    p.fail("trailing input");
  return factor(v);
}

} // namespace weylkit
