#include "weylkit/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "weylkit/bigint.hpp"

namespace weylkit {

Perm::Perm(std::size_t degree) : _images(degree)
{
  std::iota(_images.begin(), _images.end(), Point{0});
}

Perm::Perm(std::vector<Point> images) : _images(std::move(images))
{
  std::vector<bool> seen(_images.size(), false);
  for (Point x : _images) {
    if (x >= _images.size() || seen[x])
      throw std::invalid_argument("permutation images are not a bijection");
    seen[x] = true;
  }
}

Perm Perm::from_cycles(std::size_t degree, std::string_view text)
{
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  std::vector<bool> used(degree, false);

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };

  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(')
      throw std::invalid_argument("malformed cycle string: expected '('");
    ++i;
    std::vector<Point> cyc;
    for (;;) {
      skip_ws();
      if (i >= text.size())
        throw std::invalid_argument("malformed cycle string: unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw std::invalid_argument("malformed cycle string: unexpected character");
      std::size_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        v = v * 10 + static_cast<std::size_t>(text[i++] - '0');
      if (v == 0 || v > degree)
        throw std::invalid_argument("cycle point out of range: " + std::to_string(v));
      if (used[v - 1])
        throw std::invalid_argument("point repeated in cycle string: " + std::to_string(v));
      used[v - 1] = true;
      cyc.push_back(static_cast<Point>(v - 1));
    }
    for (std::size_t k = 0; k < cyc.size(); ++k)
      img[cyc[k]] = cyc[(k + 1) % cyc.size()];
    skip_ws();
  }
  return Perm(std::move(img));
}

Perm Perm::operator*(Perm const &rhs) const
{
  if (rhs.degree() != degree())
    throw std::invalid_argument("degree mismatch in permutation product");
  std::vector<Point> img(degree());
  for (std::size_t x = 0; x < degree(); ++x)
    img[x] = rhs._images[_images[x]];
  Perm r;
  r._images = std::move(img);
  return r;
}

Perm &Perm::operator*=(Perm const &rhs)
{
  if (rhs.degree() != degree())
    throw std::invalid_argument("degree mismatch in permutation product");
  for (auto &x : _images)
    x = rhs._images[x];
  return *this;
}

Perm Perm::inverse() const
{
  Perm r;
  r._images.resize(degree());
  for (std::size_t x = 0; x < degree(); ++x)
    r._images[_images[x]] = static_cast<Point>(x);
  return r;
}

Perm Perm::pow(long long k) const
{
  Perm base = k < 0 ? inverse() : *this;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-k) : static_cast<unsigned long long>(k);
  Perm result(degree());
  while (e) {
    if (e & 1u)
      result *= base;
    base = base * base;
    e >>= 1u;
  }
  return result;
}

Perm Perm::conjugate(Perm const &x) const
{
  return x.inverse() * (*this) * x;
}

bool Perm::is_identity() const
{
  for (std::size_t x = 0; x < degree(); ++x)
    if (_images[x] != x)
      return false;
  return true;
}

std::uint64_t Perm::order() const
{
  std::uint64_t ord = 1;
  for (auto const &c : cycles())
    ord = lcm_u64(ord, c.size());
  return ord;
}

std::vector<std::vector<Point>> Perm::cycles() const
{
  std::vector<std::vector<Point>> result;
  std::vector<bool> seen(degree(), false);
  for (Point x = 0; x < degree(); ++x) {
    if (seen[x])
      continue;
    std::vector<Point> cyc;
    for (Point y = x; !seen[y]; y = _images[y]) {
      seen[y] = true;
      cyc.push_back(y);
    }
    result.push_back(std::move(cyc));
  }
  return result;
}

std::string Perm::to_cycles() const
{
  std::string out;
  for (auto const &c : cycles()) {
    if (c.size() < 2)
      continue;
    out += '(';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k)
        out += ',';
      out += std::to_string(c[k] + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::size_t hash_points(std::span<Point const> pts) noexcept
{
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (Point x : pts) {
    h ^= x;
    h *= 0x100000001b3ull;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

std::size_t PermHash::operator()(Perm const &p) const noexcept
{
  return hash_points(p.images());
}

} // namespace weylkit
