#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace weylkit {

using Point = std::uint32_t;

/**
 * A permutation of {0, ..., degree-1}.
 *
 * Permutations act on the right: the image of x under g is g[x], and the
 * product g * h applies g first and then h, so x^(g*h) = h[g[x]].  Text
 * I/O uses 1-based cycle notation, e.g. "(1,2,3)(4,5)".
 */
class Perm {
public:
  Perm() = default;
  explicit Perm(std::size_t degree);
  explicit Perm(std::vector<Point> images);

  static Perm identity(std::size_t degree) { return Perm(degree); }
  static Perm from_cycles(std::size_t degree, std::string_view text);

  std::size_t degree() const { return _images.size(); }
  Point operator[](Point x) const { return _images[x]; }
  std::vector<Point> const &images() const { return _images; }

  Perm operator*(Perm const &rhs) const;
  Perm &operator*=(Perm const &rhs);
  Perm inverse() const;
  Perm pow(long long k) const;
  // x^-1 * this * x
  Perm conjugate(Perm const &x) const;

  bool is_identity() const;
  std::uint64_t order() const;
  std::vector<std::vector<Point>> cycles() const;
  std::string to_cycles() const;

  auto operator<=>(Perm const &) const = default;
  bool operator==(Perm const &) const = default;

private:
  std::vector<Point> _images;
};

struct PermHash {
  std::size_t operator()(Perm const &p) const noexcept;
};

std::size_t hash_points(std::span<Point const> pts) noexcept;

} // namespace weylkit
