#pragma once

#include <cstdint>

namespace weylkit {

// Counter-based generator: the k-th draw is splitmix64(seed + k), so any
// run is reproducible from (seed, counter).
class CounterRng {
public:
  explicit CounterRng(std::uint64_t seed = 0x5eed5eedULL) : _seed(seed) {}

  std::uint64_t next()
  {
    std::uint64_t z = _seed + 0x9e3779b97f4a7c15ULL * (++_counter);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }
  std::uint64_t counter() const { return _counter; }

private:
  std::uint64_t _seed;
  std::uint64_t _counter = 0;
};

} // namespace weylkit
