#ifndef TRIOBS_RNG_HPP_
#define TRIOBS_RNG_HPP_

#include <cmath>
#include <cstdint>

#include "triobs/geometry.hpp"
#include "triobs/region.hpp"

// Counter-based random numbers: every draw is a pure function of
// (seed, stream, counter), so Monte-Carlo loops can be partitioned across
// workers in any order without changing the sampled sequence.

namespace triobs {

namespace detail {
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}
}  // namespace detail

class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
      : base_(detail::splitmix64(seed ^ (0xa5a5a5a5a5a5a5a5ULL + stream * 0x9e3779b97f4a7c15ULL))) {}

  std::uint64_t bits(std::uint64_t counter) const {
    return detail::splitmix64(base_ ^ (counter * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL));
  }

  // uniform in [0,1)
  double uniform(std::uint64_t counter) const {
    return static_cast<double>(bits(counter) >> 11) * 0x1.0p-53;
  }

  double uniform(std::uint64_t counter, double lo, double hi) const {
    return lo + (hi - lo) * uniform(counter);
  }

  // standard normal via Box-Muller; one deviate per counter
  double normal(std::uint64_t counter) const {
    double u1 = uniform(2 * counter);
    double u2 = uniform(2 * counter + 1);
    if (u1 < 0x1.0p-60) u1 = 0x1.0p-60;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
  }

  Point2 point_in_box(std::uint64_t counter, Point2 lo, Point2 hi) const {
    return {uniform(2 * counter, lo.x1, hi.x1), uniform(2 * counter + 1, lo.x2, hi.x2)};
  }

 private:
  std::uint64_t base_;
};

// Rejection sampling from the bounding box of `region`; deterministic in
// (rng, counter).  The acceptance rate for the triangle is about 1/2.
Point2 sample_region(const CounterRng& rng, const Region& region, std::uint64_t counter);

}  // namespace triobs

#endif  // TRIOBS_RNG_HPP_
