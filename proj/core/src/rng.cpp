#include "triobs/rng.hpp"

#include <stdexcept>

namespace triobs {

Point2 sample_region(const CounterRng& rng, const Region& region, std::uint64_t counter) {
  Point2 lo, hi;
  region.bounding_box(lo, hi);
  // fold rejection retries into the counter stream: retry r of draw i uses
  // counter i + r * 2^40, keeping draws independent of partitioning
  for (std::uint64_t retry = 0; retry < 4096; ++retry) {
    Point2 p = rng.point_in_box(counter + (retry << 40), lo, hi);
    if (region.contains(p)) return p;
  }
  throw std::runtime_error("sample_region: rejection sampling failed (empty region?)");
}

}  // namespace triobs
