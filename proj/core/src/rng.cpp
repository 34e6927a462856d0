#include "frz/rng.hpp"

namespace frz {

DenseSet sample_set(const GroupParams& g, const CounterRng& rng, double density, std::uint64_t first) {
  DenseSet out(g);
  for (std::uint64_t x = 0; x < g.size(); ++x) {
    if (rng.uniform(first + x) < density) out.insert(Point{static_cast<Index>(x)});
  }
  return out;
}

}  // namespace frz
