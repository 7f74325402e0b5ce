#ifndef SCANFILTER_INSTRUMENTATION_HPP
#define SCANFILTER_INSTRUMENTATION_HPP

#include <cstdint>

namespace scanfilter::cost {

// Cheap always-on counters for the filter pipeline. point_touches counts
// reads of scan points (one per point per pass over a scan);
// correlation_element_ops counts arithmetic steps inside the Pearson
// accumulation loop (8 per element: 5 additions, 3 multiplications).
// Thread-local so concurrent streams do not interfere.
struct Counters {
  std::uint64_t point_touches = 0;
  std::uint64_t correlation_element_ops = 0;
};

inline Counters& counters() {
  thread_local Counters c;
  return c;
}

inline void reset() { counters() = Counters{}; }

}  // namespace scanfilter::cost

#endif  // SCANFILTER_INSTRUMENTATION_HPP
