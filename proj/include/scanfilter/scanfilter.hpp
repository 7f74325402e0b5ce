#ifndef SCANFILTER_SCANFILTER_HPP
#define SCANFILTER_SCANFILTER_HPP

// Umbrella header for the scan correlation filter library.

#include "scanfilter/bench.hpp"
#include "scanfilter/correlation.hpp"
#include "scanfilter/corridor.hpp"
#include "scanfilter/error.hpp"
#include "scanfilter/filter.hpp"
#include "scanfilter/histogram.hpp"
#include "scanfilter/instrumentation.hpp"
#include "scanfilter/io_log.hpp"
#include "scanfilter/replay.hpp"
#include "scanfilter/scan.hpp"
#include "scanfilter/synth.hpp"

#endif  // SCANFILTER_SCANFILTER_HPP
