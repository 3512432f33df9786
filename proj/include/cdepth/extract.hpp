#pragma once

#include "cdepth/depth.hpp"
#include "cdepth/systems.hpp"

namespace cdepth {

/// The vector system of a configuration: one vector per colourful simplex
/// containing the origin.
inline VectorSystem extract_system(const DepthReport& report) { return VectorSystem(report.d, report.simplices); }

inline VectorSystem extract_system(const Configuration& config, unsigned threads = 1) {
  return extract_system(enumerate_depth(config, threads));
}

}  // namespace cdepth
