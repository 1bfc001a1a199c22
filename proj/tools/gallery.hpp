#pragma once

#include "resavg/json_io.hpp"

namespace resavg {

/// Recomputes the worked-example regression set (seed 0 everywhere).
/// Deterministic: two consecutive runs serialize byte-identically.
json buildGallery();

}  // namespace resavg
