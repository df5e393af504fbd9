#pragma once

#include <cstdint>
#include <optional>

#include "brainb/kernels.hpp"

namespace brainb {

// Changed-pixel complexity of the window around the hero, in bits per second.
struct ComplexityMeter {
  int window_w = 256;
  int window_h = 256;
  std::optional<Bitmap> prev_crop;  // absent until the first measurement
  std::int64_t last_changed = 0;
  std::int64_t bps = 0;

  bool operator==(const ComplexityMeter&) const = default;
};

ComplexityMeter make_meter(const SessionConfig& config);

// bps = changed * (1000 / tick_ms) * bits_per_changed_pixel, where the first
// call compares against an all-background crop. Replaces prev_crop with `crop`.
// UsageError when the crop is not window_w x window_h.
std::int64_t measure(ComplexityMeter& meter, Bitmap crop, const SessionConfig& config);

}  // namespace brainb
