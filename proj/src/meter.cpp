#include "brainb/meter.hpp"

#include "brainb/errors.hpp"

namespace brainb {

ComplexityMeter make_meter(const SessionConfig& config) {
  ComplexityMeter meter;
  meter.window_w = config.window_w;
  meter.window_h = config.window_h;
  return meter;
}

std::int64_t measure(ComplexityMeter& meter, Bitmap crop, const SessionConfig& config) {
  if (crop.width != meter.window_w || crop.height != meter.window_h) {
    throw UsageError("measure: crop is " + std::to_string(crop.width) + "x" +
                     std::to_string(crop.height) + ", meter window is " +
                     std::to_string(meter.window_w) + "x" + std::to_string(meter.window_h));
  }
  const std::int64_t changed = meter.prev_crop
                                   ? count_changed(*meter.prev_crop, crop)
                                   : count_changed(Bitmap(crop.width, crop.height), crop);
  meter.last_changed = changed;
  meter.bps = changed * config.bits_per_changed_pixel * 1000 / config.tick_ms;
  meter.prev_crop = std::move(crop);
  return meter.bps;
}

}  // namespace brainb
