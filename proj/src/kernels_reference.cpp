#include "brainb/errors.hpp"
#include "brainb/kernels.hpp"

namespace brainb::reference {

Bitmap rasterize(const WorldState& world) {
  Bitmap frame(world.width, world.height);
  for (const auto& box : world.boxes) {
    for (int y = box.top(); y < box.bottom(); ++y) {
      for (int x = box.left(); x < box.right(); ++x) {
        if (x >= 0 && x < frame.width && y >= 0 && y < frame.height) frame.at(x, y) = box.color_index;
      }
    }
  }
  return frame;
}

Bitmap crop_window(const Bitmap& frame, PixelPoint center, int window_w, int window_h) {
  Bitmap crop(window_w, window_h);
  const int x0 = center.x - window_w / 2;
  const int y0 = center.y - window_h / 2;
  for (int row = 0; row < window_h; ++row) {
    for (int col = 0; col < window_w; ++col) {
      const int x = x0 + col;
      const int y = y0 + row;
      if (x >= 0 && x < frame.width && y >= 0 && y < frame.height) crop.at(col, row) = frame.at(x, y);
    }
  }
  return crop;
}

Bitmap rasterize_window(const WorldState& world, PixelPoint center, int window_w, int window_h) {
  return reference::crop_window(reference::rasterize(world), center, window_w, window_h);
}

std::int64_t count_changed(const Bitmap& a, const Bitmap& b) {
  if (a.width != b.width || a.height != b.height) {
    throw UsageError("count_changed: bitmap dimensions differ");
  }
  std::int64_t changed = 0;
  for (std::size_t i = 0; i < a.pixels.size(); ++i) {
    if (a.pixels[i] != b.pixels[i]) ++changed;
  }
  return changed;
}

}  // namespace brainb::reference
