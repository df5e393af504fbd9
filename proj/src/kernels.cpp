#include "brainb/kernels.hpp"

#include <algorithm>
#include <cstring>

#include "brainb/errors.hpp"

namespace brainb {

namespace {

// Below this many pixels the fork/join overhead outweighs the work.
constexpr std::int64_t kParallelPixels = 1 << 15;

// Paints rows [0, out.height) of the region whose top-left world coordinate is (x0, y0).
void paint_region(const WorldState& world, int x0, int y0, Bitmap& out) {
  const int w = out.width;
  const int h = out.height;
  const int vis_x0 = std::max(x0, 0);
  const int vis_x1 = std::min(x0 + w, world.width);
  const auto* boxes = world.boxes.data();
  const int n = static_cast<int>(world.boxes.size());
  std::uint8_t* base = out.pixels.data();

#pragma omp parallel for schedule(static) if (static_cast<std::int64_t>(w) * h >= kParallelPixels)
  for (int row = 0; row < h; ++row) {
    const int y = y0 + row;
    std::uint8_t* line = base + static_cast<std::ptrdiff_t>(row) * w;
    std::memset(line, kBackgroundColor, static_cast<std::size_t>(w));
    if (y < 0 || y >= world.height) continue;
    for (int i = 0; i < n; ++i) {
      const BoxEntity& box = boxes[i];
      if (y < box.top() || y >= box.bottom()) continue;
      const int from = std::max(box.left(), vis_x0);
      const int to = std::min(box.right(), vis_x1);
      if (from < to) std::memset(line + (from - x0), box.color_index, static_cast<std::size_t>(to - from));
    }
  }
}

}  // namespace

Bitmap rasterize(const WorldState& world) {
  Bitmap frame(world.width, world.height);
  paint_region(world, 0, 0, frame);
  return frame;
}

Bitmap rasterize_window(const WorldState& world, PixelPoint center, int window_w, int window_h) {
  Bitmap crop(window_w, window_h);
  paint_region(world, center.x - window_w / 2, center.y - window_h / 2, crop);
  return crop;
}

Bitmap crop_window(const Bitmap& frame, PixelPoint center, int window_w, int window_h) {
  Bitmap crop(window_w, window_h);
  const int x0 = center.x - window_w / 2;
  const int y0 = center.y - window_h / 2;
  const int from = std::max(x0, 0);
  const int to = std::min(x0 + window_w, frame.width);
  if (from >= to) return crop;

#pragma omp parallel for schedule(static) if (static_cast<std::int64_t>(window_w) * window_h >= kParallelPixels)
  for (int row = 0; row < window_h; ++row) {
    const int y = y0 + row;
    if (y < 0 || y >= frame.height) continue;
    const auto* src = frame.pixels.data() + static_cast<std::ptrdiff_t>(y) * frame.width + from;
    auto* dst = crop.pixels.data() + static_cast<std::ptrdiff_t>(row) * window_w + (from - x0);
    std::memcpy(dst, src, static_cast<std::size_t>(to - from));
  }
  return crop;
}

std::int64_t count_changed(const Bitmap& a, const Bitmap& b) {
  if (a.width != b.width || a.height != b.height) {
    throw UsageError("count_changed: bitmap dimensions differ");
  }
  const auto n = static_cast<std::int64_t>(a.pixels.size());
  const std::uint8_t* pa = a.pixels.data();
  const std::uint8_t* pb = b.pixels.data();
  std::int64_t changed = 0;
#pragma omp parallel for simd reduction(+ : changed) schedule(static) if (n >= kParallelPixels)
  for (std::int64_t i = 0; i < n; ++i) {
    changed += pa[i] != pb[i];
  }
  return changed;
}

}  // namespace brainb
