#pragma once

#include <cstdint>
#include <vector>

#include "brainb/world.hpp"

namespace brainb {

// Row-major palette indices.
struct Bitmap {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;

  Bitmap() = default;
  Bitmap(int w, int h, std::uint8_t fill = kBackgroundColor)
      : width(w), height(h), pixels(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), fill) {}

  std::uint8_t at(int x, int y) const { return pixels[index(x, y)]; }
  std::uint8_t& at(int x, int y) { return pixels[index(x, y)]; }

  bool operator==(const Bitmap&) const = default;

 private:
  std::size_t index(int x, int y) const {
    return static_cast<std::size_t>(y) * static_cast<std::size_t>(width) + static_cast<std::size_t>(x);
  }
};

// Pixel loops, parallelised over rows with OpenMP. Every kernel has a serial
// counterpart in brainb::reference that the tests and the benchmark compare against.

// Background, then every box as a filled rectangle in list order.
Bitmap rasterize(const WorldState& world);

// window_w x window_h crop whose top-left is center - (window_w/2, window_h/2).
// Pixels outside the frame read as background.
Bitmap crop_window(const Bitmap& frame, PixelPoint center, int window_w, int window_h);

// Same pixels as crop_window(rasterize(world), ...) without painting the full frame.
Bitmap rasterize_window(const WorldState& world, PixelPoint center, int window_w, int window_h);

// Number of positions where the two bitmaps differ. UsageError on a size mismatch.
std::int64_t count_changed(const Bitmap& a, const Bitmap& b);

namespace reference {

Bitmap rasterize(const WorldState& world);
Bitmap crop_window(const Bitmap& frame, PixelPoint center, int window_w, int window_h);
Bitmap rasterize_window(const WorldState& world, PixelPoint center, int window_w, int window_h);
std::int64_t count_changed(const Bitmap& a, const Bitmap& b);

}  // namespace reference

}  // namespace brainb
