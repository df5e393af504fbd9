#include "brainb/image.hpp"

#include <png.h>

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include "brainb/errors.hpp"

namespace brainb {

std::vector<std::uint8_t> encode_png(const Bitmap& bitmap, const std::vector<Rgb>& palette) {
  if (bitmap.width <= 0 || bitmap.height <= 0) throw UsageError("encode_png: empty bitmap");
  const auto max_index = *std::max_element(bitmap.pixels.begin(), bitmap.pixels.end());
  if (max_index >= palette.size()) {
    throw UsageError("encode_png: palette index " + std::to_string(max_index) + " out of range (" +
                     std::to_string(palette.size()) + " colors)");
  }

  std::vector<std::uint8_t> rgb(bitmap.pixels.size() * 3);
  for (std::size_t i = 0; i < bitmap.pixels.size(); ++i) {
    const Rgb& c = palette[bitmap.pixels[i]];
    rgb[3 * i] = c.r;
    rgb[3 * i + 1] = c.g;
    rgb[3 * i + 2] = c.b;
  }

  png_image image{};
  image.version = PNG_IMAGE_VERSION;
  image.width = static_cast<png_uint_32>(bitmap.width);
  image.height = static_cast<png_uint_32>(bitmap.height);
  image.format = PNG_FORMAT_RGB;

  png_alloc_size_t size = 0;
  if (!png_image_write_to_memory(&image, nullptr, &size, 0, rgb.data(), 0, nullptr)) {
    throw std::runtime_error(std::string("png encode failed: ") + image.message);
  }
  std::vector<std::uint8_t> out(size);
  if (!png_image_write_to_memory(&image, out.data(), &size, 0, rgb.data(), 0, nullptr)) {
    throw std::runtime_error(std::string("png encode failed: ") + image.message);
  }
  out.resize(size);
  return out;
}

void write_final_frame(const Bitmap& bitmap, const std::vector<Rgb>& palette,
                       const std::filesystem::path& path) {
  const auto bytes = encode_png(bitmap, palette);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace brainb
