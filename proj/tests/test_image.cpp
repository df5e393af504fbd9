#include <doctest.h>

#include <png.h>

#include <filesystem>
#include <fstream>
#include <iterator>

#include "brainb/errors.hpp"
#include "brainb/image.hpp"
#include "brainb/rng.hpp"
#include "brainb/world.hpp"
#include "fixtures.hpp"

using namespace brainb;

namespace {

struct Decoded {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> rgb;
};

Decoded decode(const std::vector<std::uint8_t>& png) {
  png_image image{};
  image.version = PNG_IMAGE_VERSION;
  REQUIRE(png_image_begin_read_from_memory(&image, png.data(), png.size()) != 0);
  image.format = PNG_FORMAT_RGB;
  Decoded out;
  out.width = static_cast<int>(image.width);
  out.height = static_cast<int>(image.height);
  out.rgb.resize(PNG_IMAGE_SIZE(image));
  REQUIRE(png_image_finish_read(&image, nullptr, out.rgb.data(), 0, nullptr) != 0);
  return out;
}

void check_pixels(const Bitmap& bitmap, const std::vector<Rgb>& palette, const Decoded& d) {
  REQUIRE(d.width == bitmap.width);
  REQUIRE(d.height == bitmap.height);
  int mismatches = 0;
  for (int y = 0; y < bitmap.height; ++y) {
    for (int x = 0; x < bitmap.width; ++x) {
      const Rgb& c = palette[bitmap.at(x, y)];
      const std::size_t i = 3 * (static_cast<std::size_t>(y) * static_cast<std::size_t>(bitmap.width) +
                                 static_cast<std::size_t>(x));
      mismatches += d.rgb[i] != c.r || d.rgb[i + 1] != c.g || d.rgb[i + 2] != c.b;
    }
  }
  CHECK(mismatches == 0);
}

}  // namespace

TEST_CASE("a 4x4 bitmap decodes to the palette colors") {
  const auto palette = default_palette();
  Bitmap b(4, 4);
  for (int i = 0; i < 16; ++i) b.pixels[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i % palette.size());
  check_pixels(b, palette, decode(encode_png(b, palette)));
}

TEST_CASE("a rendered world decodes pixel for pixel") {
  const auto config = test::small_config();
  Rng rng(7);
  const auto world = spawn_world(config, rng);
  const auto frame = rasterize(world);
  check_pixels(frame, config.palette, decode(encode_png(frame, config.palette)));
}

TEST_CASE("encoding is byte-identical across calls") {
  const auto config = test::small_config();
  Rng rng(11);
  const auto frame = rasterize(spawn_world(config, rng));
  CHECK(encode_png(frame, config.palette) == encode_png(frame, config.palette));
}

TEST_CASE("bad inputs are rejected") {
  const std::vector<Rgb> palette = {{0, 0, 0}, {255, 255, 255}, {1, 2, 3}};
  Bitmap b(3, 3);
  b.at(1, 1) = 3;
  CHECK_THROWS_AS(encode_png(b, palette), UsageError);
  CHECK_THROWS_AS(encode_png(Bitmap{}, palette), UsageError);

  const auto path = std::filesystem::temp_directory_path() / "brainb-image-test-missing.png";
  std::filesystem::remove(path);
  CHECK_THROWS_AS(write_final_frame(b, palette, path), UsageError);
  CHECK_FALSE(std::filesystem::exists(path));
}

TEST_CASE("write_final_frame writes the encoded bytes") {
  const auto palette = default_palette();
  Bitmap b(5, 2, kHeroColor);
  const auto path = std::filesystem::temp_directory_path() / "brainb-image-test.png";
  write_final_frame(b, palette, path);
  std::ifstream in(path, std::ios::binary);
  const std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(bytes == encode_png(b, palette));
  std::filesystem::remove(path);
  CHECK_THROWS_AS(write_final_frame(b, palette, "/nonexistent-dir/x.png"), std::runtime_error);
}
