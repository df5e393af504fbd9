#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "brainb/config.hpp"
#include "brainb/kernels.hpp"

namespace brainb {

// 8-bit RGB PNG of a palette-indexed bitmap. Throws UsageError if a pixel
// references a missing palette entry (nothing is written) and
// std::runtime_error on encoder or I/O failure.
std::vector<std::uint8_t> encode_png(const Bitmap& bitmap, const std::vector<Rgb>& palette);
void write_final_frame(const Bitmap& bitmap, const std::vector<Rgb>& palette,
                       const std::filesystem::path& path);

}  // namespace brainb
