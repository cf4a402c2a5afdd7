#pragma once

#include <string>
#include <vector>

#include "meshfield/vec3.hpp"

namespace meshfield {

// Render target / image container. Row-major RGB, channels clamped to [0,1]
// on write.
struct ImageBuffer {
  int width = 0;
  int height = 0;
  std::vector<float> pixels;  // width*height*3

  ImageBuffer() = default;
  ImageBuffer(int w, int h) : width(w), height(h), pixels(static_cast<std::size_t>(w) * h * 3, 0.0f) {}

  void set(int x, int y, const Rgb& c) {
    Rgb v = clamp01(c);
    std::size_t i = (static_cast<std::size_t>(y) * width + x) * 3;
    pixels[i] = static_cast<float>(v.x);
    pixels[i + 1] = static_cast<float>(v.y);
    pixels[i + 2] = static_cast<float>(v.z);
  }
  Rgb get(int x, int y) const {
    std::size_t i = (static_cast<std::size_t>(y) * width + x) * 3;
    return {pixels[i], pixels[i + 1], pixels[i + 2]};
  }
};

// PNG (8-bit RGB; RGBA input accepted, alpha dropped) or PPM (P6, maxval
// 255), chosen by file extension on write and by magic bytes on read.
// Values quantize to 8 bits, so write-then-read matches the original to
// 1/255 per channel.
void write_image(const ImageBuffer& buffer, const std::string& path);
ImageBuffer read_image(const std::string& path);

}  // namespace meshfield
