#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "railsight/geometry.hpp"

namespace railsight {

enum class Channels : uint8_t { Gray8 = 1, Rgb8 = 3 };

/// Row-major 8-bit raster, grayscale or RGB interleaved.
class ImageBuffer {
public:
    ImageBuffer() = default;
    ImageBuffer(int width, int height, Channels ch, uint8_t fill = 0);
    ImageBuffer(int width, int height, Channels ch, std::vector<uint8_t> pixels);

    int width() const { return width_; }
    int height() const { return height_; }
    Channels channels() const { return channels_; }
    int channel_count() const { return static_cast<int>(channels_); }

    const std::vector<uint8_t>& pixels() const { return pixels_; }
    std::vector<uint8_t>& pixels() { return pixels_; }

    uint8_t at(int x, int y, int c = 0) const {
        return pixels_[(static_cast<size_t>(y) * width_ + x) * channel_count() + c];
    }
    void set(int x, int y, int c, uint8_t v) {
        pixels_[(static_cast<size_t>(y) * width_ + x) * channel_count() + c] = v;
    }
    /// Clamped fetch: out-of-range coordinates replicate the nearest edge pixel.
    uint8_t at_clamped(int x, int y, int c = 0) const {
        if (x < 0) x = 0;
        if (x >= width_) x = width_ - 1;
        if (y < 0) y = 0;
        if (y >= height_) y = height_ - 1;
        return at(x, y, c);
    }

    ImageBuffer crop(const RectI& r) const;

    bool operator==(const ImageBuffer&) const = default;

private:
    int width_ = 0;
    int height_ = 0;
    Channels channels_ = Channels::Gray8;
    std::vector<uint8_t> pixels_;
};

/// One boolean per pixel, true = edge. Dimensions match the source image.
struct EdgeMap {
    int width = 0;
    int height = 0;
    std::vector<uint8_t> bits;  // 0 or 1

    EdgeMap() = default;
    EdgeMap(int w, int h) : width(w), height(h), bits(static_cast<size_t>(w) * h, 0) {}

    bool at(int x, int y) const { return bits[static_cast<size_t>(y) * width + x] != 0; }
    void set(int x, int y, bool v) { bits[static_cast<size_t>(y) * width + x] = v ? 1 : 0; }
    size_t count() const;

    bool operator==(const EdgeMap&) const = default;
};

struct FilterParams {
    double log_sigma = 1.4;  // Mexican-hat scale, pixels
    int canny_low = 50;      // gradient-magnitude thresholds, [0,255] scale
    int canny_high = 150;

    void validate() const;
};

ImageBuffer to_grayscale(const ImageBuffer& img);

/// Laplacian-of-Gaussian (Mexican hat) kernel of scale sigma.
/// Radius = ceil(3*sigma); entries are mean-subtracted so they sum to zero.
std::vector<double> log_kernel(double sigma, int& radius_out);

/// Convolve with the LoG kernel; border handled by edge replication.
/// Output is the signed response, not clamped, same dimensions as the input.
std::vector<double> mexican_hat_filter(const ImageBuffer& gray, double sigma);

/// Affine min-max map of a signed response raster onto [0,255].
/// A flat raster (max == min) maps to all zeros.
ImageBuffer rescale_to_u8(const std::vector<double>& response, int width, int height);

/// Canny edge detector:
///   3x3 Sobel (replicated border), L2 gradient magnitude,
///   non-maximum suppression with direction quantized to 4 bins
///   (kept when magnitude >= both neighbors along the gradient;
///   out-of-image neighbors count as magnitude 0),
///   double threshold (strong: mag >= high, weak: mag >= low),
///   hysteresis linking weak pixels 8-connected to a strong pixel.
/// The non-strict NMS comparison is symmetric, so the edge map of a
/// horizontally flipped image is exactly the flipped edge map.
EdgeMap canny(const ImageBuffer& gray, const FilterParams& params);

ImageBuffer flip_horizontal(const ImageBuffer& img);
EdgeMap flip_horizontal(const EdgeMap& edges);

/// Per-channel scaling: clamp(round(value * factor), 0, 255). factor must be > 0.
ImageBuffer adjust_brightness(const ImageBuffer& img, double factor);

}  // namespace railsight
