#include "railsight/image.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace railsight {

ImageBuffer::ImageBuffer(int width, int height, Channels ch, uint8_t fill)
    : width_(width), height_(height), channels_(ch),
      pixels_(static_cast<size_t>(width) * height * static_cast<int>(ch), fill) {
    if (width < 1 || height < 1) throw std::invalid_argument("ImageBuffer: dimensions must be >= 1");
}

ImageBuffer::ImageBuffer(int width, int height, Channels ch, std::vector<uint8_t> pixels)
    : width_(width), height_(height), channels_(ch), pixels_(std::move(pixels)) {
    if (width < 1 || height < 1) throw std::invalid_argument("ImageBuffer: dimensions must be >= 1");
    if (pixels_.size() != static_cast<size_t>(width) * height * static_cast<int>(ch))
        throw std::invalid_argument("ImageBuffer: pixel count does not match dimensions");
}

ImageBuffer ImageBuffer::crop(const RectI& r) const {
    const RectI c = r.clamped(width_, height_);
    if (c.empty()) throw std::invalid_argument("ImageBuffer::crop: empty rectangle");
    ImageBuffer out(c.width(), c.height(), channels_);
    const int nc = channel_count();
    for (int y = c.y0; y < c.y1; ++y) {
        const uint8_t* src = pixels_.data() + (static_cast<size_t>(y) * width_ + c.x0) * nc;
        uint8_t* dst = out.pixels_.data() + static_cast<size_t>(y - c.y0) * c.width() * nc;
        std::copy(src, src + static_cast<size_t>(c.width()) * nc, dst);
    }
    return out;
}

size_t EdgeMap::count() const {
    return static_cast<size_t>(std::count(bits.begin(), bits.end(), uint8_t(1)));
}

void FilterParams::validate() const {
    if (!(log_sigma > 0.0)) throw std::invalid_argument("FilterParams: log_sigma must be > 0");
    if (!(0 < canny_low && canny_low < canny_high && canny_high <= 255))
        throw std::invalid_argument("FilterParams: need 0 < low < high <= 255");
}

ImageBuffer to_grayscale(const ImageBuffer& img) {
    if (img.channels() == Channels::Gray8) return img;
    ImageBuffer out(img.width(), img.height(), Channels::Gray8);
    const size_t n = static_cast<size_t>(img.width()) * img.height();
    const uint8_t* src = img.pixels().data();
    uint8_t* dst = out.pixels().data();
    for (size_t i = 0; i < n; ++i) {
        const double luma = 0.299 * src[3 * i] + 0.587 * src[3 * i + 1] + 0.114 * src[3 * i + 2];
        dst[i] = static_cast<uint8_t>(std::clamp<long>(std::lround(luma), 0, 255));
    }
    return out;
}

std::vector<double> log_kernel(double sigma, int& radius_out) {
    if (!(sigma > 0.0)) throw std::invalid_argument("log_kernel: sigma must be > 0");
    const int radius = static_cast<int>(std::ceil(3.0 * sigma));
    const int size = 2 * radius + 1;
    std::vector<double> k(static_cast<size_t>(size) * size);
    const double s2 = sigma * sigma;
    const double s4 = s2 * s2;
    for (int dy = -radius; dy <= radius; ++dy) {
        for (int dx = -radius; dx <= radius; ++dx) {
            const double r2 = double(dx) * dx + double(dy) * dy;
            k[static_cast<size_t>(dy + radius) * size + (dx + radius)] =
                (r2 - 2.0 * s2) / s4 * std::exp(-r2 / (2.0 * s2));
        }
    }
    // Zero-mean so a constant image produces a (numerically) zero response.
    const double mean = std::accumulate(k.begin(), k.end(), 0.0) / double(k.size());
    for (double& v : k) v -= mean;
    radius_out = radius;
    return k;
}

std::vector<double> mexican_hat_filter(const ImageBuffer& gray, double sigma) {
    if (gray.channels() != Channels::Gray8)
        throw std::invalid_argument("mexican_hat_filter: expects a grayscale image");
    int radius = 0;
    const std::vector<double> k = log_kernel(sigma, radius);
    const int size = 2 * radius + 1;
    const int w = gray.width(), h = gray.height();
    std::vector<double> out(static_cast<size_t>(w) * h, 0.0);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            double acc = 0.0;
            for (int dy = -radius; dy <= radius; ++dy) {
                const double* krow = k.data() + static_cast<size_t>(dy + radius) * size;
                for (int dx = -radius; dx <= radius; ++dx) {
                    acc += krow[dx + radius] * gray.at_clamped(x + dx, y + dy);
                }
            }
            out[static_cast<size_t>(y) * w + x] = acc;
        }
    }
    return out;
}

ImageBuffer rescale_to_u8(const std::vector<double>& response, int width, int height) {
    if (response.size() != static_cast<size_t>(width) * height)
        throw std::invalid_argument("rescale_to_u8: size mismatch");
    const auto [mn_it, mx_it] = std::minmax_element(response.begin(), response.end());
    const double mn = *mn_it, mx = *mx_it;
    ImageBuffer out(width, height, Channels::Gray8);
    if (!(mx > mn)) return out;  // flat response -> all zeros
    const double scale = 255.0 / (mx - mn);
    for (size_t i = 0; i < response.size(); ++i) {
        out.pixels()[i] =
            static_cast<uint8_t>(std::clamp<long>(std::lround((response[i] - mn) * scale), 0, 255));
    }
    return out;
}

namespace {

// Gradient direction quantized to 4 bins. With integer Sobel responses the
// bin boundaries (odd multiples of 22.5 deg) are never hit exactly, so the
// binning commutes with horizontal flips (gx -> -gx swaps bins 1 and 3).
int quantize_direction(double gx, double gy) {
    constexpr double kPi = 3.14159265358979323846;
    double ang = std::atan2(gy, gx) * 180.0 / kPi;  // (-180, 180]
    if (ang < 0) ang += 180.0;                      // direction is mod 180
    if (ang < 22.5 || ang >= 157.5) return 0;       // horizontal gradient, vertical edge
    if (ang < 67.5) return 1;                       // 45 deg
    if (ang < 112.5) return 2;                      // vertical gradient
    return 3;                                       // 135 deg
}

}  // namespace

EdgeMap canny(const ImageBuffer& gray, const FilterParams& params) {
    params.validate();
    if (gray.channels() != Channels::Gray8)
        throw std::invalid_argument("canny: expects a grayscale image");
    const int w = gray.width(), h = gray.height();

    // 3x3 Sobel with replicated border.
    std::vector<double> mag(static_cast<size_t>(w) * h);
    std::vector<uint8_t> dir(static_cast<size_t>(w) * h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const int p00 = gray.at_clamped(x - 1, y - 1), p10 = gray.at_clamped(x, y - 1),
                      p20 = gray.at_clamped(x + 1, y - 1);
            const int p01 = gray.at_clamped(x - 1, y), p21 = gray.at_clamped(x + 1, y);
            const int p02 = gray.at_clamped(x - 1, y + 1), p12 = gray.at_clamped(x, y + 1),
                      p22 = gray.at_clamped(x + 1, y + 1);
            const int gx = (p20 + 2 * p21 + p22) - (p00 + 2 * p01 + p02);
            const int gy = (p02 + 2 * p12 + p22) - (p00 + 2 * p10 + p20);
            const size_t i = static_cast<size_t>(y) * w + x;
            mag[i] = std::sqrt(double(gx) * gx + double(gy) * gy);
            dir[i] = (gx == 0 && gy == 0) ? 0 : static_cast<uint8_t>(quantize_direction(gx, gy));
        }
    }

    auto mag_at = [&](int x, int y) -> double {
        if (x < 0 || x >= w || y < 0 || y >= h) return 0.0;
        return mag[static_cast<size_t>(y) * w + x];
    };

    // NMS, then double threshold: 2 = strong, 1 = weak candidate.
    static constexpr int kNbr[4][2][2] = {
        {{-1, 0}, {1, 0}},    // bin 0: horizontal gradient
        {{-1, -1}, {1, 1}},   // bin 1
        {{0, -1}, {0, 1}},    // bin 2: vertical gradient
        {{-1, 1}, {1, -1}},   // bin 3
    };
    std::vector<uint8_t> state(static_cast<size_t>(w) * h, 0);
    std::vector<size_t> stack;
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const size_t i = static_cast<size_t>(y) * w + x;
            const double m = mag[i];
            if (m < params.canny_low) continue;
            const auto& nb = kNbr[dir[i]];
            if (m < mag_at(x + nb[0][0], y + nb[0][1])) continue;
            if (m < mag_at(x + nb[1][0], y + nb[1][1])) continue;
            if (m >= params.canny_high) {
                state[i] = 2;
                stack.push_back(i);
            } else {
                state[i] = 1;
            }
        }
    }

    // Hysteresis: grow from strong pixels through 8-connected weak ones.
    EdgeMap edges(w, h);
    while (!stack.empty()) {
        const size_t i = stack.back();
        stack.pop_back();
        edges.bits[i] = 1;
        const int x = static_cast<int>(i % w), y = static_cast<int>(i / w);
        for (int dy = -1; dy <= 1; ++dy) {
            for (int dx = -1; dx <= 1; ++dx) {
                const int nx = x + dx, ny = y + dy;
                if (nx < 0 || nx >= w || ny < 0 || ny >= h) continue;
                const size_t j = static_cast<size_t>(ny) * w + nx;
                if (state[j] == 1) {
                    state[j] = 2;
                    stack.push_back(j);
                }
            }
        }
    }
    return edges;
}

ImageBuffer flip_horizontal(const ImageBuffer& img) {
    ImageBuffer out(img.width(), img.height(), img.channels());
    const int nc = img.channel_count();
    for (int y = 0; y < img.height(); ++y) {
        for (int x = 0; x < img.width(); ++x) {
            for (int c = 0; c < nc; ++c) out.set(img.width() - 1 - x, y, c, img.at(x, y, c));
        }
    }
    return out;
}

EdgeMap flip_horizontal(const EdgeMap& edges) {
    EdgeMap out(edges.width, edges.height);
    for (int y = 0; y < edges.height; ++y)
        for (int x = 0; x < edges.width; ++x)
            out.set(edges.width - 1 - x, y, edges.at(x, y));
    return out;
}

ImageBuffer adjust_brightness(const ImageBuffer& img, double factor) {
    if (!(factor > 0.0)) throw std::invalid_argument("adjust_brightness: factor must be > 0");
    ImageBuffer out = img;
    for (uint8_t& v : out.pixels())
        v = static_cast<uint8_t>(std::clamp<long>(std::lround(v * factor), 0, 255));
    return out;
}

}  // namespace railsight
