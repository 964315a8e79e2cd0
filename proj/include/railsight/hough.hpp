#pragma once

#include <vector>

#include "railsight/image.hpp"

namespace railsight {

/// Line in normal form: x*cos(theta) + y*sin(theta) = rho, with rho the signed
/// distance from the image origin (top-left) and theta in [-pi/2, pi/2).
struct HoughLine {
    double rho = 0.0;
    double theta = 0.0;
    int votes = 0;

    bool operator==(const HoughLine&) const = default;
};

struct HoughParams {
    double rho_res = 1.0;                          // pixels per rho bin
    double theta_res = 3.14159265358979323846 / 180.0;  // radians per theta bin
    double vote_frac = 0.3;                        // keep peaks with votes >= frac * max

    void validate() const;
};

/// Accumulator line detection.
///
/// Binning contract (fixed for determinism and for the brute-force oracle):
///  - theta bins are integer multiples m*delta, delta = pi / round(pi/theta_res),
///    m in [-(N/2), -(N/2)+N) for N bins; theta_res is adjusted so bins tile
///    [-pi/2, pi/2) exactly.
///  - rho is accumulated relative to the horizontal image center cx = (w-1)/2;
///    bin index = llround(((x-cx)*cos + y*sin) / rho_res), reported rho is
///    converted back to the top-left origin. The centered grid makes the
///    accumulator exactly mirror-symmetric under horizontal flips.
///  - a cell is a peak when its votes are >= every cell of its 5x5 accumulator
///    neighborhood, where theta indices wrap cyclically (a half-turn wrap
///    mirrors the rho index) and rho indices outside the grid count as 0.
///  - peaks with votes >= vote_frac * global maximum are returned, sorted by
///    votes descending, ties by (theta, rho) ascending.
std::vector<HoughLine> hough_lines(const EdgeMap& edges, const HoughParams& params);

/// The image of `line` under a horizontal flip of a width x height frame:
/// theta -> -theta (mod pi), rho mapped accordingly on the same accumulator
/// grid, votes unchanged. hough_lines(flip(E)) equals, line for line, the
/// flip_line image of hough_lines(E).
HoughLine flip_line(const HoughLine& line, int width, int height, const HoughParams& params);

}  // namespace railsight
