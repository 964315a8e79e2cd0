#include "railsight/hough.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace railsight {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Grid {
    int n_theta;     // number of theta bins
    int m_lo;        // theta index of the first bin (theta = m_lo * delta)
    double delta;    // theta step
    int n_half;      // rho bins span [-n_half, n_half]
    double cx;       // horizontal center used as rho reference
    std::vector<double> cos_t, sin_t;  // per bin, built from |m| so negation is exact

    Grid(int width, int height, const HoughParams& p) {
        n_theta = std::max(1, static_cast<int>(std::llround(kPi / p.theta_res)));
        delta = kPi / n_theta;
        m_lo = -(n_theta / 2);
        cx = (width - 1) / 2.0;
        const double max_r = std::hypot((width - 1) / 2.0, double(height - 1));
        n_half = static_cast<int>(std::ceil(max_r / p.rho_res)) + 2;
        cos_t.resize(n_theta);
        sin_t.resize(n_theta);
        for (int i = 0; i < n_theta; ++i) {
            const int m = m_lo + i;
            const double a = std::abs(m) * delta;
            cos_t[i] = std::cos(a);
            sin_t[i] = (m < 0) ? -std::sin(a) : std::sin(a);
        }
    }

    double theta_of(int m) const {
        const double a = std::abs(m) * delta;
        return (m < 0) ? -a : a;
    }
    int n_rho() const { return 2 * n_half + 1; }
};

}  // namespace

void HoughParams::validate() const {
    if (!(rho_res > 0.0)) throw std::invalid_argument("HoughParams: rho_res must be > 0");
    if (!(theta_res > 0.0)) throw std::invalid_argument("HoughParams: theta_res must be > 0");
    if (!(vote_frac > 0.0 && vote_frac <= 1.0))
        throw std::invalid_argument("HoughParams: vote_frac must be in (0,1]");
}

std::vector<HoughLine> hough_lines(const EdgeMap& edges, const HoughParams& params) {
    params.validate();
    const Grid g(edges.width, edges.height, params);
    const int n_rho = g.n_rho();

    std::vector<int> acc(static_cast<size_t>(g.n_theta) * n_rho, 0);
    int global_max = 0;
    for (int y = 0; y < edges.height; ++y) {
        for (int x = 0; x < edges.width; ++x) {
            if (!edges.at(x, y)) continue;
            const double xc = x - g.cx;
            for (int i = 0; i < g.n_theta; ++i) {
                const double t = xc * g.cos_t[i] + y * g.sin_t[i];
                const int j = g.n_half + static_cast<int>(std::llround(t / params.rho_res));
                const int v = ++acc[static_cast<size_t>(i) * n_rho + j];
                if (v > global_max) global_max = v;
            }
        }
    }
    if (global_max == 0) return {};

    // Cyclic lookup: wrapping theta by a half turn mirrors rho.
    auto votes_at = [&](int i, int j) -> int {
        while (i < 0) {
            i += g.n_theta;
            j = 2 * g.n_half - j;
        }
        while (i >= g.n_theta) {
            i -= g.n_theta;
            j = 2 * g.n_half - j;
        }
        if (j < 0 || j >= n_rho) return 0;
        return acc[static_cast<size_t>(i) * n_rho + j];
    };

    std::vector<HoughLine> out;
    for (int i = 0; i < g.n_theta; ++i) {
        for (int j = 0; j < n_rho; ++j) {
            const int v = acc[static_cast<size_t>(i) * n_rho + j];
            if (v < 1 || double(v) < params.vote_frac * global_max) continue;
            bool peak = true;
            for (int di = -2; di <= 2 && peak; ++di) {
                for (int dj = -2; dj <= 2; ++dj) {
                    if (di == 0 && dj == 0) continue;
                    if (votes_at(i + di, j + dj) > v) {
                        peak = false;
                        break;
                    }
                }
            }
            if (!peak) continue;
            const int m = g.m_lo + i;
            const double u = g.cx * g.cos_t[i];
            const double rho_c = double(j - g.n_half) * params.rho_res;
            out.push_back(HoughLine{rho_c + u, g.theta_of(m), v});
        }
    }
    std::sort(out.begin(), out.end(), [](const HoughLine& a, const HoughLine& b) {
        if (a.votes != b.votes) return a.votes > b.votes;
        if (a.theta != b.theta) return a.theta < b.theta;
        return a.rho < b.rho;
    });
    return out;
}

HoughLine flip_line(const HoughLine& line, int width, int height, const HoughParams& params) {
    params.validate();
    const Grid g(width, height, params);
    const int m = static_cast<int>(std::llround(line.theta / g.delta));
    const double u = g.cx * std::cos(std::abs(m) * g.delta);
    const int r = static_cast<int>(std::llround((line.rho - u) / params.rho_res));

    // theta -> -theta; a half-turn wrap back into range mirrors rho again.
    int m2 = -m;
    int r2 = -r;
    const int m_hi = g.m_lo + g.n_theta - 1;
    while (m2 > m_hi) {
        m2 -= g.n_theta;
        r2 = -r2;
    }
    const double u2 = g.cx * std::cos(std::abs(m2) * g.delta);
    return HoughLine{double(r2) * params.rho_res + u2, g.theta_of(m2), line.votes};
}

}  // namespace railsight
