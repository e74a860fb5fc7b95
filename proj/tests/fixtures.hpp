#pragma once

#include <lipcap/curve.hpp>
#include <lipcap/geometry.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace fixtures {

using lipcap::DiscreteSet;
using lipcap::Point;
using lipcap::PolylineCurve;

inline DiscreteSet segment_net(const Point& a, const Point& b, double step, double res) {
    double len = lipcap::dist(a, b);
    int n = std::max(1, static_cast<int>(std::ceil(len / step)));
    std::vector<Point> pts;
    pts.reserve(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        double u = static_cast<double>(i) / n;
        std::vector<double> c(static_cast<size_t>(a.dimension()));
        for (int k = 0; k < a.dimension(); ++k) c[static_cast<size_t>(k)] = a[k] + u * (b[k] - a[k]);
        pts.emplace_back(std::move(c));
    }
    return DiscreteSet(a.dimension(), res, std::move(pts));
}

// unit circle centered at (1,0), densely sampled where it passes the origin
// so blowups at (0,0) down to scale 1e-3 stay faithful
inline DiscreteSet graded_circle_net() {
    std::vector<Point> pts;
    const double fine_half = 2.5e-3;
    const double fine_step = 4e-7;
    for (double phi = -fine_half; phi <= fine_half; phi += fine_step)
        pts.push_back(Point{1.0 - std::cos(phi), std::sin(phi)});
    const double coarse_step = 0.01;
    for (double phi = fine_half; phi <= 2.0 * 3.14159265358979323846 - fine_half;
         phi += coarse_step)
        pts.push_back(Point{1.0 - std::cos(phi), std::sin(phi)});
    return DiscreteSet(2, 1e-6, std::move(pts));
}

inline double oracle_dist_sq(const Point& a, const Point& b) {
    double s = 0.0;
    for (int i = 0; i < a.dimension(); ++i) {
        double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

inline double oracle_excess(const DiscreteSet& A, const DiscreteSet& B) {
    double worst = 0.0;
    for (const Point& a : A.points()) {
        double best = oracle_dist_sq(a, B[0]);
        for (const Point& b : B.points()) best = std::min(best, oracle_dist_sq(a, b));
        worst = std::max(worst, best);
    }
    return std::sqrt(worst);
}

// all-pairs minimax chain step by Floyd-Warshall on squared weights,
// entirely independent of the spanning-tree route
inline std::vector<std::vector<double>> oracle_minimax_sq(const std::vector<Point>& pts) {
    size_t n = pts.size();
    std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) m[i][j] = oracle_dist_sq(pts[i], pts[j]);
    for (size_t k = 0; k < n; ++k)
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                m[i][j] = std::min(m[i][j], std::max(m[i][k], m[k][j]));
    return m;
}

inline std::vector<Point> random_points(std::mt19937_64& rng, size_t n, int d) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<Point> pts;
    pts.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        std::vector<double> c(static_cast<size_t>(d));
        for (int k = 0; k < d; ++k) c[static_cast<size_t>(k)] = u(rng);
        pts.emplace_back(std::move(c));
    }
    return pts;
}

// every vertex plus interior samples of each edge at the given spacing
inline std::vector<Point> sampled_curve_points(const PolylineCurve& g, double step) {
    std::vector<Point> out;
    const auto& v = g.vertices();
    for (size_t i = 0; i + 1 < v.size(); ++i) {
        double len = lipcap::dist(v[i], v[i + 1]);
        int n = std::max(1, static_cast<int>(std::ceil(len / step)));
        for (int s = 0; s < n; ++s) {
            double u = static_cast<double>(s) / n;
            std::vector<double> c(static_cast<size_t>(g.dimension()));
            for (int k = 0; k < g.dimension(); ++k)
                c[static_cast<size_t>(k)] = v[i][k] + u * (v[i + 1][k] - v[i][k]);
            out.emplace_back(std::move(c));
        }
    }
    out.push_back(v.back());
    return out;
}

}  // namespace fixtures
