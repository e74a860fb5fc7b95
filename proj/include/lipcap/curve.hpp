#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "lipcap/geometry.hpp"

namespace lipcap {

// piecewise-linear curve with constant-speed parametrization on [0,1];
// the Lipschitz constant of the induced map equals the total length
class PolylineCurve {
public:
    PolylineCurve(int dimension, std::vector<Point> vertices);

    int dimension() const { return dim_; }
    const std::vector<Point>& vertices() const { return verts_; }
    double total_length() const { return cum_.back(); }

    Point evaluate(double t) const;
    double parameter_at_vertex(size_t i) const;
    double cumulative_length(size_t i) const { return cum_[i]; }

private:
    int dim_;
    std::vector<Point> verts_;
    std::vector<double> cum_;
};

double arc_length(const PolylineCurve& curve);
double dist_to_curve(const PolylineCurve& curve, const Point& p);

// parameter range [lo,hi] of |A + u(B-A) - c| <= r within u in [0,1]
std::optional<std::pair<double, double>> segment_ball_overlap(const Point& A, const Point& B,
                                                              const Point& c, double r);

struct CaptureCertificate {
    PolylineCurve curve;
    DiscreteSet captured;
    double coverage = 0.0;
    std::vector<double> parameters;  // one per captured point
};

// curve through every point of K, spanning-tree walk with shortcuts,
// total length at most twice the tree weight
CaptureCertificate base_capture(const DiscreteSet& K);

// nudges t to a segment-interior parameter whose neighborhood meets no
// other part of the curve, so the local length ratio is 1
double density_one_parameter(const PolylineCurve& curve, double t);

struct GapInterval {
    double s = 0.0, t = 0.0, zeta = 0.0;
};

// finds a parameter interval strictly between a and b where the curve leaves
// the epsilon-neighborhood of K with a jump beating lambda times |g(a)-g(b)|;
// equal jumps resolve to the interval farthest from a, so windows sharing the
// a end but differing at b land on distinct intervals
GapInterval gap_interval(const PolylineCurve& g, const DiscreteSet& K, double a, double b,
                         double lambda);

struct CurveLimit {
    PolylineCurve limit;
    double final_gap = 0.0;
    double semicontinuity_margin = 0.0;
};

// last curve as the limit representative, after a Cauchy check at tol and a
// length lower-semicontinuity check against geometrically indistinguishable stages
CurveLimit curve_limit(const std::vector<PolylineCurve>& curves, double tol);

}  // namespace lipcap
