#pragma once

#include <lipcap/geometry.hpp>

#include <string>
#include <vector>

namespace lipcap {

// finite stand-in for a closed set clipped to the closed ball B(0, R)
class TruncatedClosedSet {
  public:
    TruncatedClosedSet(DiscreteSet base, double truncation_radius, bool contains_origin);

    const DiscreteSet& base() const { return base_; }
    double truncation_radius() const { return radius_; }
    bool contains_origin() const { return contains_origin_; }

  private:
    DiscreteSet base_;
    double radius_;
    bool contains_origin_;
};

class ScaleSchedule {
  public:
    explicit ScaleSchedule(std::vector<double> scales, std::string law = "");

    const std::vector<double>& scales() const { return scales_; }
    const std::string& law() const { return law_; }
    double finest() const { return scales_.back(); }

  private:
    std::vector<double> scales_;
    std::string law_;
};

// base, base*ratio, base*ratio^2, ... (count entries), 0 < ratio < 1
ScaleSchedule geometric_schedule(double base, double ratio, int count);

struct ProfileRow {
    double scale = 0.0;
    Point basepoint;
    double discrepancy = 0.0;
};

struct ConvergenceProfile {
    std::vector<ProfileRow> rows;
    double radius = 0.0;
    double tolerance = 0.0;
    bool verdict = false;
};

// rescaled view (K - x)/r clipped to B(0, R); x must sit on K up to resolution
TruncatedClosedSet blowup(const DiscreteSet& K, const Point& x, double r, double R);

// discrepancy of each blowup against T along the schedule; verdict judges the final scale
ConvergenceProfile approximates_tangent(const DiscreteSet& K, const Point& x,
                                        const ScaleSchedule& s, const TruncatedClosedSet& T,
                                        double tol);

// like approximates_tangent but each scale uses its own basepoint drifting toward x
ConvergenceProfile pseudotangent_witness(const DiscreteSet& K, const Point& x,
                                         const std::vector<Point>& basepoints,
                                         const ScaleSchedule& s, const TruncatedClosedSet& T,
                                         double tol);

// true when every 3-resolution graph component reaches radius R - 3*resolution
bool unbounded_components_check(const TruncatedClosedSet& T);

}  // namespace lipcap
