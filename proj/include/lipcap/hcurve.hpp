#pragma once

#include <lipcap/curve.hpp>
#include <lipcap/targets.hpp>

#include <vector>

namespace lipcap {

struct HCurve {
    PolylineCurve curve;
    DiscreteSet net;
    std::vector<ScaleSchedule> schedules;  // aligned with lib.targets()
    double declared_budget = 0.0;
};

// scale-nested tour of the library targets: copy c at scale 4^(-3c) traces
// target c mod m, deeper copies hang inside the previous copy's cleared core
HCurve build_H(int d, const TargetLibrary& lib, int depth);

// interior vertices of a great-circle arc between two directions, exclusive ends
std::vector<Point> sphere_arc_points(const Point& center, double radius, const Point& from_dir,
                                     const Point& to_dir, double step);

}  // namespace lipcap
