#pragma once

#include <lipcap/tangent.hpp>

#include <string>
#include <utility>
#include <vector>

namespace lipcap {

struct NamedTarget {
    std::string name;
    TruncatedClosedSet set;
};

class TargetLibrary {
  public:
    TargetLibrary(int dimension, double truncation_radius, std::vector<NamedTarget> targets);

    int dimension() const { return dimension_; }
    double truncation_radius() const { return radius_; }
    const std::vector<NamedTarget>& targets() const { return targets_; }
    size_t size() const { return targets_.size(); }

  private:
    int dimension_;
    double radius_;
    std::vector<NamedTarget> targets_;
};

// m canonical members of the unbounded-component family, nets at step 0.005*R
TargetLibrary target_library(int d, double R, int m);

// polyline pieces of one catalog entry before sampling, in units of R
std::vector<std::pair<Point, Point>> catalog_segments(int d, int index);

std::string catalog_name(int index);

}  // namespace lipcap
