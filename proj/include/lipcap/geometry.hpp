#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace lipcap {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// bad data handed to us: wrong dimension, non-finite coords, malformed files
struct InvalidInput : Error {
    using Error::Error;
};

// an algorithm could not produce the object it promised
struct ConstructionError : Error {
    using Error::Error;
};

class Point {
public:
    Point() = default;
    explicit Point(std::vector<double> coords);
    Point(std::initializer_list<double> coords);

    int dimension() const { return static_cast<int>(c_.size()); }
    double operator[](int i) const { return c_[static_cast<size_t>(i)]; }
    double& operator[](int i) { return c_[static_cast<size_t>(i)]; }
    const std::vector<double>& coords() const { return c_; }

    Point operator+(const Point& o) const;
    Point operator-(const Point& o) const;
    Point operator*(double s) const;
    bool operator==(const Point& o) const { return c_ == o.c_; }
    bool operator<(const Point& o) const { return c_ < o.c_; }

private:
    std::vector<double> c_;
};

double dist_sq(const Point& a, const Point& b);
double dist(const Point& a, const Point& b);
double norm_sq(const Point& a);
double norm(const Point& a);
double dot(const Point& a, const Point& b);
Point zero_point(int dimension);

// finite point cloud standing in for a compact set, faithful down to `resolution`
class DiscreteSet {
public:
    DiscreteSet(int dimension, double resolution, std::vector<Point> points);

    int dimension() const { return dim_; }
    double resolution() const { return res_; }
    const std::vector<Point>& points() const { return pts_; }
    size_t size() const { return pts_.size(); }
    const Point& operator[](size_t i) const { return pts_[i]; }

    double diameter() const;

private:
    int dim_ = 0;
    double res_ = 0.0;
    std::vector<Point> pts_;
};

}  // namespace lipcap
