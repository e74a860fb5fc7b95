#pragma once

#include <lipcap/curve.hpp>

#include <string>
#include <vector>

namespace lipcap {

struct RerouteArc {
    std::string kind;  // "ball-arc", "approach", "copy"
    double length = 0.0;
};

struct SpliceRecord {
    Point site;
    double zeta = 0.0;  // parameter of the site on the pre-splice curve
    double gap_witness = 0.0;
    double ball_radius = 0.0;
    double copy_scale = 0.0;
    std::vector<RerouteArc> reroutes;
    double removed_length = 0.0;
    double length_delta = 0.0;
};

// greedy scan keeping indices whose excision balls miss all kept balls
std::vector<size_t> select_disjoint_subsequence(const Point& x, const std::vector<Point>& ys,
                                                const std::vector<Point>& sites, double lambda);

struct SpliceResult {
    CaptureCertificate capture;
    std::vector<SpliceRecord> records;
};

// cuts a ball around one gap site per retained companion and reroutes the
// severed strands, sending the site strand through a scaled copy of H
SpliceResult splice(const CaptureCertificate& G, const DiscreteSet& K, const Point& x,
                    const std::vector<Point>& ys, const PolylineCurve& H, double lambda,
                    double delta);

}  // namespace lipcap
