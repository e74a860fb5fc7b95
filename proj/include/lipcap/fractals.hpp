#pragma once

#include <vector>

#include "lipcap/curve.hpp"
#include "lipcap/geometry.hpp"

namespace lipcap {

// endpoints of the depth-level intervals of the k-piece, ratio 1/(k+1)
// self-similar Cantor set in [0,1], exact dyadic-free rationals, ascending
std::vector<double> cantor_abscissas(int k, int depth);

// classic middle-thirds endpoints lifted to the x-axis of the plane
DiscreteSet middle_thirds_net(int depth, double resolution = 1e-9);

struct CantorStack {
    DiscreteSet set;
    std::vector<double> dims;         // log k / log(k+1) for k = 2..kmax
    std::vector<double> covering_c2;  // interval covering lengths of C_2 by level
};

// {0} united with the layers {0}^(d-2) x {1/k} x C_k, C_k squeezed into [0, 1/k^2]
CantorStack example_cantor_stack(int d, int kmax, int depth);

struct CombTooth {
    Point foot;
    Point tip;
    double length = 0.0;
    int stage = 0;
};

struct CombInfo {
    std::vector<double> strokes;  // base first, then teeth in emission order
    double set_length = 0.0;
    double traversal_length = 0.0;
    std::vector<CombTooth> teeth;
};

struct CombExample {
    PolylineCurve curve;
    CombInfo info;
};

// unit base segment with recursively attached teeth, alternating direction
// per stage; the curve walks the base and climbs every tooth there and back
CombExample example_comb(int stages, int teeth);

}  // namespace lipcap
