#pragma once

#include "lipcap/geometry.hpp"

namespace lipcap {

// sup over a in A of the distance from a to B
double excess(const DiscreteSet& A, const DiscreteSet& B);

// brute-force double loop, kept as a cross-check for the tree-based version
double excess_reference(const DiscreteSet& A, const DiscreteSet& B);

// excess of A clipped to the closed ball of given radius about the origin;
// an empty clip contributes 0, B is never clipped
double truncated_excess(const DiscreteSet& A, const DiscreteSet& B, double radius);

// two-sided truncated excess at the given radius
double aw_discrepancy(const DiscreteSet& A, const DiscreteSet& B, double radius);

double hausdorff(const DiscreteSet& A, const DiscreteSet& B);

// maps K to r^{-1}(K - x), rescaling the resolution to match
DiscreteSet translate_scale(const DiscreteSet& K, const Point& x, double r);

}  // namespace lipcap
