#pragma once

#include <string>
#include <vector>

#include "lipcap/curve.hpp"
#include "lipcap/hcurve.hpp"
#include "lipcap/splice.hpp"
#include "lipcap/tangent.hpp"
#include "lipcap/targets.hpp"

namespace lipcap {

struct WitnessReport {
    size_t stage = 0;
    Point anchor;     // processed net point
    Point basepoint;  // splice site reused at every scale
    std::string target;
    ConvergenceProfile profile;
    bool passed = false;
};

struct StageAudit {
    size_t stage = 0;
    Point center;
    double radius = 0.0;
    double budget = 0.0;
    double spent = 0.0;
    double max_change_dist = 0.0;  // farthest rewritten vertex from the center
    bool localized = false;
    std::vector<SpliceRecord> records;
};

struct PipelineState {
    double lambda_estimate = 0.0;
    double lambda_used = 0.0;
    double delta_total = 0.0;
    double delta_spent = 0.0;
    std::vector<StageAudit> stages;
    std::vector<WitnessReport> witnesses;
    double semicontinuity_margin = 0.0;
    double final_gap = 0.0;
    bool success = false;
    std::string failure;      // empty when the run is clean
    size_t failed_stage = 0;  // 0 unless a stage aborted
};

struct PipelineResult {
    CaptureCertificate capture;
    PipelineState state;
};

// recursive capture: base tour, then one splice pass per stage at
// farthest-point centers, finishing with witness verification on the result
PipelineResult theorem_pipeline(const DiscreteSet& K, int stages, double delta,
                                const TargetLibrary& lib);

}  // namespace lipcap
