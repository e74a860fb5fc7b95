#pragma once

#include <string>
#include <vector>

#include "lipcap/curve.hpp"
#include "lipcap/disconnect.hpp"
#include "lipcap/fractals.hpp"
#include "lipcap/geometry.hpp"
#include "lipcap/hcurve.hpp"
#include "lipcap/pipeline.hpp"
#include "lipcap/tangent.hpp"
#include "lipcap/targets.hpp"

namespace lipcap {

// temp file in the same directory, then rename over the destination
void write_text_atomic(const std::string& path, const std::string& body);
std::string read_text(const std::string& path);

std::string set_to_json(const DiscreteSet& K);
DiscreteSet set_from_json(const std::string& body);

std::string truncated_to_json(const TruncatedClosedSet& T);
TruncatedClosedSet truncated_from_json(const std::string& body);

std::string curve_to_json(const PolylineCurve& g);
PolylineCurve curve_from_json(const std::string& body);

std::string capture_to_json(const CaptureCertificate& c);
CaptureCertificate capture_from_json(const std::string& body);

std::string hcurve_to_json(const HCurve& h);
// accepts either a bare curve file or a full build output
PolylineCurve curve_or_hcurve_from_json(const std::string& body);

std::string report_to_json(const DisconnectionReport& rep);
std::string profile_to_csv(const ConvergenceProfile& p);
std::string records_to_json(const std::vector<SpliceRecord>& recs);
std::string audit_to_json(const PipelineState& state);
std::string stack_to_json(const CantorStack& stack);
std::string comb_to_json(const CombExample& comb);

// polyline plus optional point overlay, first two coordinates only
std::string scene_svg(const PolylineCurve* curve, const DiscreteSet* pts,
                      const std::string& note);

}  // namespace lipcap
