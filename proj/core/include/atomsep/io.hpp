#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "atomsep/estimator.hpp"

namespace atomsep {

// CSV interchange: header line `delta_over_gamma,intensity`, one row per
// sample, shortest round-trip number formatting.
void write_trace_csv(std::ostream& out, const SpectrumTrace& trace);
SpectrumTrace read_trace_csv(std::istream& in);

nlohmann::json config_to_json(const SystemConfig& config);
SystemConfig config_from_json(const nlohmann::json& j);

// Trace JSON embeds the configuration (bit-exact round trip), grid, engine
// tag, and elastic weights as re/im pairs.
nlohmann::json trace_to_json(const SpectrumTrace& trace);
SpectrumTrace trace_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const MeasurementReport& report);

// Debug dump of the generator and its steady state, row-major entries as
// {"re": ..., "im": ...} in the {gg, ge, eg, ee} ordering.
nlohmann::json operator_dump_json(const SystemConfig& config);

// Shortest round-trip decimal form of a double.
std::string format_double(double v);

}  // namespace atomsep
