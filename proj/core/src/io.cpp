#include "atomsep/io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace atomsep {

using nlohmann::json;

std::string format_double(double v) {
  char buf[32];
  const auto result = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, result.ptr);
}

std::string to_string(Regime regime) {
  switch (regime) {
    case Regime::large: return "large";
    case Regime::intermediate: return "intermediate";
    case Regime::small: return "small";
    case Regime::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

void write_trace_csv(std::ostream& out, const SpectrumTrace& trace) {
  out << "delta_over_gamma,intensity\n";
  for (std::size_t i = 0; i < trace.delta.size(); ++i) {
    out << format_double(trace.delta[i]) << ',' << format_double(trace.values[i]) << '\n';
  }
}

SpectrumTrace read_trace_csv(std::istream& in) {
  SpectrumTrace trace;
  std::string line;
  if (!std::getline(in, line) || line.rfind("delta_over_gamma,intensity", 0) != 0) {
    throw std::domain_error("trace csv: missing delta_over_gamma,intensity header");
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw std::domain_error("trace csv: malformed row: " + line);
    }
    trace.delta.push_back(std::stod(line.substr(0, comma)));
    trace.values.push_back(std::stod(line.substr(comma + 1)));
  }
  trace.engine = "file";
  return trace;
}

json config_to_json(const SystemConfig& config) {
  return json{{"z1", config.z1},
              {"z12", config.z12},
              {"rabi", config.rabi},
              {"phase", config.phase},
              {"detuning", config.detuning},
              {"theta", config.theta},
              {"drive_mode", to_string(config.drive_mode)},
              {"gamma", config.gamma}};
}

SystemConfig config_from_json(const json& j) {
  SystemConfig config;
  config.z1 = j.at("z1").get<double>();
  config.z12 = j.at("z12").get<double>();
  config.rabi = j.at("rabi").get<double>();
  config.phase = j.at("phase").get<double>();
  config.detuning = j.at("detuning").get<double>();
  config.theta = j.at("theta").get<double>();
  config.drive_mode = drive_mode_from_string(j.at("drive_mode").get<std::string>());
  config.gamma = j.at("gamma").get<double>();
  return config;
}

namespace {

json complex_to_json(const Complex& c) {
  return json{{"re", c.real()}, {"im", c.imag()}};
}

Complex complex_from_json(const json& j) {
  return Complex(j.at("re").get<double>(), j.at("im").get<double>());
}

json elastic_to_json(const Eigen::Matrix2cd& w) {
  json rows = json::array();
  for (int i = 0; i < 2; ++i) {
    json row = json::array();
    for (int j = 0; j < 2; ++j) {
      row.push_back(complex_to_json(w(i, j)));
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

json trace_to_json(const SpectrumTrace& trace) {
  json j{{"engine", trace.engine},
         {"resolution", trace.resolution},
         {"delta", trace.delta},
         {"intensity", trace.values},
         {"elastic_weight", elastic_to_json(trace.elastic_weight)},
         {"notes", trace.notes}};
  j["config"] = trace.config ? config_to_json(*trace.config) : json(nullptr);
  return j;
}

SpectrumTrace trace_from_json(const json& j) {
  SpectrumTrace trace;
  trace.engine = j.at("engine").get<std::string>();
  trace.resolution = j.value("resolution", 0.0);
  trace.delta = j.at("delta").get<std::vector<double>>();
  trace.values = j.at("intensity").get<std::vector<double>>();
  if (j.contains("notes")) trace.notes = j.at("notes").get<std::vector<std::string>>();
  if (j.contains("config") && !j.at("config").is_null()) {
    trace.config = config_from_json(j.at("config"));
  }
  if (j.contains("elastic_weight")) {
    const json& w = j.at("elastic_weight");
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) {
        trace.elastic_weight(r, c) = complex_from_json(w.at(r).at(c));
      }
    }
  }
  return trace;
}

namespace {

json value_to_json(const std::optional<ValueWithSigma>& v) {
  if (!v) return json(nullptr);
  return json{{"value", v->value}, {"sigma", v->sigma}};
}

json groups_to_json(const std::vector<SidebandGroup>& groups) {
  json out = json::array();
  for (const SidebandGroup& g : groups) {
    json members = json::array();
    for (const Peak& p : g.members) {
      members.push_back(json{{"position", p.position},
                             {"height", p.height},
                             {"prominence", p.prominence},
                             {"group_id", g.id}});
    }
    out.push_back(json{{"id", g.id},
                       {"center", g.center},
                       {"splitting", g.splitting},
                       {"prominence", g.prominence},
                       {"members", members}});
  }
  return out;
}

}  // namespace

json report_to_json(const MeasurementReport& report) {
  json evidence = json::array();
  for (const EvidenceEntry& e : report.evidence) {
    evidence.push_back(json{{"label", e.label},
                            {"rabi", e.controls.rabi},
                            {"phase", e.controls.phase},
                            {"drive_mode", to_string(e.controls.drive_mode)},
                            {"grid", json{{"start", e.grid_start},
                                          {"stop", e.grid_stop},
                                          {"count", e.grid_count}}},
                            {"resolution", e.resolution},
                            {"features", groups_to_json(e.features)}});
  }
  return json{{"regime", to_string(report.regime)},
              {"z12", value_to_json(report.z12)},
              {"z1", value_to_json(report.z1)},
              {"z2", value_to_json(report.z2)},
              {"evidence", evidence},
              {"notes", report.notes},
              {"success", report.success},
              {"error", report.error.empty() ? json(nullptr) : json(report.error)}};
}

json operator_dump_json(const SystemConfig& config) {
  const LiouvillianMatrix liouvillian = build_liouvillian(config);
  const DensityMatrix rho = steady_state(liouvillian);
  auto matrix_entries = [](const auto& m) {
    json entries = json::array();
    for (int r = 0; r < m.rows(); ++r) {
      for (int c = 0; c < m.cols(); ++c) {
        entries.push_back(complex_to_json(m(r, c)));
      }
    }
    return entries;
  };
  return json{{"config", config_to_json(config)},
              {"basis", {"gg", "ge", "eg", "ee"}},
              {"vectorization", "column-stacked"},
              {"liouvillian", json{{"dim", 16}, {"entries", matrix_entries(liouvillian.matrix)}}},
              {"steady_state", json{{"dim", 4}, {"entries", matrix_entries(rho)}}}};
}

}  // namespace atomsep
