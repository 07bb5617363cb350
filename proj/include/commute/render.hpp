#pragma once

#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "commute/verify.hpp"

namespace commute {

enum class OutputFormat { Table, Json, Csv };

inline OutputFormat parse_format(const std::string& s) {
  if (s == "table") return OutputFormat::Table;
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  throw ConstraintError("unknown output format '" + s +
                        "' (expected table, json, or csv)");
}

namespace detail {

inline std::string csv_quote(const std::string& s) {
  bool needs = false;
  for (char c : s) {
    if (c == ',' || c == '"' || c == '\n' || c == '\r') {
      needs = true;
      break;
    }
  }
  if (!needs) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

inline std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

inline nlohmann::ordered_json spectrum_to_json(const Spectrum& s) {
  nlohmann::ordered_json j;
  j["exact"] = s.integer_exact();
  j["rendered"] = s.render();
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (const auto& e : s.entries()) {
    nlohmann::ordered_json pair = nlohmann::ordered_json::array();
    if (s.integer_exact()) {
      pair.push_back(e.int_value);
    } else {
      pair.push_back(e.value);
    }
    pair.push_back(e.multiplicity);
    entries.push_back(std::move(pair));
  }
  j["entries"] = std::move(entries);
  return j;
}

}  // namespace detail

// Deterministic JSON for one verification report: given the same inputs the
// serialized bytes are identical across runs (timing is deliberately absent).
inline nlohmann::ordered_json report_to_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["spec"] = r.spec_text;
  j["group"] = r.group_name;
  j["order"] = r.order;
  j["center_order"] = r.center_order;
  j["class_count"] = r.class_count;
  j["centralizer_count"] = r.centralizer_count;
  j["is_ac"] = r.is_ac;
  j["clique_union"] = r.clique_union;
  j["vertex_count"] = r.vertex_count;
  j["edge_count"] = r.edge_count;
  j["clique_sizes"] = r.clique_sizes;
  nlohmann::ordered_json oracle;
  oracle["available"] = r.oracle_available;
  if (r.oracle_available) {
    oracle["method"] = r.oracle_method;
    oracle["spectrum"] = detail::spectrum_to_json(r.oracle_spectrum);
    if (r.oracle_energy_exact) {
      oracle["energy"] = *r.oracle_energy_exact;
    } else {
      oracle["energy"] = r.oracle_energy;
    }
  }
  oracle["numeric_note"] = r.numeric_note;
  j["oracle"] = std::move(oracle);
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  std::map<std::string, std::uint64_t> tally = {{"MATCH", 0},
                                                {"PAPER_SLIP", 0},
                                                {"FAIL", 0},
                                                {"NOT_APPLICABLE", 0}};
  for (const auto& row : r.rows) {
    nlohmann::ordered_json rj;
    rj["source"] = row.prediction.source;
    rj["classification"] = to_string(row.classification);
    ++tally[to_string(row.classification)];
    rj["expected_slip"] = row.expected_slip;
    if (row.prediction.spectrum) {
      rj["spectrum"] = detail::spectrum_to_json(*row.prediction.spectrum);
    }
    if (row.prediction.energy_printed) {
      rj["energy_printed"] = *row.prediction.energy_printed;
    }
    if (row.prediction.energy_from_spectrum) {
      rj["energy_from_spectrum"] = *row.prediction.energy_from_spectrum;
    }
    if (!row.prediction.admissible_energies.empty()) {
      rj["admissible_energies"] = row.prediction.admissible_energies;
    }
    rj["internally_inconsistent"] = row.prediction.internally_inconsistent();
    if (!row.prediction.note.empty()) rj["note"] = row.prediction.note;
    rj["detail"] = row.detail;
    rows.push_back(std::move(rj));
  }
  j["rows"] = std::move(rows);
  nlohmann::ordered_json summary;
  summary["MATCH"] = tally["MATCH"];
  summary["PAPER_SLIP"] = tally["PAPER_SLIP"];
  summary["FAIL"] = tally["FAIL"];
  summary["NOT_APPLICABLE"] = tally["NOT_APPLICABLE"];
  j["classification_summary"] = std::move(summary);
  return j;
}

inline nlohmann::ordered_json catalog_to_json(
    const std::vector<VerificationReport>& reports) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  std::uint64_t match = 0, slip = 0, fail = 0, na = 0, rows = 0;
  for (const auto& r : reports) {
    for (const auto& row : r.rows) {
      ++rows;
      switch (row.classification) {
        case Classification::Match: ++match; break;
        case Classification::PaperSlip: ++slip; break;
        case Classification::Fail: ++fail; break;
        case Classification::NotApplicable: ++na; break;
      }
    }
    arr.push_back(report_to_json(r));
  }
  j["reports"] = std::move(arr);
  nlohmann::ordered_json summary;
  summary["specs"] = reports.size();
  summary["rows"] = rows;
  summary["MATCH"] = match;
  summary["PAPER_SLIP"] = slip;
  summary["FAIL"] = fail;
  summary["NOT_APPLICABLE"] = na;
  j["summary"] = std::move(summary);
  return j;
}

inline std::string report_to_table(const VerificationReport& r,
                                   bool with_timing = true) {
  std::string out;
  out += "spec: " + r.spec_text + "   group: " + r.group_name +
         "   order: " + std::to_string(r.order) + "\n";
  out += "|Z|: " + std::to_string(r.center_order) +
         "   classes: " + std::to_string(r.class_count) +
         "   distinct centralizers: " + std::to_string(r.centralizer_count) +
         "   all centralizers abelian: " + (r.is_ac ? "yes" : "no") + "\n";
  out += "vertices: " + std::to_string(r.vertex_count) +
         "   edges: " + std::to_string(r.edge_count) +
         "   clique union: " + (r.clique_union ? "yes" : "no");
  if (r.clique_union) {
    out += "   cliques: [";
    for (std::size_t i = 0; i < r.clique_sizes.size(); ++i) {
      if (i) out += ", ";
      out += std::to_string(r.clique_sizes[i]);
    }
    out += "]";
  }
  out += "\n";
  if (r.oracle_available) {
    out += "measured spectrum (" + r.oracle_method +
           "): " + r.oracle_spectrum.render() + "\n";
    out += "measured energy: ";
    out += r.oracle_energy_exact ? std::to_string(*r.oracle_energy_exact)
                                 : detail::format_double(r.oracle_energy);
    out += "\n";
  } else {
    out += "measured spectrum: unavailable\n";
  }
  out += "eigensolver: " + r.numeric_note + "\n";
  if (r.rows.empty()) {
    out += "no tabulated claims apply\n";
  }
  for (const auto& row : r.rows) {
    out += "  " + row.prediction.source;
    if (row.prediction.source.size() < 28) {
      out += std::string(28 - row.prediction.source.size(), ' ');
    } else {
      out += " ";
    }
    out += to_string(row.classification);
    if (row.expected_slip) out += " (expected)";
    out += "  " + row.detail + "\n";
  }
  if (with_timing) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "elapsed: %.1f ms\n", r.elapsed_ms);
    out += buf;
  }
  return out;
}

inline std::string catalog_to_table(const std::vector<VerificationReport>& reports) {
  std::string out;
  std::uint64_t match = 0, slip = 0, fail = 0, na = 0;
  double total_ms = 0.0;
  for (const auto& r : reports) {
    std::uint64_t m = 0, s = 0, f = 0, n = 0;
    for (const auto& row : r.rows) {
      switch (row.classification) {
        case Classification::Match: ++m; break;
        case Classification::PaperSlip: ++s; break;
        case Classification::Fail: ++f; break;
        case Classification::NotApplicable: ++n; break;
      }
    }
    match += m;
    slip += s;
    fail += f;
    na += n;
    total_ms += r.elapsed_ms;
    std::string line = r.spec_text;
    if (line.size() < 12) line += std::string(12 - line.size(), ' ');
    line += " " + r.group_name;
    if (line.size() < 28) line += std::string(28 - line.size(), ' ');
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  " order %-5llu vertices %-5llu rows: %llu MATCH, %llu "
                  "PAPER_SLIP, %llu FAIL, %llu N/A",
                  static_cast<unsigned long long>(r.order),
                  static_cast<unsigned long long>(r.vertex_count),
                  static_cast<unsigned long long>(m),
                  static_cast<unsigned long long>(s),
                  static_cast<unsigned long long>(f),
                  static_cast<unsigned long long>(n));
    out += line + buf + "\n";
    for (const auto& row : r.rows) {
      if (row.classification == Classification::Fail ||
          (row.classification == Classification::PaperSlip && !row.expected_slip)) {
        out += "    ! " + row.prediction.source + " " +
               to_string(row.classification) + ": " + row.detail + "\n";
      }
    }
  }
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "total: %zu specs, %llu MATCH, %llu PAPER_SLIP, %llu FAIL, "
                "%llu N/A (%.1f ms)\n",
                reports.size(), static_cast<unsigned long long>(match),
                static_cast<unsigned long long>(slip),
                static_cast<unsigned long long>(fail),
                static_cast<unsigned long long>(na), total_ms);
  out += buf;
  return out;
}

inline std::string reports_to_csv(const std::vector<VerificationReport>& reports) {
  std::string out =
      "spec,group,order,source,classification,expected_slip,"
      "energy_printed,energy_measured,spectrum_printed,spectrum_measured,"
      "detail\n";
  for (const auto& r : reports) {
    std::string measured_spectrum =
        r.oracle_available ? r.oracle_spectrum.render() : "";
    std::string measured_energy;
    if (r.oracle_available) {
      measured_energy = r.oracle_energy_exact
                            ? std::to_string(*r.oracle_energy_exact)
                            : detail::format_double(r.oracle_energy);
    }
    for (const auto& row : r.rows) {
      out += detail::csv_quote(r.spec_text) + ",";
      out += detail::csv_quote(r.group_name) + ",";
      out += std::to_string(r.order) + ",";
      out += detail::csv_quote(row.prediction.source) + ",";
      out += to_string(row.classification) + ",";
      out += row.expected_slip ? "true," : "false,";
      out += row.prediction.energy_printed
                 ? std::to_string(*row.prediction.energy_printed)
                 : "";
      out += ",";
      out += measured_energy + ",";
      out += detail::csv_quote(
                 row.prediction.spectrum ? row.prediction.spectrum->render() : "") +
             ",";
      out += detail::csv_quote(measured_spectrum) + ",";
      out += detail::csv_quote(row.detail) + "\n";
    }
  }
  return out;
}

}  // namespace commute
