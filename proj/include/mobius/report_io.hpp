#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "mobius/claims.hpp"

namespace mobius {

/// Text report: one PASS/FAIL line per claim, caveats indented below.
inline std::string render_text(const std::vector<ClaimReport>& reports,
                               const Config& config) {
  std::string out;
  out += "claims: " + std::to_string(reports.size()) +
         "  (half-width " + claims_detail::fmt(config.half_width) +
         ", samples " + std::to_string(config.samples) + ")\n";
  for (const ClaimReport& r : reports) {
    out += (r.pass ? "PASS " : "FAIL ") + r.claim_id + "  " + r.description + "\n";
    out += "       computed: " + r.computed + "\n";
    out += "       expected: " + r.expected + "\n";
    if (!r.caveat.empty())
      out += "       caveat:   " + r.caveat + "\n";
  }
  out += all_pass(reports) ? "all claims pass\n" : "some claims FAILED\n";
  return out;
}

/// Stable JSON document {"claims": [...], "config": {...}}.  Field order and
/// values are deterministic for a fixed config; no timestamps are emitted.
inline nlohmann::ordered_json reports_to_json(
    const std::vector<ClaimReport>& reports, const Config& config) {
  nlohmann::ordered_json doc;
  doc["claims"] = nlohmann::ordered_json::array();
  for (const ClaimReport& r : reports) {
    nlohmann::ordered_json c;
    c["claim_id"] = r.claim_id;
    c["description"] = r.description;
    c["computed"] = r.computed;
    c["expected"] = r.expected;
    c["provenance"] = r.provenance;
    c["pass"] = r.pass;
    if (r.caveat.empty())
      c["caveat"] = nullptr;
    else
      c["caveat"] = r.caveat;
    doc["claims"].push_back(c);
  }
  doc["config"]["half_width"] = config.half_width;
  doc["config"]["samples"] = config.samples;
  doc["config"]["tolerance"] = config.tolerance;
  doc["config"]["homotopy_steps"] = config.homotopy_steps;
  doc["config"]["output"] = config.output;
  return doc;
}

inline std::string render_json(const std::vector<ClaimReport>& reports,
                               const Config& config) {
  return reports_to_json(reports, config).dump(2) + "\n";
}

inline std::string render(const std::vector<ClaimReport>& reports,
                          const Config& config) {
  return config.output == "json" ? render_json(reports, config)
                                 : render_text(reports, config);
}

} // namespace mobius
