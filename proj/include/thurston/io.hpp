#pragma once

#include <string>
#include <vector>

#include "thurston/boundary.hpp"
#include "thurston/marked_group.hpp"
#include "thurston/spectra.hpp"

// Forward declaration keeps the json header out of this interface.
#include <nlohmann/json_fwd.hpp>

namespace thurston::io {

// Group files: { "rank": int, "generators": [[[a,b],[c,d]], ...],
// "peripherals": [[+-i, ...], ...], "label": str }. Matrices are
// renormalized on load and the group is normalized so the first peripheral
// is z -> z + 1. Parse failures name the offending field.
MarkedGroup group_from_json(const nlohmann::json& doc);
MarkedGroup load_group(const std::string& path);
nlohmann::json group_to_json(const MarkedGroup& g);
void save_group(const MarkedGroup& g, const std::string& path);

// Pseudo-paths builtin:torus:x,y,plus|minus and builtin:tps construct the
// built-in surfaces; anything else is read as a file path.
bool is_builtin_spec(const std::string& spec);
MarkedGroup load_group_or_builtin(const std::string& spec);

nlohmann::json estimate_to_json(const ExponentEstimate& e);
nlohmann::json distance_report_to_json(const DistanceReport& r);
nlohmann::json holder_fit_to_json(const HolderFit& f);
nlohmann::json norm_estimate_to_json(const NormEstimate& n);
nlohmann::json compatibility_report_to_json(const CompatibilityReport& r);
nlohmann::json classify_group_to_json(const MarkedGroup& g);

// Locale-independent formatting; shortest round-trip representation.
std::string format_double(double v);

// CSV emitters: header row, '.' decimal separator, LF line endings.
std::string trace_csv(const ExponentEstimate& e);
std::string samples_csv(const std::vector<BoundarySample>& samples);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace thurston::io
