#ifndef PRS_REPORT_HPP
#define PRS_REPORT_HPP

#include <string>

#include <json.hpp>

#include "prs/deepholes.hpp"

namespace prs {

inline constexpr const char* kVersion = "1.0.0";
inline constexpr const char* kReportSchema = "prs-report/1";

using Json = nlohmann::ordered_json;

enum class ReportFormat { Text, Jsonish, Csv };

/// Shared envelope: schema, version, command echo, parameters.
Json report_envelope(const std::string& command, const Field& F);

Json field_info_report(const Field& F);
Json code_info_report(const PRSCode& code);
Json covering_radius_report(const Field& F, const PRSCode& code,
                            const CoveringRadiusResult& r);
Json deep_holes_enumerate_report(const Field& F, const PRSCode& code, unsigned rho,
                                 bool rho_by_special_case,
                                 const std::vector<DeepHoleClass>& classes);
Json deep_holes_families_report(const Field& F, const PRSCode& code, unsigned rho,
                                bool conditional_on_conjecture,
                                const std::vector<DeepHoleClass>& classes);
Json classification_report(const Field& F, const ClassificationReport& rep);
Json orbit_report(const Field& F, unsigned m, const ProjPoint& point,
                  const OrbitResult& res);

/// Human-readable rendering of any of the above reports.
std::string render_text(const Json& report);
/// CSV rendering of a report's class table.
std::string render_csv(const Json& report);

std::string render(const Json& report, ReportFormat fmt);

}  // namespace prs

#endif
