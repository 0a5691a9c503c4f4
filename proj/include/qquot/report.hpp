#pragma once

// JSON forms of check results, sweep reports and checkpoints. Coefficients are
// written as decimal strings so arbitrarily large values survive a round trip.

#include "qquot/harness.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace qquot {

inline constexpr std::string_view kToolVersion = "0.1.0";
inline constexpr int kReportSchemaVersion = 1;
inline constexpr int kCheckpointVersion = 1;

nlohmann::json to_json(const IntPolynomial& p);
IntPolynomial polynomial_from_json(const nlohmann::json& j);

nlohmann::json to_json(const AnySpec& spec);
AnySpec spec_from_json(const nlohmann::json& j);

nlohmann::json to_json(const PropertyRecord& rec);
PropertyRecord properties_from_json(const nlohmann::json& j);

/// Timings are the only nondeterministic fields; leave them out for
/// byte-comparable output.
nlohmann::json to_json(const CheckResult& r, bool include_timing = true);
CheckResult check_result_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SweepReport& r, bool include_timing = true);
SweepReport sweep_report_from_json(const nlohmann::json& j);

/// "(n,k,l)=(11,3,2)", "m=1 a=(1,3,1)", "corollary10(5)".
std::string spec_to_string(const AnySpec& spec);

/// Envelope shared by every machine-readable output.
nlohmann::json make_document(std::string_view kind, const std::vector<std::string>& command, nlohmann::json body);

/// Atomic write (temp file + rename). Throws CheckpointError on I/O failure.
void write_checkpoint(const std::filesystem::path& path, const SweepReport& report);
/// Throws CheckpointError if unreadable, malformed or of another version.
SweepReport read_checkpoint(const std::filesystem::path& path);

}  // namespace qquot
