#pragma once

// Serialization of verification results. Exact quantities are written as
// reduced fraction strings ("a/b", Gaussian values as "a/b+c/di"); decimal
// columns are for plotting only.

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "farkas/charpoly.hpp"
#include "farkas/identities.hpp"

namespace farkas {

using json = nlohmann::ordered_json;

/// Envelope {command, params, outcome, first_failure?, elapsed_ms}.
json report_to_json(const VerificationReport& r);
/// Inverse of report_to_json; throws std::invalid_argument on schema errors.
VerificationReport report_from_json(const json& j);

std::string report_to_text(const VerificationReport& r);
std::string report_to_csv(const VerificationReport& r);

/// Header "n,kron,lhs,rhs,ratio,ratio_dec"; real-valued cells use the
/// rational form, complex ones the Gaussian form.
std::string asymptotic_to_csv(const AsymptoticReport& rep);
json asymptotic_to_json(const AsymptoticReport& rep);

json obstruction_to_json(const EvenObstructionReport& rep);
std::string obstruction_to_text(const EvenObstructionReport& rep);

/// "a/b" when z is real, "a/b+c/di" otherwise.
std::string exact_string(const GaussianRational& z);
/// Twelve places after the point; "x+yi" form for non-real values.
std::string decimal_string(const GaussianRational& z);

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Writes to path.tmp and renames over path. Throws IoError.
void write_file_atomically(const std::filesystem::path& path, const std::string& contents);

}  // namespace farkas
