#pragma once

// Identity config files (JSON):
//
//   {
//     "p": 37,
//     "chi": "quartic-i",
//     "terms": [ {"A": "1/1,0/1", "B": 1, "C": 34}, ... ],
//     "rhs": {"kind": "sigma_prime", "coefficients": ["18/1,0/1"]}
//   }
//
// A is a Gaussian rational "re_num/re_den,im_num/im_den". rhs.kind is
// "sigma_prime" (one coefficient) or "tilde_hat" (coefficients of sigma~
// and sigma^, in that order).

#include <filesystem>
#include <stdexcept>
#include <string>

#include "farkas/identities.hpp"

namespace farkas {

/// Carries "source:line:column: message" or "source: field 'path': message".
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

ConfiguredIdentity parse_identity_config(const std::string& text, const std::string& source = "<config>");

/// Throws IoError when the file cannot be read, ConfigError when it is malformed.
ConfiguredIdentity load_identity_config(const std::filesystem::path& path);

std::string identity_config_to_string(const ConfiguredIdentity& cfg);

}  // namespace farkas
