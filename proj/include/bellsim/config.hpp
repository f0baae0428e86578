#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "bellsim/harness.hpp"

namespace bellsim {

// Config file rejected: `key` names the offending entry (dotted for nested
// keys, e.g. "geometry.alice_beta").
class ConfigError : public std::runtime_error {
  public:
    ConfigError(std::string key, const std::string& what)
        : std::runtime_error(key + ": " + what), key_(std::move(key))
    {
    }

    const std::string& key() const { return key_; }

  private:
    std::string key_;
};

// Parses and schema-validates a JSON experiment config. Required keys:
//   geometry {source_z, alice_z, bob_z, alice_beta, bob_beta, emission_t},
//   model, alice_settings, bob_settings, trials_per_pair, seed.
// Optional: epsilon (default 1e-9). Unknown keys are rejected.
ExperimentConfig parse_config(const std::string& text);

// parse_config over the file contents; throws ConfigError on unreadable
// input as well.
ExperimentConfig load_config(const std::filesystem::path& path);

}  // namespace bellsim
